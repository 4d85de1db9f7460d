#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "twh/chambers.hpp"
#include "twh/partition.hpp"
#include "twh/rational.hpp"
#include "twh/twisted_cover.hpp"

namespace twh {

struct TropicalOptions {
  /// Distinguish end pairs by their index in the mu / nu tuples. The weighted
  /// count is then |Aut mu| |Aut nu| times the unlabeled one, which is the
  /// function that is polynomial on each chamber.
  bool labeled_ends = false;
  /// Drop covers with a weight-1 4-valent vertex (they contribute 0).
  bool prune_weight_one = false;
};

/// Isomorphism-class key of an ordered cover: the lexicographically least
/// sorted edge list over all slot swaps at the 3-valent levels. Each entry is
/// (src kind, src code, dst kind, dst code, weight).
using CoverKey = std::vector<std::array<int, 5>>;

CoverKey canonical_key(const TwistedCover& cover);

/// Every ordered twisted monodromy graph of type (g, mu, nu) exactly once, in
/// order of discovery by the left-to-right move search. mu and nu are tuples;
/// in unlabeled mode their order is irrelevant.
std::vector<TwistedCover> enumerate_twisted_covers(int genus, std::span<const int> mu, std::span<const int> nu,
                                                   const TropicalOptions& options = {});
std::vector<TwistedCover> enumerate_twisted_covers(int genus, const Partition& mu, const Partition& nu,
                                                   const TropicalOptions& options = {});

/// Order of the group of level-preserving self-maps commuting with iota and
/// fixing ends up to equal weight (or up to label in labeled mode).
Integer automorphism_order(const TwistedCover& cover);

/// 2^b * prod_V (w_V - 1) * prod_{internal quotient edges} w(e) / |Aut|.
Rational cover_multiplicity(const TwistedCover& cover);

struct GraphContribution {
  TwistedCover cover;
  Integer aut_order;
  Rational multiplicity;
};

using CoverFilter = std::function<bool(const TwistedCover&)>;

std::vector<GraphContribution> tropical_contributions(int genus, std::span<const int> mu, std::span<const int> nu,
                                                      const TropicalOptions& options = {});

/// Sum of cover_multiplicity over enumerate_twisted_covers, optionally
/// restricted to covers accepted by `filter`.
Rational twisted_hurwitz_tropical(int genus, std::span<const int> mu, std::span<const int> nu,
                                  const TropicalOptions& options = {}, const CoverFilter& filter = {});
Rational twisted_hurwitz_tropical(int genus, const Partition& mu, const Partition& nu);

/// End-labeled count |Aut mu||Aut nu| h~_g(mu, nu) at an arbitrary tuple.
Rational labeled_twisted_hurwitz(int genus, std::span<const int> mu, std::span<const int> nu,
                                 const CoverFilter& filter = {});

/// For an internal quotient edge: the in-end and out-end labels on its source
/// side, so w(e) = sum_{I'} mu_i - sum_{J'} nu_j.
struct EdgeSplit {
  int quotient_edge = 0;
  std::vector<int> in_labels;
  std::vector<int> out_labels;
  /// Whether the edge touches the 2-valent vertex of the quotient.
  bool adjacent_to_two_valent = false;
};

/// Splits for every internal quotient edge. Throws NonzeroQuotientGenus when
/// the quotient is not a tree.
std::vector<EdgeSplit> symbolic_edge_splits(const TwistedCover& cover);

/// Whether some quotient edge at the 2-valent vertex has split (I, J) or its
/// complement.
bool has_delta_edge_at_two_valent(const TwistedCover& cover, const Wall& wall);

/// h0^{C,delta} at a concrete point: the labeled genus-0 count restricted to
/// covers with a wall edge adjacent to the 2-valent vertex. Throws
/// NotInChamber if the point's signature differs from `chamber`.
Rational restricted_sum_delta_adjacent(std::span<const int> mu, std::span<const int> nu, const Wall& wall,
                                       const ChamberSignature& chamber);

/// Accepts covers whose 4-valent vertex does not touch the given end pair.
CoverFilter four_valent_not_on_end(Endpoint::Kind kind, int label);

}  // namespace twh
