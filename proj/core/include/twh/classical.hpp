#pragma once

#include <span>
#include <vector>

#include "twh/partition.hpp"
#include "twh/rational.hpp"
#include "twh/twisted_cover.hpp"

namespace twh {

/// An ordered 3-valent monodromy graph of a classical double Hurwitz cover.
/// Level k carries exactly one vertex; ends are indexed by part.
struct ClassicalCover {
  int genus = 0;
  int r = 0;
  std::vector<int> mu;
  std::vector<int> nu;
  bool labeled = false;
  std::vector<int> vertex_levels;
  struct Edge {
    Endpoint src;
    Endpoint dst;
    int weight = 1;
  };
  std::vector<Edge> edges;
};

/// r = 2g - 2 + l(mu) + l(nu); throws NoBranchPoints when negative.
int classical_branch_count(int genus, std::span<const int> mu, std::span<const int> nu);

std::vector<ClassicalCover> enumerate_classical_covers(int genus, std::span<const int> mu, std::span<const int> nu,
                                                       bool labeled_ends = false);

/// prod over internal edges of w(e) / |Aut|; the single-edge trivial cover of
/// degree d has the cyclic automorphisms of its edge and weighs 1/d.
Rational classical_multiplicity(const ClassicalCover& cover);

Rational classical_double_hurwitz_tropical(int genus, std::span<const int> mu, std::span<const int> nu,
                                           bool labeled_ends = false);
Rational classical_double_hurwitz_tropical(int genus, const Partition& mu, const Partition& nu);

}  // namespace twh
