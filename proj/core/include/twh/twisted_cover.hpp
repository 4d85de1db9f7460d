#pragma once

#include <string>
#include <vector>

namespace twh {

/// Where an edge starts or ends. In-ends and out-ends are numbered per end
/// (2 ends per part, ends 2k and 2k+1 carrying part k); inner endpoints refer
/// to an entry of TwistedCover::vertices.
struct Endpoint {
  enum class Kind { In, Inner, Out };
  Kind kind = Kind::Inner;
  int index = 0;

  bool operator==(const Endpoint&) const = default;

  static Endpoint in_end(int index) { return {Kind::In, index}; }
  static Endpoint inner(int index) { return {Kind::Inner, index}; }
  static Endpoint out_end(int index) { return {Kind::Out, index}; }
};

struct CoverVertex {
  int level = 0;    // 1-based branch slot
  int valence = 3;  // 3 or 4
  int partner = 0;  // iota(v); equals v exactly for 4-valent vertices
};

struct CoverEdge {
  Endpoint src;
  Endpoint dst;
  int weight = 1;
  int partner = 0;  // iota(e), never e itself
};

/// A twisted monodromy graph with its vertex ordering fixed by level. The
/// in-end tuple mu and out-end tuple nu record the part carried by each end
/// pair; in labeled mode their order is the labeling.
struct TwistedCover {
  int genus = 0;
  int b = 0;
  std::vector<int> mu;
  std::vector<int> nu;
  bool labeled = false;
  std::vector<CoverVertex> vertices;
  std::vector<CoverEdge> edges;

  int four_valent_count() const;
};

/// Every violated structural invariant as a human-readable line; an empty
/// result means the cover is a well-formed twisted monodromy graph.
std::vector<std::string> validate_cover(const TwistedCover& cover);

/// Gamma / iota. Each iota-orbit of inner vertices becomes one vertex (a
/// 4-valent vertex becomes 2-valent); each pair of ends becomes one end
/// labeled by its part index.
struct QuotientGraph {
  struct Vertex {
    int level = 0;
    bool two_valent = false;
  };
  struct Edge {
    Endpoint src;  // In / Out indices are part indices here
    Endpoint dst;
    int weight = 1;
    bool internal() const { return src.kind == Endpoint::Kind::Inner && dst.kind == Endpoint::Kind::Inner; }
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int in_ends = 0;
  int out_ends = 0;
  /// First Betti number of the quotient with every end a separate leaf.
  int genus = 0;
};

QuotientGraph quotient(const TwistedCover& cover);

}  // namespace twh
