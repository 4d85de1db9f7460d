#include "twh/twisted_cover.hpp"

#include <numeric>

namespace twh {

int TwistedCover::four_valent_count() const {
  int c = 0;
  for (const auto& v : vertices) c += v.valence == 4 ? 1 : 0;
  return c;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string describe(const Endpoint& p) {
  switch (p.kind) {
    case Endpoint::Kind::In: return "in-end " + std::to_string(p.index);
    case Endpoint::Kind::Out: return "out-end " + std::to_string(p.index);
    case Endpoint::Kind::Inner: break;
  }
  return "vertex " + std::to_string(p.index);
}

}  // namespace

std::vector<std::string> validate_cover(const TwistedCover& cover) {
  std::vector<std::string> problems;
  const int nv = static_cast<int>(cover.vertices.size());
  const int ne = static_cast<int>(cover.edges.size());
  const int in_ends = 2 * static_cast<int>(cover.mu.size());
  const int out_ends = 2 * static_cast<int>(cover.nu.size());

  auto endpoint_ok = [&](const Endpoint& p, Endpoint::Kind end_kind, int end_count) {
    if (p.kind == Endpoint::Kind::Inner) return p.index >= 0 && p.index < nv;
    return p.kind == end_kind && p.index >= 0 && p.index < end_count;
  };
  for (int e = 0; e < ne; ++e) {
    const auto& edge = cover.edges[static_cast<std::size_t>(e)];
    if (!endpoint_ok(edge.src, Endpoint::Kind::In, in_ends) || !endpoint_ok(edge.dst, Endpoint::Kind::Out, out_ends) ||
        edge.partner < 0 || edge.partner >= ne || edge.weight < 1) {
      problems.push_back("edge " + std::to_string(e) + " is malformed");
      return problems;
    }
  }
  for (int v = 0; v < nv; ++v) {
    const auto& vertex = cover.vertices[static_cast<std::size_t>(v)];
    if (vertex.partner < 0 || vertex.partner >= nv || vertex.level < 1 || vertex.level > cover.b) {
      problems.push_back("vertex " + std::to_string(v) + " is malformed");
      return problems;
    }
  }

  // Ends: each end appears on exactly one edge and carries its part weight.
  std::vector<int> in_use(static_cast<std::size_t>(in_ends), 0);
  std::vector<int> out_use(static_cast<std::size_t>(out_ends), 0);
  std::vector<int> weight_in(static_cast<std::size_t>(nv), 0);
  std::vector<int> weight_out(static_cast<std::size_t>(nv), 0);
  std::vector<int> degree_in(static_cast<std::size_t>(nv), 0);
  std::vector<int> degree_out(static_cast<std::size_t>(nv), 0);
  for (const auto& edge : cover.edges) {
    if (edge.src.kind == Endpoint::Kind::In) {
      ++in_use[static_cast<std::size_t>(edge.src.index)];
      if (edge.weight != cover.mu[static_cast<std::size_t>(edge.src.index / 2)]) {
        problems.push_back(describe(edge.src) + " has the wrong weight");
      }
    } else {
      weight_out[static_cast<std::size_t>(edge.src.index)] += edge.weight;
      ++degree_out[static_cast<std::size_t>(edge.src.index)];
    }
    if (edge.dst.kind == Endpoint::Kind::Out) {
      ++out_use[static_cast<std::size_t>(edge.dst.index)];
      if (edge.weight != cover.nu[static_cast<std::size_t>(edge.dst.index / 2)]) {
        problems.push_back(describe(edge.dst) + " has the wrong weight");
      }
    } else {
      weight_in[static_cast<std::size_t>(edge.dst.index)] += edge.weight;
      ++degree_in[static_cast<std::size_t>(edge.dst.index)];
    }
    if (edge.src.kind == Endpoint::Kind::Inner && edge.dst.kind == Endpoint::Kind::Inner &&
        cover.vertices[static_cast<std::size_t>(edge.src.index)].level >=
            cover.vertices[static_cast<std::size_t>(edge.dst.index)].level) {
      problems.push_back("an edge does not increase the level");
    }
  }
  for (int k = 0; k < in_ends; ++k) {
    if (in_use[static_cast<std::size_t>(k)] != 1) problems.push_back("in-end " + std::to_string(k) + " is not used once");
  }
  for (int k = 0; k < out_ends; ++k) {
    if (out_use[static_cast<std::size_t>(k)] != 1) problems.push_back("out-end " + std::to_string(k) + " is not used once");
  }

  // Balancing, valence, no sinks or sources.
  std::vector<int> per_level(static_cast<std::size_t>(cover.b + 1), 0);
  for (int v = 0; v < nv; ++v) {
    const auto& vertex = cover.vertices[static_cast<std::size_t>(v)];
    const auto i = static_cast<std::size_t>(v);
    per_level[static_cast<std::size_t>(vertex.level)] += vertex.valence == 4 ? 2 : 1;
    if (weight_in[i] != weight_out[i]) problems.push_back("vertex " + std::to_string(v) + " is not balanced");
    if (degree_in[i] == 0 || degree_out[i] == 0) problems.push_back("vertex " + std::to_string(v) + " is a sink or source");
    if (degree_in[i] + degree_out[i] != vertex.valence) {
      problems.push_back("vertex " + std::to_string(v) + " has valence " + std::to_string(degree_in[i] + degree_out[i]));
    }
    if ((vertex.valence == 4) != (vertex.partner == v)) {
      problems.push_back("vertex " + std::to_string(v) + ": iota fixes exactly the 4-valent vertices fails");
    }
    if (cover.vertices[static_cast<std::size_t>(vertex.partner)].partner != v ||
        cover.vertices[static_cast<std::size_t>(vertex.partner)].level != vertex.level) {
      problems.push_back("vertex involution is not a level-preserving involution at " + std::to_string(v));
    }
  }
  for (int level = 1; level <= cover.b; ++level) {
    if (per_level[static_cast<std::size_t>(level)] != 2) {
      problems.push_back("level " + std::to_string(level) + " is not two 3-valent vertices or one 4-valent vertex");
    }
  }
  for (const auto& edge : cover.edges) {
    for (const auto& p : {edge.src, edge.dst}) {
      if (p.kind == Endpoint::Kind::Inner && cover.vertices[static_cast<std::size_t>(p.index)].valence == 4 &&
          edge.weight * 2 != weight_in[static_cast<std::size_t>(p.index)]) {
        problems.push_back("4-valent vertex " + std::to_string(p.index) + " has unequal weights");
      }
    }
  }

  // Edge involution: fixed-point free, weight preserving, compatible with the
  // vertex involution and with the end pairing 2k <-> 2k+1.
  auto iota = [&](const Endpoint& p) {
    if (p.kind == Endpoint::Kind::Inner) return Endpoint::inner(cover.vertices[static_cast<std::size_t>(p.index)].partner);
    return Endpoint{p.kind, p.index ^ 1};
  };
  for (int e = 0; e < ne; ++e) {
    const auto& edge = cover.edges[static_cast<std::size_t>(e)];
    const auto& mate = cover.edges[static_cast<std::size_t>(edge.partner)];
    if (edge.partner == e || mate.partner != e || mate.weight != edge.weight || !(mate.src == iota(edge.src)) ||
        !(mate.dst == iota(edge.dst))) {
      problems.push_back("edge involution is broken at edge " + std::to_string(e));
    }
  }

  // Connectivity and first Betti number, with every end a separate node.
  const int nodes = nv + in_ends + out_ends;
  UnionFind uf(nodes);
  int components = nodes;
  auto node = [&](const Endpoint& p) {
    switch (p.kind) {
      case Endpoint::Kind::In: return nv + p.index;
      case Endpoint::Kind::Out: return nv + in_ends + p.index;
      case Endpoint::Kind::Inner: break;
    }
    return p.index;
  };
  for (const auto& edge : cover.edges) {
    if (uf.unite(node(edge.src), node(edge.dst))) --components;
  }
  if (components != 1) problems.push_back("cover is disconnected");
  const int betti = ne - nodes + components;
  if (betti != cover.genus) {
    problems.push_back("first Betti number " + std::to_string(betti) + " != genus " + std::to_string(cover.genus));
  }
  return problems;
}

QuotientGraph quotient(const TwistedCover& cover) {
  QuotientGraph q;
  q.in_ends = static_cast<int>(cover.mu.size());
  q.out_ends = static_cast<int>(cover.nu.size());
  std::vector<int> orbit(cover.vertices.size(), -1);
  for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
    if (orbit[v] >= 0) continue;
    const auto& vertex = cover.vertices[v];
    orbit[v] = orbit[static_cast<std::size_t>(vertex.partner)] = static_cast<int>(q.vertices.size());
    q.vertices.push_back({vertex.level, vertex.valence == 4});
  }
  auto project = [&](const Endpoint& p) {
    if (p.kind == Endpoint::Kind::Inner) return Endpoint::inner(orbit[static_cast<std::size_t>(p.index)]);
    return Endpoint{p.kind, p.index / 2};
  };
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    const auto& edge = cover.edges[e];
    if (static_cast<std::size_t>(edge.partner) < e) continue;
    q.edges.push_back({project(edge.src), project(edge.dst), edge.weight});
  }
  const int nodes = static_cast<int>(q.vertices.size()) + q.in_ends + q.out_ends;
  UnionFind uf(nodes);
  int components = nodes;
  auto node = [&](const Endpoint& p) {
    switch (p.kind) {
      case Endpoint::Kind::In: return static_cast<int>(q.vertices.size()) + p.index;
      case Endpoint::Kind::Out: return static_cast<int>(q.vertices.size()) + q.in_ends + p.index;
      case Endpoint::Kind::Inner: break;
    }
    return p.index;
  };
  for (const auto& edge : q.edges) {
    if (uf.unite(node(edge.src), node(edge.dst))) --components;
  }
  q.genus = static_cast<int>(q.edges.size()) - nodes + components;
  return q;
}

}  // namespace twh
