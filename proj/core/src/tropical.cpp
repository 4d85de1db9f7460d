#include "twh/tropical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twh/error.hpp"

namespace twh {

namespace {

void check_tuples(std::span<const int> mu, std::span<const int> nu) {
  if (mu.empty() || nu.empty()) throw Error(ErrorKind::InvalidInput, "mu and nu must be non-empty");
  for (auto parts : {mu, nu}) {
    for (int part : parts) {
      if (part < 1) throw Error(ErrorKind::InvalidInput, "parts must be positive");
    }
  }
  if (std::accumulate(mu.begin(), mu.end(), 0) != std::accumulate(nu.begin(), nu.end(), 0)) {
    throw Error(ErrorKind::InvalidInput, "mu and nu must have the same size");
  }
}

int branch_points(int genus, std::span<const int> mu, std::span<const int> nu) {
  if (genus < 0) throw Error(ErrorKind::InvalidInput, "genus must be non-negative");
  int b = genus - 1 + static_cast<int>(mu.size() + nu.size());
  if (b <= 0) throw Error(ErrorKind::NoBranchPoints, "b = " + std::to_string(b) + " is not positive");
  return b;
}

/// Vertex codes for one choice of slot swaps: a 3-valent pair at level L gets
/// codes 2L and 2L+1, a 4-valent vertex gets 2L.
class SlotCoder {
 public:
  explicit SlotCoder(const TwistedCover& cover) : cover_(cover), codes_(cover.vertices.size()) {
    for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
      const auto& vertex = cover.vertices[v];
      if (vertex.valence == 4) continue;
      if (static_cast<int>(v) < vertex.partner) pair_levels_.emplace_back(static_cast<int>(v), vertex.partner);
    }
    set_flips(0);
  }

  std::size_t flip_count() const { return std::size_t{1} << pair_levels_.size(); }

  void set_flips(std::size_t bits) {
    for (std::size_t v = 0; v < cover_.vertices.size(); ++v) codes_[v] = 2 * cover_.vertices[v].level;
    for (std::size_t k = 0; k < pair_levels_.size(); ++k) {
      int flip = (bits >> k) & 1U ? 1 : 0;
      codes_[static_cast<std::size_t>(pair_levels_[k].first)] += flip;
      codes_[static_cast<std::size_t>(pair_levels_[k].second)] += 1 - flip;
    }
  }

  std::array<int, 2> code(const Endpoint& p) const {
    switch (p.kind) {
      case Endpoint::Kind::In: return {0, cover_.labeled ? p.index / 2 : 0};
      case Endpoint::Kind::Out: return {2, cover_.labeled ? p.index / 2 : 0};
      case Endpoint::Kind::Inner: break;
    }
    return {1, codes_[static_cast<std::size_t>(p.index)]};
  }

  CoverKey key() const {
    CoverKey out;
    out.reserve(cover_.edges.size());
    for (const auto& e : cover_.edges) {
      auto s = code(e.src);
      auto d = code(e.dst);
      out.push_back({s[0], s[1], d[0], d[1], e.weight});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const TwistedCover& cover_;
  std::vector<int> codes_;
  std::vector<std::pair<int, int>> pair_levels_;
};

struct Strand {
  int weight;
  Endpoint src;
};

struct StrandPair {
  Strand first;
  Strand second;
};

class CoverSearch {
 public:
  CoverSearch(int genus, int b, std::span<const int> mu, std::span<const int> nu, const TropicalOptions& options)
      : genus_(genus), b_(b), nu_(nu.begin(), nu.end()), options_(options) {
    draft_.genus = genus;
    draft_.b = b;
    draft_.mu.assign(mu.begin(), mu.end());
    draft_.nu = nu_;
    draft_.labeled = options.labeled_ends;
    sorted_nu_ = nu_;
    std::sort(sorted_nu_.begin(), sorted_nu_.end());
  }

  std::vector<TwistedCover> run() {
    std::vector<StrandPair> pairs;
    for (int k = 0; k < static_cast<int>(draft_.mu.size()); ++k) {
      int w = draft_.mu[static_cast<std::size_t>(k)];
      pairs.push_back({{w, Endpoint::in_end(2 * k)}, {w, Endpoint::in_end(2 * k + 1)}});
    }
    descend(1, pairs);
    return std::move(found_);
  }

 private:
  int add_vertex(int level, int valence, int partner) {
    draft_.vertices.push_back({level, valence, partner});
    return static_cast<int>(draft_.vertices.size()) - 1;
  }

  void add_edge_pair(const Strand& a, const Strand& b, Endpoint da, Endpoint db) {
    int e = static_cast<int>(draft_.edges.size());
    draft_.edges.push_back({a.src, da, a.weight, e + 1});
    draft_.edges.push_back({b.src, db, b.weight, e});
  }

  void rewind(std::size_t vertices, std::size_t edges) {
    draft_.vertices.resize(vertices);
    draft_.edges.resize(edges);
  }

  static std::vector<StrandPair> without(const std::vector<StrandPair>& pairs, std::size_t i, std::size_t j) {
    std::vector<StrandPair> rest;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (k != i && k != j) rest.push_back(pairs[k]);
    }
    return rest;
  }

  void descend(int level, const std::vector<StrandPair>& pairs) {
    const int remaining = b_ - level + 1;
    if (std::abs(static_cast<int>(pairs.size()) - static_cast<int>(nu_.size())) > remaining) return;
    if (level > b_) {
      finish(pairs);
      return;
    }
    const std::size_t nv = draft_.vertices.size();
    const std::size_t ne = draft_.edges.size();
    const std::size_t np = pairs.size();

    // Twin join: two pairs merge, with either of the two ways to match sheets.
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = i + 1; j < np; ++j) {
        for (bool twist : {false, true}) {
          const auto& a = pairs[i];
          Strand c = twist ? pairs[j].second : pairs[j].first;
          Strand c2 = twist ? pairs[j].first : pairs[j].second;
          int u = add_vertex(level, 3, static_cast<int>(nv) + 1);
          int u2 = add_vertex(level, 3, u);
          add_edge_pair(a.first, a.second, Endpoint::inner(u), Endpoint::inner(u2));
          add_edge_pair(c, c2, Endpoint::inner(u), Endpoint::inner(u2));
          auto next = without(pairs, i, j);
          int w = a.first.weight + c.weight;
          next.push_back({{w, Endpoint::inner(u)}, {w, Endpoint::inner(u2)}});
          descend(level + 1, next);
          rewind(nv, ne);
        }
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      const auto& a = pairs[i];
      const int w = a.first.weight;
      // Twin cut into (c, w - c).
      for (int c = 1; 2 * c <= w; ++c) {
        int u = add_vertex(level, 3, static_cast<int>(nv) + 1);
        int u2 = add_vertex(level, 3, u);
        add_edge_pair(a.first, a.second, Endpoint::inner(u), Endpoint::inner(u2));
        auto next = without(pairs, i, np);
        next.push_back({{c, Endpoint::inner(u)}, {c, Endpoint::inner(u2)}});
        next.push_back({{w - c, Endpoint::inner(u)}, {w - c, Endpoint::inner(u2)}});
        descend(level + 1, next);
        rewind(nv, ne);
      }
      // One 4-valent vertex on the pair.
      if (options_.prune_weight_one && w == 1) continue;
      int v = add_vertex(level, 4, static_cast<int>(nv));
      add_edge_pair(a.first, a.second, Endpoint::inner(v), Endpoint::inner(v));
      auto next = without(pairs, i, np);
      next.push_back({{w, Endpoint::inner(v)}, {w, Endpoint::inner(v)}});
      descend(level + 1, next);
      rewind(nv, ne);
    }
  }

  void finish(const std::vector<StrandPair>& pairs) {
    std::vector<int> weights;
    for (const auto& p : pairs) weights.push_back(p.first.weight);
    std::sort(weights.begin(), weights.end());
    if (weights != sorted_nu_) return;
    std::vector<bool> used(pairs.size(), false);
    assign(pairs, used, 0);
  }

  // Attaches out-end pair j to some unused strand pair of weight nu_j. With
  // unlabeled ends one matching suffices.
  bool assign(const std::vector<StrandPair>& pairs, std::vector<bool>& used, std::size_t j) {
    if (j == nu_.size()) {
      record();
      return !options_.labeled_ends;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (used[k] || pairs[k].first.weight != nu_[j]) continue;
      used[k] = true;
      const std::size_t ne = draft_.edges.size();
      add_edge_pair(pairs[k].first, pairs[k].second, Endpoint::out_end(2 * static_cast<int>(j)),
                    Endpoint::out_end(2 * static_cast<int>(j) + 1));
      bool done = assign(pairs, used, j + 1);
      draft_.edges.resize(ne);
      used[k] = false;
      if (done) return true;
    }
    return false;
  }

  void record() {
    if (!connected_with_genus()) return;
    auto key = canonical_key(draft_);
    if (seen_.emplace(std::move(key), found_.size()).second) found_.push_back(draft_);
  }

  bool connected_with_genus() const {
    const int nv = static_cast<int>(draft_.vertices.size());
    const int in_ends = 2 * static_cast<int>(draft_.mu.size());
    const int nodes = nv + in_ends + 2 * static_cast<int>(nu_.size());
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    auto node = [&](const Endpoint& p) {
      switch (p.kind) {
        case Endpoint::Kind::In: return nv + p.index;
        case Endpoint::Kind::Out: return nv + in_ends + p.index;
        case Endpoint::Kind::Inner: break;
      }
      return p.index;
    };
    int components = nodes;
    for (const auto& e : draft_.edges) {
      int a = find(node(e.src));
      int b = find(node(e.dst));
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    if (components != 1) return false;
    int betti = static_cast<int>(draft_.edges.size()) - nodes + 1;
    if (betti != genus_) throw std::logic_error("enumerated a connected cover of the wrong genus");
    return true;
  }

  int genus_;
  int b_;
  std::vector<int> nu_;
  std::vector<int> sorted_nu_;
  TropicalOptions options_;
  TwistedCover draft_;
  std::map<CoverKey, std::size_t> seen_;
  std::vector<TwistedCover> found_;
};

}  // namespace

CoverKey canonical_key(const TwistedCover& cover) {
  SlotCoder coder(cover);
  CoverKey best = coder.key();
  for (std::size_t bits = 1; bits < coder.flip_count(); ++bits) {
    coder.set_flips(bits);
    best = std::min(best, coder.key());
  }
  return best;
}

std::vector<TwistedCover> enumerate_twisted_covers(int genus, std::span<const int> mu, std::span<const int> nu,
                                                   const TropicalOptions& options) {
  check_tuples(mu, nu);
  const int b = branch_points(genus, mu, nu);
  return CoverSearch(genus, b, mu, nu, options).run();
}

std::vector<TwistedCover> enumerate_twisted_covers(int genus, const Partition& mu, const Partition& nu,
                                                   const TropicalOptions& options) {
  return enumerate_twisted_covers(genus, mu.view(), nu.view(), options);
}

Integer automorphism_order(const TwistedCover& cover) {
  // Vertex part: slot swaps that leave the coded edge multiset unchanged.
  SlotCoder coder(cover);
  const CoverKey identity = coder.key();
  Integer vertex_maps = 1;
  for (std::size_t bits = 1; bits < coder.flip_count(); ++bits) {
    coder.set_flips(bits);
    if (coder.key() == identity) ++vertex_maps;
  }

  // Edge part: for a fixed vertex map, the edges of one (src, dst, weight)
  // class may be permuted as long as the bijection commutes with iota.
  coder.set_flips(0);
  std::map<std::array<int, 5>, int> classes;
  for (const auto& entry : identity) ++classes[entry];
  std::vector<bool> three_valent_level(static_cast<std::size_t>(cover.b + 1), false);
  for (const auto& v : cover.vertices) {
    if (v.valence == 3) three_valent_level[static_cast<std::size_t>(v.level)] = true;
  }
  auto iota_code = [&](int kind, int code) {
    return kind == 1 && three_valent_level[static_cast<std::size_t>(code / 2)] ? code ^ 1 : code;
  };
  Integer edge_maps = 1;
  for (const auto& [cls, count] : classes) {
    std::array<int, 5> image{cls[0], iota_code(cls[0], cls[1]), cls[2], iota_code(cls[2], cls[3]), cls[4]};
    if (image == cls) {
      const int half = count / 2;
      edge_maps *= factorial(static_cast<unsigned>(half));
      edge_maps <<= static_cast<mp_bitcnt_t>(half);
    } else if (cls < image) {
      edge_maps *= factorial(static_cast<unsigned>(count));
    }
  }
  return vertex_maps * edge_maps;
}

Rational cover_multiplicity(const TwistedCover& cover) {
  Integer numerator = 1;
  numerator <<= static_cast<mp_bitcnt_t>(cover.b);
  for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
    if (cover.vertices[v].valence != 4) continue;
    for (const auto& e : cover.edges) {
      if (e.dst.kind == Endpoint::Kind::Inner && e.dst.index == static_cast<int>(v)) {
        numerator *= e.weight - 1;
        break;
      }
    }
  }
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    const auto& edge = cover.edges[e];
    if (edge.src.kind == Endpoint::Kind::Inner && edge.dst.kind == Endpoint::Kind::Inner &&
        static_cast<std::size_t>(edge.partner) > e) {
      numerator *= edge.weight;
    }
  }
  Rational value(numerator, automorphism_order(cover));
  value.canonicalize();
  return value;
}

std::vector<GraphContribution> tropical_contributions(int genus, std::span<const int> mu, std::span<const int> nu,
                                                      const TropicalOptions& options) {
  std::vector<GraphContribution> out;
  for (auto& cover : enumerate_twisted_covers(genus, mu, nu, options)) {
    Integer aut = automorphism_order(cover);
    Rational mult = cover_multiplicity(cover);
    out.push_back({std::move(cover), std::move(aut), std::move(mult)});
  }
  return out;
}

Rational twisted_hurwitz_tropical(int genus, std::span<const int> mu, std::span<const int> nu,
                                  const TropicalOptions& options, const CoverFilter& filter) {
  Rational total = 0;
  for (const auto& cover : enumerate_twisted_covers(genus, mu, nu, options)) {
    if (!filter || filter(cover)) total += cover_multiplicity(cover);
  }
  return total;
}

Rational twisted_hurwitz_tropical(int genus, const Partition& mu, const Partition& nu) {
  return twisted_hurwitz_tropical(genus, mu.view(), nu.view());
}

Rational labeled_twisted_hurwitz(int genus, std::span<const int> mu, std::span<const int> nu,
                                 const CoverFilter& filter) {
  TropicalOptions options;
  options.labeled_ends = true;
  options.prune_weight_one = true;
  return twisted_hurwitz_tropical(genus, mu, nu, options, filter);
}

std::vector<EdgeSplit> symbolic_edge_splits(const TwistedCover& cover) {
  const QuotientGraph q = quotient(cover);
  if (q.genus != 0) {
    throw Error(ErrorKind::NonzeroQuotientGenus, "quotient genus is " + std::to_string(q.genus));
  }
  const int nv = static_cast<int>(q.vertices.size());
  auto node = [&](const Endpoint& p) {
    switch (p.kind) {
      case Endpoint::Kind::In: return nv + p.index;
      case Endpoint::Kind::Out: return nv + q.in_ends + p.index;
      case Endpoint::Kind::Inner: break;
    }
    return p.index;
  };
  const int nodes = nv + q.in_ends + q.out_ends;
  std::vector<EdgeSplit> out;
  for (std::size_t idx = 0; idx < q.edges.size(); ++idx) {
    const auto& cut = q.edges[idx];
    if (!cut.internal()) continue;
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(nodes));
    for (std::size_t k = 0; k < q.edges.size(); ++k) {
      if (k == idx) continue;
      int a = node(q.edges[k].src);
      int b = node(q.edges[k].dst);
      adjacent[static_cast<std::size_t>(a)].push_back(b);
      adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> reached(static_cast<std::size_t>(nodes), false);
    std::vector<int> stack{node(cut.src)};
    reached[static_cast<std::size_t>(stack.back())] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adjacent[static_cast<std::size_t>(x)]) {
        if (!reached[static_cast<std::size_t>(y)]) {
          reached[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    EdgeSplit split;
    split.quotient_edge = static_cast<int>(idx);
    for (int k = 0; k < q.in_ends; ++k) {
      if (reached[static_cast<std::size_t>(nv + k)]) split.in_labels.push_back(k);
    }
    for (int k = 0; k < q.out_ends; ++k) {
      if (reached[static_cast<std::size_t>(nv + q.in_ends + k)]) split.out_labels.push_back(k);
    }
    split.adjacent_to_two_valent = q.vertices[static_cast<std::size_t>(cut.src.index)].two_valent ||
                                   q.vertices[static_cast<std::size_t>(cut.dst.index)].two_valent;
    out.push_back(std::move(split));
  }
  return out;
}

bool has_delta_edge_at_two_valent(const TwistedCover& cover, const Wall& wall) {
  const Wall other = wall.complement(static_cast<int>(cover.mu.size()), static_cast<int>(cover.nu.size()));
  for (const auto& split : symbolic_edge_splits(cover)) {
    if (!split.adjacent_to_two_valent) continue;
    if ((split.in_labels == wall.I && split.out_labels == wall.J) ||
        (split.in_labels == other.I && split.out_labels == other.J)) {
      return true;
    }
  }
  return false;
}

Rational restricted_sum_delta_adjacent(std::span<const int> mu, std::span<const int> nu, const Wall& wall,
                                       const ChamberSignature& chamber) {
  check_tuples(mu, nu);
  const auto walls = wall_list(static_cast<int>(mu.size()), static_cast<int>(nu.size()));
  if (std::find(walls.begin(), walls.end(), wall) == walls.end()) {
    throw Error(ErrorKind::InvalidInput, "no wall " + wall.to_string() + " for this shape");
  }
  if (chamber_signature(mu, nu) != chamber) {
    throw Error(ErrorKind::NotInChamber, "point is not in chamber " + chamber.to_string());
  }
  return labeled_twisted_hurwitz(0, mu, nu, [&](const TwistedCover& cover) {
    return has_delta_edge_at_two_valent(cover, wall);
  });
}

CoverFilter four_valent_not_on_end(Endpoint::Kind kind, int label) {
  return [kind, label](const TwistedCover& cover) {
    for (const auto& e : cover.edges) {
      if (kind == Endpoint::Kind::In && e.src.kind == Endpoint::Kind::In && e.src.index / 2 == label &&
          e.dst.kind == Endpoint::Kind::Inner && cover.vertices[static_cast<std::size_t>(e.dst.index)].valence == 4) {
        return false;
      }
      if (kind == Endpoint::Kind::Out && e.dst.kind == Endpoint::Kind::Out && e.dst.index / 2 == label &&
          e.src.kind == Endpoint::Kind::Inner && cover.vertices[static_cast<std::size_t>(e.src.index)].valence == 4) {
        return false;
      }
    }
    return true;
  };
}

}  // namespace twh
