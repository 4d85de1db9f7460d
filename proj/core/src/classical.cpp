#include "twh/classical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "twh/error.hpp"

namespace twh {

int classical_branch_count(int genus, std::span<const int> mu, std::span<const int> nu) {
  if (genus < 0) throw Error(ErrorKind::InvalidInput, "genus must be non-negative");
  if (mu.empty() || nu.empty() ||
      std::accumulate(mu.begin(), mu.end(), 0) != std::accumulate(nu.begin(), nu.end(), 0)) {
    throw Error(ErrorKind::InvalidInput, "mu and nu must be non-empty with the same size");
  }
  for (auto parts : {mu, nu}) {
    for (int part : parts) {
      if (part < 1) throw Error(ErrorKind::InvalidInput, "parts must be positive");
    }
  }
  int r = 2 * genus - 2 + static_cast<int>(mu.size() + nu.size());
  if (r < 0) throw Error(ErrorKind::NoBranchPoints, "r = " + std::to_string(r) + " is negative");
  return r;
}

namespace {

using ClassicalKey = std::vector<std::array<int, 5>>;

ClassicalKey key_of(const ClassicalCover& cover) {
  auto code = [&](const Endpoint& p) -> std::array<int, 2> {
    switch (p.kind) {
      case Endpoint::Kind::In: return {0, cover.labeled ? p.index : 0};
      case Endpoint::Kind::Out: return {2, cover.labeled ? p.index : 0};
      case Endpoint::Kind::Inner: break;
    }
    return {1, cover.vertex_levels[static_cast<std::size_t>(p.index)]};
  };
  ClassicalKey key;
  for (const auto& e : cover.edges) {
    auto s = code(e.src);
    auto d = code(e.dst);
    key.push_back({s[0], s[1], d[0], d[1], e.weight});
  }
  std::sort(key.begin(), key.end());
  return key;
}

struct Strand {
  int weight;
  Endpoint src;
};

class ClassicalSearch {
 public:
  ClassicalSearch(int genus, int r, std::span<const int> mu, std::span<const int> nu, bool labeled) : r_(r) {
    draft_.genus = genus;
    draft_.r = r;
    draft_.mu.assign(mu.begin(), mu.end());
    draft_.nu.assign(nu.begin(), nu.end());
    draft_.labeled = labeled;
    sorted_nu_ = draft_.nu;
    std::sort(sorted_nu_.begin(), sorted_nu_.end());
  }

  std::vector<ClassicalCover> run() {
    std::vector<Strand> strands;
    for (int k = 0; k < static_cast<int>(draft_.mu.size()); ++k) {
      strands.push_back({draft_.mu[static_cast<std::size_t>(k)], Endpoint::in_end(k)});
    }
    descend(1, strands);
    return std::move(found_);
  }

 private:
  void descend(int level, const std::vector<Strand>& strands) {
    if (std::abs(static_cast<int>(strands.size()) - static_cast<int>(draft_.nu.size())) > r_ - level + 1) return;
    if (level > r_) {
      finish(strands);
      return;
    }
    const std::size_t ne = draft_.edges.size();
    const int u = static_cast<int>(draft_.vertex_levels.size());
    draft_.vertex_levels.push_back(level);
    for (std::size_t i = 0; i < strands.size(); ++i) {
      for (std::size_t j = i + 1; j < strands.size(); ++j) {
        draft_.edges.push_back({strands[i].src, Endpoint::inner(u), strands[i].weight});
        draft_.edges.push_back({strands[j].src, Endpoint::inner(u), strands[j].weight});
        std::vector<Strand> next;
        for (std::size_t k = 0; k < strands.size(); ++k) {
          if (k != i && k != j) next.push_back(strands[k]);
        }
        next.push_back({strands[i].weight + strands[j].weight, Endpoint::inner(u)});
        descend(level + 1, next);
        draft_.edges.resize(ne);
      }
    }
    for (std::size_t i = 0; i < strands.size(); ++i) {
      const int w = strands[i].weight;
      for (int c = 1; 2 * c <= w; ++c) {
        draft_.edges.push_back({strands[i].src, Endpoint::inner(u), w});
        std::vector<Strand> next;
        for (std::size_t k = 0; k < strands.size(); ++k) {
          if (k != i) next.push_back(strands[k]);
        }
        next.push_back({c, Endpoint::inner(u)});
        next.push_back({w - c, Endpoint::inner(u)});
        descend(level + 1, next);
        draft_.edges.resize(ne);
      }
    }
    draft_.vertex_levels.pop_back();
  }

  void finish(const std::vector<Strand>& strands) {
    std::vector<int> weights;
    for (const auto& s : strands) weights.push_back(s.weight);
    std::sort(weights.begin(), weights.end());
    if (weights != sorted_nu_) return;
    std::vector<bool> used(strands.size(), false);
    assign(strands, used, 0);
  }

  bool assign(const std::vector<Strand>& strands, std::vector<bool>& used, std::size_t j) {
    if (j == draft_.nu.size()) {
      record();
      return !draft_.labeled;
    }
    for (std::size_t k = 0; k < strands.size(); ++k) {
      if (used[k] || strands[k].weight != draft_.nu[j]) continue;
      used[k] = true;
      draft_.edges.push_back({strands[k].src, Endpoint::out_end(static_cast<int>(j)), strands[k].weight});
      bool done = assign(strands, used, j + 1);
      draft_.edges.pop_back();
      used[k] = false;
      if (done) return true;
    }
    return false;
  }

  void record() {
    const int nv = static_cast<int>(draft_.vertex_levels.size());
    const int in_ends = static_cast<int>(draft_.mu.size());
    const int nodes = nv + in_ends + static_cast<int>(draft_.nu.size());
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
    if (components != 1) return;
    if (seen_.emplace(key_of(draft_), found_.size()).second) found_.push_back(draft_);
  }

  int r_;
  std::vector<int> sorted_nu_;
  ClassicalCover draft_;
  std::map<ClassicalKey, std::size_t> seen_;
  std::vector<ClassicalCover> found_;
};

}  // namespace

std::vector<ClassicalCover> enumerate_classical_covers(int genus, std::span<const int> mu, std::span<const int> nu,
                                                       bool labeled_ends) {
  const int r = classical_branch_count(genus, mu, nu);
  return ClassicalSearch(genus, r, mu, nu, labeled_ends).run();
}

Rational classical_multiplicity(const ClassicalCover& cover) {
  if (cover.vertex_levels.empty()) return Rational(1, cover.edges.front().weight);
  std::map<std::array<int, 5>, int> classes;
  for (const auto& entry : key_of(cover)) ++classes[entry];
  Integer aut = 1;
  for (const auto& [cls, count] : classes) aut *= factorial(static_cast<unsigned>(count));
  Integer numerator = 1;
  for (const auto& e : cover.edges) {
    if (e.src.kind == Endpoint::Kind::Inner && e.dst.kind == Endpoint::Kind::Inner) numerator *= e.weight;
  }
  Rational value(numerator, aut);
  value.canonicalize();
  return value;
}

Rational classical_double_hurwitz_tropical(int genus, std::span<const int> mu, std::span<const int> nu,
                                           bool labeled_ends) {
  Rational total = 0;
  for (const auto& cover : enumerate_classical_covers(genus, mu, nu, labeled_ends)) {
    total += classical_multiplicity(cover);
  }
  return total;
}

Rational classical_double_hurwitz_tropical(int genus, const Partition& mu, const Partition& nu) {
  return classical_double_hurwitz_tropical(genus, mu.view(), nu.view());
}

}  // namespace twh
