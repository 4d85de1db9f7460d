#include "twh/factorization.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "twh/error.hpp"

namespace twh {

int branch_count(int genus, const Partition& mu, const Partition& nu) {
  if (genus < 0) throw Error(ErrorKind::InvalidInput, "genus must be non-negative");
  if (mu.empty() || nu.empty() || mu.size() != nu.size()) {
    throw Error(ErrorKind::InvalidInput, "mu and nu must be non-empty partitions of the same n");
  }
  int b = genus - 1 + mu.length() + nu.length();
  if (b <= 0) throw Error(ErrorKind::NoBranchPoints, "b = " + std::to_string(b) + " is not positive");
  return b;
}

namespace {

/// Union-find without path compression so merges can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int size)
      : parent_(static_cast<std::size_t>(size)), rank_(static_cast<std::size_t>(size), 0), components_(size) {
    for (int i = 0; i < size; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back({-1, false});
      return;
    }
    if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
    bool bumped = rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = a;
    if (bumped) ++rank_[static_cast<std::size_t>(a)];
    --components_;
    history_.push_back({b, bumped});
  }

  void undo() {
    auto [child, bumped] = history_.back();
    history_.pop_back();
    if (child < 0) return;
    int root = parent_[static_cast<std::size_t>(child)];
    parent_[static_cast<std::size_t>(child)] = child;
    if (bumped) --rank_[static_cast<std::size_t>(root)];
    ++components_;
  }

  int components() const noexcept { return components_; }

 private:
  struct Step {
    int child;
    bool bumped;
  };
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<Step> history_;
  int components_;
};

struct Transposition {
  int a;
  int b;
};

struct WorkerTotals {
  std::uint64_t count = 0;
  std::uint64_t not_twisted = 0;
  std::uint64_t outside_b_tilde = 0;
  std::uint64_t leaves = 0;
};

class TwistedScanner {
 public:
  TwistedScanner(int n, int b, const Partition& nu, bool connected, std::ostream* sink)
      : n_(n), b_(b), connected_(connected), sink_(sink), uf_(2 * n) {
    for (int i = 0; i < 2 * n; ++i) {
      for (int j = i + 1; j < 2 * n; ++j) {
        if (j != tau_image(i, n)) etas_.push_back({i, j});
      }
    }
    target_.assign(static_cast<std::size_t>(2 * n + 1), 0);
    for (int part : nu.parts()) target_[static_cast<std::size_t>(part)] += 2;
    lengths_.assign(target_.size(), 0);
    seen_.assign(static_cast<std::size_t>(2 * n), -1);
    chosen_.reserve(static_cast<std::size_t>(b));
  }

  void scan(const Permutation& sigma1, WorkerTotals& totals) {
    sigma1_ = &sigma1;
    images_ = sigma1.images();
    inverse_ = sigma1.inverse().images();
    for (int x = 0; x < 2 * n_; ++x) uf_.unite(x, images_[static_cast<std::size_t>(x)]);
    descend(0, totals);
    for (int x = 0; x < 2 * n_; ++x) uf_.undo();
  }

 private:
  // P <- (i j) P (tau i tau j): swap the images at tau i and tau j, then
  // relabel the values i and j. Applying it twice restores P.
  void apply(const Transposition& t) {
    const auto ti = static_cast<std::size_t>(tau_image(t.a, n_));
    const auto tj = static_cast<std::size_t>(tau_image(t.b, n_));
    std::swap(images_[ti], images_[tj]);
    inverse_[static_cast<std::size_t>(images_[ti])] = static_cast<int>(ti);
    inverse_[static_cast<std::size_t>(images_[tj])] = static_cast<int>(tj);
    const auto pi = static_cast<std::size_t>(inverse_[static_cast<std::size_t>(t.a)]);
    const auto pj = static_cast<std::size_t>(inverse_[static_cast<std::size_t>(t.b)]);
    std::swap(images_[pi], images_[pj]);
    std::swap(inverse_[static_cast<std::size_t>(t.a)], inverse_[static_cast<std::size_t>(t.b)]);
  }

  void unapply(const Transposition& t) {
    const auto pi = static_cast<std::size_t>(inverse_[static_cast<std::size_t>(t.a)]);
    const auto pj = static_cast<std::size_t>(inverse_[static_cast<std::size_t>(t.b)]);
    std::swap(images_[pi], images_[pj]);
    std::swap(inverse_[static_cast<std::size_t>(t.a)], inverse_[static_cast<std::size_t>(t.b)]);
    const auto ti = static_cast<std::size_t>(tau_image(t.a, n_));
    const auto tj = static_cast<std::size_t>(tau_image(t.b, n_));
    std::swap(images_[ti], images_[tj]);
    inverse_[static_cast<std::size_t>(images_[ti])] = static_cast<int>(ti);
    inverse_[static_cast<std::size_t>(images_[tj])] = static_cast<int>(tj);
  }

  void descend(int depth, WorkerTotals& totals) {
    if (depth == b_) {
      leaf(totals);
      return;
    }
    for (const auto& t : etas_) {
      apply(t);
      uf_.unite(t.a, t.b);
      uf_.unite(tau_image(t.a, n_), tau_image(t.b, n_));
      chosen_.push_back(t);
      descend(depth + 1, totals);
      chosen_.pop_back();
      uf_.undo();
      uf_.undo();
      unapply(t);
    }
  }

  void leaf(WorkerTotals& totals) {
    ++totals.leaves;
    std::fill(lengths_.begin(), lengths_.end(), 0);
    std::fill(seen_.begin(), seen_.end(), -1);
    int cycle_id = 0;
    for (int start = 0; start < 2 * n_; ++start) {
      if (seen_[static_cast<std::size_t>(start)] >= 0) continue;
      int length = 0;
      for (int x = start; seen_[static_cast<std::size_t>(x)] < 0; x = images_[static_cast<std::size_t>(x)]) {
        seen_[static_cast<std::size_t>(x)] = cycle_id;
        ++length;
      }
      if (++lengths_[static_cast<std::size_t>(length)] > target_[static_cast<std::size_t>(length)]) return;
      ++cycle_id;
    }
    if (connected_ && uf_.components() != 1) return;
    ++totals.count;

    bool twisted = true;
    bool self_symmetric = false;
    for (int x = 0; x < 2 * n_; ++x) {
      int tx = tau_image(x, n_);
      if (images_[static_cast<std::size_t>(tau_image(images_[static_cast<std::size_t>(tx)], n_))] != x) {
        twisted = false;
      }
      if (seen_[static_cast<std::size_t>(x)] == seen_[static_cast<std::size_t>(tx)]) self_symmetric = true;
    }
    if (!twisted) ++totals.not_twisted;
    if (self_symmetric) ++totals.outside_b_tilde;
    if (sink_ != nullptr) emit();
  }

  void emit() {
    nlohmann::json etas = nlohmann::json::array();
    for (const auto& t : chosen_) etas.push_back({t.a + 1, t.b + 1});
    std::vector<int> sigma2;
    for (int image : images_) sigma2.push_back(image + 1);
    nlohmann::json line = {{"sigma1", sigma1_->one_based_images()},
                           {"etas", std::move(etas)},
                           {"sigma2", std::move(sigma2)},
                           {"transitive", uf_.components() == 1}};
    *sink_ << line.dump() << '\n';
  }

  int n_;
  int b_;
  bool connected_;
  std::ostream* sink_;
  RollbackUnionFind uf_;
  std::vector<Transposition> etas_;
  std::vector<Transposition> chosen_;
  std::vector<int> target_;
  std::vector<int> lengths_;
  std::vector<int> seen_;
  std::vector<int> images_;
  std::vector<int> inverse_;
  const Permutation* sigma1_ = nullptr;
};

Integer to_integer(std::uint64_t value) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

}  // namespace

ScanResult count_twisted_tuples(const HurwitzInput& input, const ScanOptions& options) {
  const int b = branch_count(input.genus, input.mu, input.nu);
  const int n = input.mu.size();
  const auto sigma1s = enumerate_b_tilde(input.mu, options.max_2n);

  int workers = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, static_cast<int>(sigma1s.size())));
  if (options.tuple_sink != nullptr) workers = 1;

  std::vector<WorkerTotals> totals(static_cast<std::size_t>(workers));
  auto run = [&](int worker) {
    TwistedScanner scanner(n, b, input.nu, input.connected, options.tuple_sink);
    for (std::size_t k = static_cast<std::size_t>(worker); k < sigma1s.size();
         k += static_cast<std::size_t>(workers)) {
      scanner.scan(sigma1s[k], totals[static_cast<std::size_t>(worker)]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  ScanResult result;
  for (const auto& t : totals) {
    result.count += to_integer(t.count);
    result.sigma2_not_twisted += t.not_twisted;
    result.sigma2_outside_b_tilde += t.outside_b_tilde;
    result.leaves_examined += t.leaves;
  }
  return result;
}

Rational twisted_hurwitz_bruteforce(const HurwitzInput& input, const ScanOptions& options) {
  auto scan = count_twisted_tuples(input, options);
  Rational value(scan.count, double_factorial(2 * input.mu.size()));
  value.canonicalize();
  return value;
}

Rational one_hurwitz_number(const HurwitzInput& input, const ScanOptions& options) {
  HurwitzInput disconnected = input;
  disconnected.connected = false;
  const int b = branch_count(input.genus, input.mu, input.nu);
  return twisted_hurwitz_bruteforce(disconnected, options) * power_of_two(-b);
}

std::vector<Permutation> permutations_of_cycle_type(const Partition& type) {
  const int n = type.size();
  std::map<int, int> remaining;
  for (int part : type.parts()) ++remaining[part];
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  std::vector<Permutation> out;

  // Same placeholder scheme as B~: the smallest free point opens a cycle.
  auto fill = [&](auto&& self) -> void {
    int start = static_cast<int>(std::find(images.begin(), images.end(), -1) - images.begin());
    if (start == n) {
      out.emplace_back(images);
      return;
    }
    for (auto& [length, count] : remaining) {
      if (count == 0) continue;
      --count;
      std::vector<int> cycle{start};
      std::vector<bool> in_cycle(static_cast<std::size_t>(n), false);
      in_cycle[static_cast<std::size_t>(start)] = true;
      auto extend = [&](auto&& grow) -> void {
        if (static_cast<int>(cycle.size()) == length) {
          for (std::size_t k = 0; k < cycle.size(); ++k) {
            images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
          }
          self(self);
          for (int x : cycle) images[static_cast<std::size_t>(x)] = -1;
          return;
        }
        for (int x = start + 1; x < n; ++x) {
          if (images[static_cast<std::size_t>(x)] >= 0 || in_cycle[static_cast<std::size_t>(x)]) continue;
          in_cycle[static_cast<std::size_t>(x)] = true;
          cycle.push_back(x);
          grow(grow);
          cycle.pop_back();
          in_cycle[static_cast<std::size_t>(x)] = false;
        }
      };
      extend(extend);
      ++count;
    }
  };
  fill(fill);
  return out;
}

Rational classical_double_hurwitz_bruteforce(int genus, const Partition& mu, const Partition& nu,
                                             const ClassicalScanOptions& options) {
  if (genus < 0) throw Error(ErrorKind::InvalidInput, "genus must be non-negative");
  if (mu.empty() || nu.empty() || mu.size() != nu.size()) {
    throw Error(ErrorKind::InvalidInput, "mu and nu must be non-empty partitions of the same n");
  }
  const int n = mu.size();
  const int r = 2 * genus - 2 + mu.length() + nu.length();
  if (r < 0) throw Error(ErrorKind::NoBranchPoints, "r = " + std::to_string(r) + " is negative");
  if (n > options.max_n) {
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(options.max_n));
  }

  std::vector<Transposition> transpositions;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) transpositions.push_back({i, j});
  }
  std::vector<int> target(static_cast<std::size_t>(n + 1), 0);
  for (int part : nu.parts()) ++target[static_cast<std::size_t>(part)];

  std::uint64_t count = 0;
  RollbackUnionFind uf(n);
  for (const auto& sigma1 : permutations_of_cycle_type(mu)) {
    std::vector<int> images = sigma1.images();
    std::vector<int> inverse = sigma1.inverse().images();
    for (int x = 0; x < n; ++x) uf.unite(x, images[static_cast<std::size_t>(x)]);
    // Left multiplication by (a b) swaps the preimages of a and b.
    auto left = [&](const Transposition& t) {
      std::swap(images[static_cast<std::size_t>(inverse[static_cast<std::size_t>(t.a)])],
                images[static_cast<std::size_t>(inverse[static_cast<std::size_t>(t.b)])]);
      std::swap(inverse[static_cast<std::size_t>(t.a)], inverse[static_cast<std::size_t>(t.b)]);
    };
    auto descend = [&](auto&& self, int depth) -> void {
      if (depth == r) {
        if (uf.components() != 1) return;
        std::vector<int> lengths(target.size(), 0);
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int start = 0; start < n; ++start) {
          if (seen[static_cast<std::size_t>(start)]) continue;
          int length = 0;
          for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++length;
          }
          ++lengths[static_cast<std::size_t>(length)];
        }
        if (lengths == target) ++count;
        return;
      }
      for (const auto& t : transpositions) {
        left(t);
        uf.unite(t.a, t.b);
        self(self, depth + 1);
        uf.undo();
        left(t);
      }
    };
    descend(descend, 0);
    for (int x = 0; x < n; ++x) uf.undo();
  }
  Rational value(to_integer(count), factorial(static_cast<unsigned>(n)));
  value.canonicalize();
  return value;
}

}  // namespace twh
