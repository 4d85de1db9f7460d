#include "twh/b_tilde.hpp"

#include <map>

#include "twh/error.hpp"

namespace twh {

Permutation make_tau(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDegree, "tau needs n >= 1");
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) images[static_cast<std::size_t>(i)] = tau_image(i, n);
  return Permutation(std::move(images));
}

CycleClassification cycle_classification(const Permutation& sigma, int n) {
  if (n < 1 || sigma.degree() != 2 * n) {
    throw Error(ErrorKind::InvalidInput, "permutation must act on 2n points");
  }
  for (int x = 0; x < 2 * n; ++x) {
    // tau sigma tau (x) must equal sigma^{-1}(x), i.e. sigma(tau(sigma(tau x))) = x.
    if (sigma(tau_image(sigma(tau_image(x, n)), n)) != x) {
      throw Error(ErrorKind::NotTwistedSymmetric, "tau sigma tau != sigma^-1 for " + sigma.to_cycle_string());
    }
  }
  auto cycles = sigma.cycles();
  std::vector<int> owner(static_cast<std::size_t>(2 * n));
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int x : cycles[c]) owner[static_cast<std::size_t>(x)] = static_cast<int>(c);
  }
  CycleClassification out;
  std::vector<bool> done(cycles.size(), false);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (done[c]) continue;
    auto partner = static_cast<std::size_t>(owner[static_cast<std::size_t>(tau_image(cycles[c][0], n))]);
    done[c] = done[partner] = true;
    if (partner == c) {
      out.self_symmetric.push_back(cycles[c]);
    } else {
      out.pairs.emplace_back(cycles[c], cycles[partner]);
    }
  }
  return out;
}

bool is_in_b_tilde(const Permutation& sigma, const Partition& lambda, int n) {
  if (lambda.size() != n || sigma.degree() != 2 * n) return false;
  CycleClassification cls;
  try {
    cls = cycle_classification(sigma, n);
  } catch (const Error&) {
    return false;
  }
  if (!cls.self_symmetric.empty()) return false;
  std::vector<int> lengths;
  for (const auto& [c, partner] : cls.pairs) lengths.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lengths)) == lambda;
}

namespace {

struct BTildeBuilder {
  int n;
  std::map<int, int> remaining;  // part length -> unused multiplicity
  std::vector<int> images;
  std::vector<bool> class_used;  // indexed by the representative in [0, n)
  std::vector<Permutation>* out;

  void fill() {
    int start = -1;
    for (int x = 0; x < 2 * n; ++x) {
      if (images[static_cast<std::size_t>(x)] < 0) {
        start = x;
        break;
      }
    }
    if (start < 0) {
      out->emplace_back(images);
      return;
    }
    for (auto& [length, count] : remaining) {
      if (count == 0) continue;
      --count;
      class_used[static_cast<std::size_t>(start % n)] = true;
      std::vector<int> cycle{start};
      extend(cycle, length);
      class_used[static_cast<std::size_t>(start % n)] = false;
      ++count;
    }
  }

  void extend(std::vector<int>& cycle, int length) {
    if (static_cast<int>(cycle.size()) == length) {
      close(cycle);
      return;
    }
    for (int cls = 0; cls < n; ++cls) {
      if (class_used[static_cast<std::size_t>(cls)]) continue;
      class_used[static_cast<std::size_t>(cls)] = true;
      for (int point : {cls, cls + n}) {
        cycle.push_back(point);
        extend(cycle, length);
        cycle.pop_back();
      }
      class_used[static_cast<std::size_t>(cls)] = false;
    }
  }

  // Writes the cycle and its forced partner: sigma(a) = b implies
  // sigma(tau b) = tau a.
  void close(const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    for (std::size_t k = 0; k < len; ++k) {
      int a = cycle[k];
      int b = cycle[(k + 1) % len];
      images[static_cast<std::size_t>(a)] = b;
      images[static_cast<std::size_t>(tau_image(b, n))] = tau_image(a, n);
    }
    fill();
    for (int a : cycle) {
      images[static_cast<std::size_t>(a)] = -1;
      images[static_cast<std::size_t>(tau_image(a, n))] = -1;
    }
  }
};

}  // namespace

std::vector<Permutation> enumerate_b_tilde(const Partition& lambda, int max_2n) {
  const int n = lambda.size();
  if (n < 1) throw Error(ErrorKind::InvalidInput, "lambda must be a partition of n >= 1");
  if (2 * n > max_2n) {
    throw Error(ErrorKind::CapExceeded,
                "2n = " + std::to_string(2 * n) + " exceeds the cap " + std::to_string(max_2n));
  }
  std::vector<Permutation> out;
  BTildeBuilder builder{n, {}, std::vector<int>(static_cast<std::size_t>(2 * n), -1),
                        std::vector<bool>(static_cast<std::size_t>(n), false), &out};
  for (int part : lambda.parts()) ++builder.remaining[part];
  builder.fill();
  return out;
}

Integer b_tilde_cardinality(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorKind::InvalidInput, "lambda must be non-empty");
  Integer denominator = lambda.product_of_parts() * lambda.aut_order();
  denominator <<= static_cast<mp_bitcnt_t>(lambda.length());
  return double_factorial(2 * lambda.size()) / denominator;
}

Integer double_factorial(int k) {
  if (k < 0 || k % 2 != 0) throw Error(ErrorKind::InvalidInput, "double factorial needs an even k >= 0");
  Integer result;
  mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

}  // namespace twh
