#pragma once

#include <utility>
#include <vector>

#include "twh/partition.hpp"
#include "twh/permutation.hpp"
#include "twh/rational.hpp"

namespace twh {

/// Default ceiling on 2n for any exhaustive scan over S_2n.
inline constexpr int kDefaultMax2n = 12;

/// tau = (1 n+1)(2 n+2)...(n 2n), i.e. i <-> i+n in 0-based form.
Permutation make_tau(int n);

/// Image of a 0-based point under tau without materializing the permutation.
constexpr int tau_image(int point, int n) noexcept { return point < n ? point + n : point - n; }

struct CycleClassification {
  /// Each entry is (c, c') with tau c tau = c'^{-1}; c comes first in
  /// smallest-element order.
  std::vector<std::pair<Cycle, Cycle>> pairs;
  std::vector<Cycle> self_symmetric;
};

/// Throws NotTwistedSymmetric unless tau sigma tau = sigma^{-1}.
CycleClassification cycle_classification(const Permutation& sigma, int n);

bool is_in_b_tilde(const Permutation& sigma, const Partition& lambda, int n);

/// Every element of B~_lambda exactly once. Generation fills the cycles in
/// order of their smallest point; each new cycle picks its length and then an
/// ordered run of points from unused tau-classes, and its tau-partner is
/// forced. Throws CapExceeded when 2n > max_2n.
std::vector<Permutation> enumerate_b_tilde(const Partition& lambda, int max_2n = kDefaultMax2n);

/// (2n)!! / (2^l * prod lambda_i * |Aut lambda|).
Integer b_tilde_cardinality(const Partition& lambda);

/// 2 * 4 * ... * k for even k >= 0; odd or negative k is rejected.
Integer double_factorial(int k);

}  // namespace twh
