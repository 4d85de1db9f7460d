#pragma once

#include <cstdint>
#include <ostream>

#include "twh/b_tilde.hpp"
#include "twh/partition.hpp"
#include "twh/rational.hpp"

namespace twh {

struct HurwitzInput {
  int genus = 0;
  Partition mu;
  Partition nu;
  bool connected = true;
};

/// b = g - 1 + l(mu) + l(nu). Throws InvalidInput for mismatched degrees or a
/// negative genus, and NoBranchPoints when b <= 0.
int branch_count(int genus, const Partition& mu, const Partition& nu);

struct ScanOptions {
  int max_2n = kDefaultMax2n;
  /// Worker threads splitting the sigma1 list; 0 means hardware concurrency.
  int threads = 1;
  /// When set, every counted tuple is written as one JSON line and the scan
  /// runs single-threaded so the line order is deterministic.
  std::ostream* tuple_sink = nullptr;
};

struct ScanResult {
  Integer count;
  /// Counted tuples whose sigma2 is not in C~(tau). Always 0 if the algebra
  /// is right; kept as a runtime assertion that callers can surface.
  std::uint64_t sigma2_not_twisted = 0;
  /// Counted tuples whose sigma2 has a self-symmetric cycle (so sigma2 is
  /// not in B~_nu).
  std::uint64_t sigma2_outside_b_tilde = 0;
  std::uint64_t leaves_examined = 0;
};

/// |C_g(mu, nu)|: tuples (sigma1, eta_1..eta_b, sigma2) with sigma1 in B~_mu,
/// each eta_i a transposition with eta_i != tau eta_i tau, sigma2 =
/// eta_b...eta_1 sigma1 (tau eta_1 tau)...(tau eta_b tau) of cycle type 2nu,
/// and, if input.connected, a transitive generated group.
ScanResult count_twisted_tuples(const HurwitzInput& input, const ScanOptions& options = {});

/// count / (2n)!!; the disconnected number when input.connected is false.
Rational twisted_hurwitz_bruteforce(const HurwitzInput& input, const ScanOptions& options = {});

/// 2^{-b} times the disconnected count; input.connected is ignored.
Rational one_hurwitz_number(const HurwitzInput& input, const ScanOptions& options = {});

struct ClassicalScanOptions {
  int max_n = 9;
};

/// Connected classical double Hurwitz number: (1/n!) * #{(sigma1, t_1..t_r)
/// in S_n : C(sigma1) = mu, C(t_r...t_1 sigma1) = nu, transitive} with
/// r = 2g - 2 + l(mu) + l(nu) >= 0.
Rational classical_double_hurwitz_bruteforce(int genus, const Partition& mu, const Partition& nu,
                                             const ClassicalScanOptions& options = {});

/// Every permutation of {0..n-1} with the given cycle type, in a fixed order.
std::vector<Permutation> permutations_of_cycle_type(const Partition& type);

}  // namespace twh
