#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace twh {

/// The hyperplane sum_{i in I} mu_i = sum_{j in J} nu_j. Indices are 0-based
/// and sorted. Walls are stored up to (I, J) ~ (I^c, J^c); the stored
/// representative is the one with 0 in I.
struct Wall {
  std::vector<int> I;
  std::vector<int> J;

  /// The representative with the complementary index sets (0 not in I).
  Wall complement(int m, int n) const;
  /// 1-based, e.g. "I=1:J=1,2".
  std::string to_string() const;
  /// Accepts the to_string format; throws InvalidInput.
  static Wall parse(const std::string& text, int m, int n);

  auto operator<=>(const Wall&) const = default;
};

/// delta = sum_{I} mu_i - sum_{J} nu_j.
long long wall_form(const Wall& wall, std::span<const int> mu, std::span<const int> nu);

/// All walls for l(mu) = m, l(nu) = n, ordered by the bitmask of I and then
/// of J.
std::vector<Wall> wall_list(int m, int n);

/// Sign (+1 / -1) of every wall form in wall_list order.
struct ChamberSignature {
  std::vector<int> signs;

  /// "(+,-)"; the empty signature prints as "()".
  std::string to_string() const;
  static ChamberSignature parse(const std::string& text);

  auto operator<=>(const ChamberSignature&) const = default;
};

/// A lattice point of the hyperplane sum mu = sum nu. The tuples keep their
/// coordinate order; they need not be sorted.
struct LatticePoint {
  std::vector<int> mu;
  std::vector<int> nu;

  std::string to_string() const;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Throws OnWall if some wall form vanishes.
ChamberSignature chamber_signature(std::span<const int> mu, std::span<const int> nu);

/// Visits positive lattice points with coordinates <= bound in graded
/// lexicographic order: by d = sum mu, then mu_1..mu_m, then nu_1..nu_{n-1}.
/// The visitor returns false to stop.
void scan_lattice(int m, int n, int bound, const std::function<bool(const LatticePoint&)>& visit);

/// The first `count` points of scan_lattice lying in the chamber. Throws
/// ChamberEmpty if fewer exist within the bound.
std::vector<LatticePoint> chamber_sample(const ChamberSignature& signature, int m, int n, int count, int bound);

/// All realizable signatures within the bound, in order of first appearance.
std::vector<ChamberSignature> chambers(int m, int n, int bound);

}  // namespace twh
