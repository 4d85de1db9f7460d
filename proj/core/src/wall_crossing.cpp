#include "twh/wall_crossing.hpp"

#include <algorithm>

#include "twh/classical.hpp"
#include "twh/error.hpp"
#include "twh/tropical.hpp"

namespace twh {

WallCrossing::WallCrossing(int m, int n, InterpolationOptions options)
    : m_(m), n_(n), options_(options), walls_(wall_list(m, n)) {
  if (walls_.empty()) {
    throw Error(ErrorKind::InvalidInput,
                "shape (" + std::to_string(m) + "," + std::to_string(n) + ") has no walls to cross");
  }
}

std::size_t WallCrossing::wall_index(const Wall& wall) const {
  auto it = std::find(walls_.begin(), walls_.end(), wall);
  if (it == walls_.end()) throw Error(ErrorKind::InvalidInput, "no wall " + wall.to_string() + " for this shape");
  return static_cast<std::size_t>(it - walls_.begin());
}

void WallCrossing::require_adjacent(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2) const {
  const std::size_t index = wall_index(wall);
  if (c1.signs.size() != walls_.size() || c2.signs.size() != walls_.size()) {
    throw Error(ErrorKind::InvalidInput, "signature does not match the wall arrangement");
  }
  for (std::size_t k = 0; k < walls_.size(); ++k) {
    if ((c1.signs[k] == c2.signs[k]) == (k == index)) {
      throw Error(ErrorKind::NonAdjacentChambers,
                  c1.to_string() + " and " + c2.to_string() + " are not adjacent across " + wall.to_string());
    }
  }
}

const Interpolant& WallCrossing::chamber_polynomial(const ChamberSignature& chamber) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = chamber_cache_.find(chamber); it != chamber_cache_.end()) return it->second;
  }
  Interpolant computed = interpolate_chamber(0, m_, n_, chamber, options_);
  std::lock_guard lock(mutex_);
  return chamber_cache_.try_emplace(chamber, std::move(computed)).first->second;
}

const Interpolant& WallCrossing::restricted_polynomial(const Wall& wall, const ChamberSignature& chamber) {
  wall_index(wall);
  auto key = std::make_pair(wall, chamber);
  {
    std::lock_guard lock(mutex_);
    if (auto it = restricted_cache_.find(key); it != restricted_cache_.end()) return it->second;
  }
  Interpolant computed = interpolate(m_, n_, chamber, m_ + n_ - 1,
                                     [&](const LatticePoint& p) {
                                       return restricted_sum_delta_adjacent(p.mu, p.nu, wall, chamber);
                                     },
                                     options_);
  std::lock_guard lock(mutex_);
  return restricted_cache_.try_emplace(key, std::move(computed)).first->second;
}

Polynomial WallCrossing::lhs(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2) {
  require_adjacent(wall, c1, c2);
  return chamber_polynomial(c1).polynomial - chamber_polynomial(c2).polynomial;
}

WallCrossingTerms WallCrossing::rhs(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2,
                                    const LatticePoint& point, WallCrossingFormula formula) {
  require_adjacent(wall, c1, c2);
  if (static_cast<int>(point.mu.size()) != m_ || static_cast<int>(point.nu.size()) != n_) {
    throw Error(ErrorKind::InvalidInput, "point does not have shape (" + std::to_string(m_) + "," + std::to_string(n_) + ")");
  }
  if (chamber_signature(point.mu, point.nu) != c1) {
    throw Error(ErrorKind::NotInChamber, point.to_string() + " is not in chamber " + c1.to_string());
  }

  WallCrossingTerms t;
  t.delta = wall_form(wall, point.mu, point.nu);
  t.oriented = t.delta > 0 ? wall : wall.complement(m_, n_);
  t.delta = t.delta > 0 ? t.delta : -t.delta;
  const int delta = static_cast<int>(t.delta);
  const Wall other = t.oriented.complement(m_, n_);

  auto pick = [](const std::vector<int>& parts, const std::vector<int>& indices) {
    std::vector<int> out;
    for (int i : indices) out.push_back(parts[static_cast<std::size_t>(i)]);
    return out;
  };
  const auto mu_i = pick(point.mu, t.oriented.I);
  auto nu_j_delta = pick(point.nu, t.oriented.J);
  nu_j_delta.push_back(delta);
  auto mu_ic_delta = pick(point.mu, other.I);
  mu_ic_delta.push_back(delta);
  const auto nu_jc = pick(point.nu, other.J);

  CoverFilter left_filter;
  CoverFilter right_filter;
  if (formula == WallCrossingFormula::EndExcluded) {
    left_filter = four_valent_not_on_end(Endpoint::Kind::Out, static_cast<int>(nu_j_delta.size()) - 1);
    right_filter = four_valent_not_on_end(Endpoint::Kind::In, static_cast<int>(mu_ic_delta.size()) - 1);
  }

  t.h_c1 = restricted_sum_delta_adjacent(point.mu, point.nu, wall, c1);
  t.h_c2 = restricted_polynomial(wall, c2).polynomial.evaluate(
      std::span<const int>(canonical_coordinates(point.mu, point.nu)));
  t.twisted_left = labeled_twisted_hurwitz(0, mu_i, nu_j_delta, left_filter);
  t.classical_right = classical_double_hurwitz_tropical(0, mu_ic_delta, nu_jc, true);
  t.classical_left = classical_double_hurwitz_tropical(0, mu_i, nu_j_delta, true);
  t.twisted_right = labeled_twisted_hurwitz(0, mu_ic_delta, nu_jc, right_filter);

  const auto size_i = static_cast<unsigned>(t.oriented.I.size());
  const auto size_j = static_cast<unsigned>(t.oriented.J.size());
  const auto size_ic = static_cast<unsigned>(other.I.size());
  const auto size_jc = static_cast<unsigned>(other.J.size());
  const auto total = static_cast<unsigned>(m_ + n_ - 1);
  t.first_term = power_of_two(static_cast<int>(size_ic + size_jc) - 1) * Rational(binomial(total, size_i + size_j)) *
                 t.twisted_left * t.classical_right;
  t.second_term = power_of_two(static_cast<int>(size_i + size_j) - 1) *
                  Rational(binomial(total, size_i + size_j - 1)) * t.classical_left * t.twisted_right;
  t.value = t.h_c1 - t.h_c2 + Rational(static_cast<long>(t.delta)) * (t.first_term + t.second_term);
  return t;
}

Polynomial wall_crossing_lhs(int m, int n, const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2) {
  return WallCrossing(m, n).lhs(wall, c1, c2);
}

Rational wall_crossing_rhs(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2,
                           const LatticePoint& point, WallCrossingFormula formula) {
  WallCrossing wc(static_cast<int>(point.mu.size()), static_cast<int>(point.nu.size()));
  return wc.rhs(wall, c1, c2, point, formula).value;
}

}  // namespace twh
