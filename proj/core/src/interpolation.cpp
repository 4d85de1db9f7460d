#include "twh/interpolation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "twh/error.hpp"
#include "twh/tropical.hpp"

namespace twh {

std::vector<Polynomial::Exponent> monomials_up_to(int variables, int degree) {
  std::vector<Polynomial::Exponent> out;
  Polynomial::Exponent e(static_cast<std::size_t>(variables), 0);
  auto fill = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k + 1 == e.size()) {
      e[k] = remaining;
      out.push_back(e);
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      e[k] = x;
      self(self, k + 1, remaining - x);
    }
  };
  for (int d = 0; d <= degree; ++d) {
    if (variables == 0) {
      if (d == 0) out.push_back(e);
      continue;
    }
    fill(fill, 0, d);
  }
  return out;
}

namespace {

std::vector<Rational> monomial_row(const std::vector<Polynomial::Exponent>& monomials, const std::vector<int>& x) {
  std::vector<Rational> row;
  row.reserve(monomials.size());
  for (const auto& e : monomials) {
    Integer value = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(x[k]), static_cast<unsigned long>(e[k]));
      value *= power;
    }
    row.emplace_back(value);
  }
  return row;
}

/// Incrementally maintained echelon basis used to decide whether a new row
/// raises the rank.
class RankTracker {
 public:
  explicit RankTracker(std::size_t columns) : columns_(columns) {}

  bool try_add(std::vector<Rational> row) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational& factor = row[pivots_[k]];
      if (factor == 0) continue;
      Rational f = factor;
      for (std::size_t c = pivots_[k]; c < columns_; ++c) row[c] -= f * basis_[k][c];
    }
    auto pivot = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
    if (pivot == row.end()) return false;
    const std::size_t p = static_cast<std::size_t>(pivot - row.begin());
    Rational inv = 1 / row[p];
    for (std::size_t c = p; c < columns_; ++c) row[c] *= inv;
    basis_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t columns_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Solves the square system A x = y by Gauss-Jordan elimination over Q.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> y) {
  const std::size_t size = y.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw Error(ErrorKind::InvalidInput, "interpolation system is singular");
    std::swap(a[pivot], a[col]);
    std::swap(y[pivot], y[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t c = col; c < size; ++c) a[col][c] *= inv;
    y[col] *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < size; ++c) a[r][c] -= f * a[col][c];
      y[r] -= f * y[col];
    }
  }
  return y;
}

}  // namespace

std::vector<Rational> evaluate_parallel(const std::vector<LatticePoint>& points, const LatticeFunction& f,
                                        int threads) {
  std::vector<Rational> values(points.size());
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, static_cast<int>(points.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < points.size(); ++k) values[k] = f(points[k]);
    return values;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
          try {
            values[k] = f(points[k]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

Interpolant interpolate(int m, int n, const ChamberSignature& chamber, int degree, const LatticeFunction& f,
                        const InterpolationOptions& options) {
  const int v = m + n - 1;
  const auto monomials = monomials_up_to(v, degree);
  const std::size_t holdout_count = static_cast<std::size_t>(options.holdout >= 0 ? options.holdout : v);
  const auto walls = wall_list(m, n);
  if (chamber.signs.size() != walls.size()) {
    throw Error(ErrorKind::InvalidInput, "signature does not match the wall arrangement");
  }

  Interpolant result;
  result.chamber = chamber;
  result.degree = degree;
  for (int bound = options.bound;; bound *= 2) {
    RankTracker tracker(monomials.size());
    std::vector<LatticePoint> nodes;
    std::vector<LatticePoint> extra;
    scan_lattice(m, n, bound, [&](const LatticePoint& p) {
      for (std::size_t w = 0; w < walls.size(); ++w) {
        long long delta = wall_form(walls[w], p.mu, p.nu);
        if (delta == 0 || (delta > 0) != (chamber.signs[w] > 0)) return true;
      }
      if (tracker.rank() < monomials.size()) {
        if (tracker.try_add(monomial_row(monomials, canonical_coordinates(p.mu, p.nu)))) nodes.push_back(p);
        return true;
      }
      extra.push_back(p);
      return extra.size() < holdout_count;
    });
    if (tracker.rank() == monomials.size() && extra.size() == holdout_count) {
      result.nodes = std::move(nodes);
      result.holdout = std::move(extra);
      break;
    }
    if (bound * 2 > options.max_bound) {
      throw Error(ErrorKind::ChamberEmpty, "chamber " + chamber.to_string() + " has no unisolvent node set within bound " +
                                               std::to_string(bound));
    }
  }

  std::vector<LatticePoint> all = result.nodes;
  all.insert(all.end(), result.holdout.begin(), result.holdout.end());
  const auto values = evaluate_parallel(all, f, options.threads);

  std::vector<std::vector<Rational>> matrix;
  for (const auto& p : result.nodes) matrix.push_back(monomial_row(monomials, canonical_coordinates(p.mu, p.nu)));
  const auto coefficients =
      solve(std::move(matrix), std::vector<Rational>(values.begin(), values.begin() + static_cast<long>(result.nodes.size())));

  result.polynomial = Polynomial(canonical_variables(m, n));
  for (std::size_t k = 0; k < monomials.size(); ++k) result.polynomial.add_term(monomials[k], coefficients[k]);

  for (std::size_t k = 0; k < result.holdout.size(); ++k) {
    const auto& p = result.holdout[k];
    Rational predicted = result.polynomial.evaluate(std::span<const int>(canonical_coordinates(p.mu, p.nu)));
    const Rational& actual = values[result.nodes.size() + k];
    if (predicted != actual) {
      throw Error(ErrorKind::DegreeBoundViolated, "held-out point " + p.to_string() + ": interpolant gives " +
                                                      to_string(predicted) + ", direct count gives " + to_string(actual));
    }
  }
  return result;
}

Interpolant interpolate_chamber(int genus, int m, int n, const ChamberSignature& chamber,
                                const InterpolationOptions& options) {
  if (genus < 0 || m < 1 || n < 1) throw Error(ErrorKind::InvalidInput, "need g >= 0 and m, n >= 1");
  if (genus - 1 + m + n <= 0) throw Error(ErrorKind::NoBranchPoints, "b is not positive for this shape");
  const int degree = options.degree >= 0 ? options.degree : m + n - 1 + 2 * genus;
  return interpolate(m, n, chamber, degree,
                     [genus](const LatticePoint& p) { return labeled_twisted_hurwitz(genus, p.mu, p.nu); }, options);
}

}  // namespace twh
