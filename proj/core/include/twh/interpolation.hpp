#pragma once

#include <functional>
#include <vector>

#include "twh/chambers.hpp"
#include "twh/polynomial.hpp"
#include "twh/rational.hpp"

namespace twh {

struct InterpolationOptions {
  /// Degree bound; negative means the bound m + n - 1 + 2g.
  int degree = -1;
  /// Held-out validation points; negative means v = m + n - 1.
  int holdout = -1;
  /// Initial coordinate bound for the lattice scan. It is doubled (up to
  /// max_bound) when the chamber does not yet give a unisolvent node set.
  int bound = 16;
  int max_bound = 64;
  /// Parallel node evaluations; 0 means hardware concurrency.
  int threads = 0;
};

struct Interpolant {
  Polynomial polynomial;
  ChamberSignature chamber;
  int degree = 0;
  std::vector<LatticePoint> nodes;
  std::vector<LatticePoint> holdout;
};

using LatticeFunction = std::function<Rational(const LatticePoint&)>;

/// Exact interpolation of `f` on one chamber by a polynomial of total degree
/// <= `degree` in the canonical variables. Nodes are chosen greedily along
/// the chamber's scan order whenever they raise the rank of the monomial
/// matrix; the solution is then checked on the next `holdout` chamber points.
/// Throws DegreeBoundViolated on a held-out mismatch and ChamberEmpty when no
/// unisolvent node set exists within max_bound.
Interpolant interpolate(int m, int n, const ChamberSignature& chamber, int degree, const LatticeFunction& f,
                        const InterpolationOptions& options = {});

/// Interpolates the end-labeled twisted Hurwitz number |Aut mu||Aut nu| h~_g
/// on a chamber of shape (m, n), with degree bound m + n - 1 + 2g.
Interpolant interpolate_chamber(int genus, int m, int n, const ChamberSignature& chamber,
                                const InterpolationOptions& options = {});

/// Evaluates f at every point, spreading the work over `threads` workers.
std::vector<Rational> evaluate_parallel(const std::vector<LatticePoint>& points, const LatticeFunction& f,
                                        int threads);

/// All exponent vectors of total degree <= degree in `variables` variables,
/// graded then lexicographic.
std::vector<Polynomial::Exponent> monomials_up_to(int variables, int degree);

}  // namespace twh
