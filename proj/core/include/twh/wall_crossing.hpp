#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "twh/chambers.hpp"
#include "twh/interpolation.hpp"
#include "twh/polynomial.hpp"
#include "twh/rational.hpp"

namespace twh {

enum class WallCrossingFormula {
  /// The genus-0 formula with the smaller twisted numbers counted in full.
  AsPublished,
  /// The same formula, but the smaller twisted numbers h~0(mu_I, (nu_J, delta))
  /// and h~0((mu_Ic, delta), nu_Jc) skip covers whose 4-valent vertex sits on
  /// the delta end. Glued, those covers have the 2-valent vertex on the delta
  /// edge and are already part of h0^{C,delta}.
  EndExcluded,
};

struct WallCrossingTerms {
  /// The wall oriented so that delta > 0 at the point.
  Wall oriented;
  long long delta = 0;
  Rational h_c1;  // h0^{C1,delta} at the point (direct restricted sum)
  Rational h_c2;  // h0^{C2,delta} at the point (C2 interpolant of the restricted sum)
  Rational twisted_left;    // h~0(mu_I, (nu_J, delta))
  Rational classical_right; // h0((mu_Ic, delta), nu_Jc)
  Rational classical_left;  // h0(mu_I, (nu_J, delta))
  Rational twisted_right;   // h~0((mu_Ic, delta), nu_Jc)
  Rational first_term;
  Rational second_term;
  Rational value;
};

/// Genus-0 wall crossing for one shape (m, n). All Hurwitz numbers involved
/// are end-labeled. Chamber interpolants are computed on demand and cached;
/// the object is safe to share between threads.
class WallCrossing {
 public:
  WallCrossing(int m, int n, InterpolationOptions options = {});

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

  /// Interpolant of the labeled genus-0 number on the chamber.
  const Interpolant& chamber_polynomial(const ChamberSignature& chamber);

  /// Interpolant of h0^{C,delta} for the wall on the chamber.
  const Interpolant& restricted_polynomial(const Wall& wall, const ChamberSignature& chamber);

  /// WC = P1 - P2. Throws NonAdjacentChambers unless c1 and c2 differ exactly
  /// in the sign of `wall`.
  Polynomial lhs(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2);

  /// The right-hand side at a point of c1. Throws NotInChamber, OnWall or
  /// NonAdjacentChambers on bad input.
  WallCrossingTerms rhs(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2,
                        const LatticePoint& point, WallCrossingFormula formula = WallCrossingFormula::AsPublished);

 private:
  std::size_t wall_index(const Wall& wall) const;
  void require_adjacent(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2) const;

  int m_;
  int n_;
  InterpolationOptions options_;
  std::vector<Wall> walls_;
  std::mutex mutex_;
  std::map<ChamberSignature, Interpolant> chamber_cache_;
  std::map<std::pair<Wall, ChamberSignature>, Interpolant> restricted_cache_;
};

/// Single-use conveniences over WallCrossing.
Polynomial wall_crossing_lhs(int m, int n, const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2);
Rational wall_crossing_rhs(const Wall& wall, const ChamberSignature& c1, const ChamberSignature& c2,
                           const LatticePoint& point, WallCrossingFormula formula = WallCrossingFormula::AsPublished);

}  // namespace twh
