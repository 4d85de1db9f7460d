#include <doctest.h>

#include <nlohmann/json.hpp>

#include "twh/chambers.hpp"
#include "twh/error.hpp"
#include "twh/interpolation.hpp"
#include "twh/polynomial.hpp"
#include "twh/tropical.hpp"
#include "twh/wall_crossing.hpp"

using namespace twh;

namespace {

Polynomial x_plus_y_squared() {
  const std::vector<std::string> vars{"x", "y"};
  Polynomial x = Polynomial::variable(vars, 0);
  Polynomial y = Polynomial::variable(vars, 1);
  Polynomial s = x + y;
  return s * s;
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a twh::Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  Polynomial p = x_plus_y_squared();
  CHECK(p.to_string() == "x^2 + 2*x*y + y^2");
  CHECK(p.total_degree() == 2);
  CHECK(p.coefficient({1, 1}) == 2);
  CHECK(p.evaluate(std::vector<int>{2, 3}) == 25);
  CHECK(p.evaluate(std::vector<Rational>{Rational(1, 2), Rational(1, 3)}) == Rational(25, 36));

  Polynomial q = p - p;
  CHECK(q.is_zero());
  CHECK(q.total_degree() == -1);
  CHECK(q.to_string() == "0");

  Polynomial r = p * Rational(-2, 3) + Polynomial::constant(p.variables(), 1);
  CHECK(r.to_string() == "-2/3*x^2 - 4/3*x*y - 2/3*y^2 + 1");
  CHECK((-r).coefficient({0, 0}) == -1);

  auto parts = r.homogeneous_parts();
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0).to_string() == "1");
  CHECK(parts.at(2).total_degree() == 2);

  Polynomial other({"x", "z"});
  CHECK(kind_of([&] { p += other; }) == ErrorKind::InvalidInput);
}

TEST_CASE("polynomial JSON round trip") {
  Polynomial p = x_plus_y_squared() * Rational(5, 7);
  nlohmann::json j = p;
  CHECK(j.at("vars") == nlohmann::json({"x", "y"}));
  CHECK(j.at("terms").size() == 3);
  CHECK(j.get<Polynomial>() == p);
}

TEST_CASE("canonical variables drop the last nu coordinate") {
  CHECK(canonical_variables(2, 2) == std::vector<std::string>{"mu1", "mu2", "nu1"});
  CHECK(canonical_coordinates(std::vector<int>{3, 1}, std::vector<int>{2, 2}) == std::vector<int>{3, 1, 2});
}

TEST_CASE("walls and chambers") {
  CHECK(wall_list(1, 1).empty());
  CHECK(wall_list(1, 2).empty());
  const auto walls = wall_list(2, 2);
  REQUIRE(walls.size() == 2);
  CHECK(walls[0].to_string() == "I=1:J=1");
  CHECK(walls[1].to_string() == "I=1:J=2");
  CHECK(Wall::parse("I=2:J=2", 2, 2) == walls[0]);
  CHECK(walls[0].complement(2, 2).to_string() == "I=2:J=2");
  CHECK(wall_list(2, 3).size() == 6);
  CHECK(wall_list(3, 2).size() == 6);

  const std::vector<int> mu{3, 1};
  const std::vector<int> nu{2, 2};
  CHECK(wall_form(walls[0], mu, nu) == 1);
  CHECK(chamber_signature(mu, nu).to_string() == "(+,+)");
  CHECK(chamber_signature(std::vector<int>{1, 3}, nu).to_string() == "(-,-)");
  CHECK(kind_of([] { chamber_signature(std::vector<int>{2, 2}, std::vector<int>{2, 2}); }) == ErrorKind::OnWall);

  CHECK(ChamberSignature::parse("(+,-)").to_string() == "(+,-)");
  CHECK(chambers(2, 2, 8).size() == 4);

  const auto sample = chamber_sample(ChamberSignature{{1, 1}}, 2, 2, 3, 16);
  REQUIRE(sample.size() == 3);
  CHECK(sample[0].to_string() == "((3,1),(2,2))");
  for (const auto& p : sample) CHECK(chamber_signature(p.mu, p.nu) == ChamberSignature{{1, 1}});
  CHECK(kind_of([] { chamber_sample(ChamberSignature{{1, 1}}, 2, 2, 1000, 3); }) == ErrorKind::ChamberEmpty);
}

TEST_CASE("interpolation of a known function") {
  LatticeFunction f = [](const LatticePoint& p) {
    return Rational(p.mu[0] * p.mu[0] - 3 * p.nu[0] + 1);
  };
  auto result = interpolate(1, 2, ChamberSignature{}, 2, f);
  CHECK(result.polynomial.to_string() == "mu1^2 - 3*nu1 + 1");
  CHECK(result.nodes.size() == 6);
  CHECK_FALSE(result.holdout.empty());

  // A degree that is too small is caught by the held-out points.
  LatticeFunction cubic = [](const LatticePoint& p) { return Rational(p.mu[0] * p.mu[0] * p.mu[0]); };
  CHECK(kind_of([&] { interpolate(1, 1, ChamberSignature{}, 2, cubic); }) == ErrorKind::DegreeBoundViolated);

  CHECK(monomials_up_to(2, 2).size() == 6);
}

TEST_CASE("chamber polynomials of twisted numbers") {
  auto one_one = interpolate_chamber(0, 1, 1, ChamberSignature{});
  CHECK(one_one.polynomial.to_string() == "1/2*mu1 - 1/2");
  CHECK(one_one.degree == 1);

  auto genus_one = interpolate_chamber(1, 1, 1, ChamberSignature{});
  CHECK(genus_one.polynomial.to_string() == "2/3*mu1^3 - mu1^2 + 1/3*mu1");
  CHECK(genus_one.polynomial.evaluate(std::vector<int>{3}) == 10);

  auto one_two = interpolate_chamber(0, 1, 2, ChamberSignature{});
  CHECK(one_two.polynomial.to_string() == "2*mu1^2 - 2*mu1*nu1 + 2*nu1^2 - 2*mu1");
  // Off the interpolation nodes the polynomial still matches the count.
  const std::vector<int> mu{9};
  const std::vector<int> nu{5, 4};
  CHECK(one_two.polynomial.evaluate(canonical_coordinates(mu, nu)) == labeled_twisted_hurwitz(0, mu, nu));
}

TEST_CASE("wall crossing across I=1:J=1 in shape (2,2)") {
  WallCrossing wc(2, 2);
  const Wall wall = wall_list(2, 2)[0];
  const ChamberSignature c1{{1, 1}};
  const ChamberSignature c2{{-1, 1}};
  const Polynomial lhs = wc.lhs(wall, c1, c2);

  auto check = [&](std::vector<int> mu, std::vector<int> nu, long expected_lhs, long published) {
    const LatticePoint p{mu, nu};
    const Rational value = lhs.evaluate(canonical_coordinates(mu, nu));
    CHECK(value == expected_lhs);
    CHECK(wc.rhs(wall, c1, c2, p, WallCrossingFormula::AsPublished).value == published);
    CHECK(wc.rhs(wall, c1, c2, p, WallCrossingFormula::EndExcluded).value == expected_lhs);
  };
  check({3, 1}, {2, 2}, 64, 64);
  check({4, 1}, {3, 2}, 124, 124);
  check({4, 2}, {3, 3}, 160, 160);
  // Off the |delta| = 1 layer only the end-excluded variant balances.
  check({4, 1}, {2, 3}, 272, 320);
  check({5, 1}, {2, 4}, 720, 936);

  const auto terms = wc.rhs(wall, c1, c2, LatticePoint{{4, 1}, {2, 3}}, WallCrossingFormula::EndExcluded);
  CHECK(terms.delta == 2);
  CHECK(terms.value == terms.h_c1 - terms.h_c2 + Rational(2) * (terms.first_term + terms.second_term));

  CHECK(kind_of([&] { wc.lhs(wall, c1, ChamberSignature{{1, -1}}); }) == ErrorKind::NonAdjacentChambers);
  CHECK(kind_of([] { WallCrossing(1, 1); }) == ErrorKind::InvalidInput);
}
