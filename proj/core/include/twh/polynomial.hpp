#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twh/rational.hpp"

namespace twh {

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so equality is structural.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& value);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }

  void add_term(const Exponent& exponent, const Rational& coefficient);
  Rational coefficient(const Exponent& exponent) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const int> point) const;

  /// Total degree -> homogeneous component; the zero polynomial has none.
  std::map<int, Polynomial> homogeneous_parts() const;

  /// "2/3*mu1^3 - mu1^2 + 1/3*mu1": terms by descending total degree, then
  /// descending exponent vector.
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void require_same_variables(const Polynomial& other) const;

  std::vector<std::string> variables_;
  std::map<Exponent, Rational> terms_;
};

/// mu1..mum, nu1..nu{n-1}: the last nu coordinate is eliminated through
/// sum mu = sum nu.
std::vector<std::string> canonical_variables(int m, int n);

/// The coordinates of (mu, nu) in canonical_variables order.
std::vector<int> canonical_coordinates(std::span<const int> mu, std::span<const int> nu);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

}  // namespace twh
