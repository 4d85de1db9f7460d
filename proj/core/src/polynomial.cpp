#include "twh/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "twh/error.hpp"

namespace twh {

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& value) {
  Polynomial p(std::move(variables));
  p.add_term(Exponent(p.variable_count(), 0), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.variable_count()) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  Exponent e(p.variable_count(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponent& exponent, const Rational& coefficient) {
  if (exponent.size() != variables_.size()) throw Error(ErrorKind::InvalidInput, "exponent has the wrong length");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) degree = std::max(degree, std::accumulate(e.begin(), e.end(), 0));
  return degree;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_.size()) throw Error(ErrorKind::InvalidInput, "point has the wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int p = 0; p < e[k]; ++p) term *= point[k];
    }
    total += term;
  }
  return total;
}

Rational Polynomial::evaluate(std::span<const int> point) const {
  std::vector<Rational> values(point.begin(), point.end());
  return evaluate(std::span<const Rational>(values));
}

std::map<int, Polynomial> Polynomial::homogeneous_parts() const {
  std::map<int, Polynomial> parts;
  for (const auto& [e, c] : terms_) {
    int degree = std::accumulate(e.begin(), e.end(), 0);
    auto it = parts.try_emplace(degree, variables_).first;
    it->second.add_term(e, c);
  }
  return parts;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponent, Rational>*> ordered;
  for (const auto& term : terms_) ordered.push_back(&term);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (const auto* term : ordered) {
    const auto& [e, c] = *term;
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variables_[k];
      if (e[k] > 1) monomial += "^" + std::to_string(e[k]);
    }
    if (monomial.empty()) {
      out += twh::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += twh::to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (variables_ != other.variables_) throw Error(ErrorKind::InvalidInput, "polynomials use different variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_variables(b);
  Polynomial out(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::vector<std::string> canonical_variables(int m, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("mu" + std::to_string(i));
  for (int j = 1; j < n; ++j) names.push_back("nu" + std::to_string(j));
  return names;
}

std::vector<int> canonical_coordinates(std::span<const int> mu, std::span<const int> nu) {
  std::vector<int> coords(mu.begin(), mu.end());
  if (!nu.empty()) coords.insert(coords.end(), nu.begin(), nu.end() - 1);
  return coords;
}

void to_json(nlohmann::json& j, const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  j = {{"vars", p.variables()}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, Polynomial& p) {
  p = Polynomial(j.at("vars").get<std::vector<std::string>>());
  for (const auto& term : j.at("terms")) {
    p.add_term(term.at("exp").get<Polynomial::Exponent>(), parse_rational(term.at("coef").get<std::string>()));
  }
}

}  // namespace twh
