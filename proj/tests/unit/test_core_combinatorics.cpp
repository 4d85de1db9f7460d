#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "twh/b_tilde.hpp"
#include "twh/error.hpp"
#include "twh/partition.hpp"
#include "twh/permutation.hpp"
#include "twh/rational.hpp"

using namespace twh;

namespace {

// Oracle: scan all of S_2n and keep the permutations passing the membership
// test written directly from the definition.
std::set<Permutation> b_tilde_by_exhaustion(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  std::iota(images.begin(), images.end(), 0);
  std::set<Permutation> out;
  do {
    Permutation p(images);
    if (is_in_b_tilde(p, lambda, n)) out.insert(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::set<Permutation> parse_all(int degree, std::initializer_list<const char*> cycles) {
  std::set<Permutation> out;
  for (const char* c : cycles) out.insert(Permutation::parse(degree, c));
  return out;
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(Rational(4, 8)) == "1/2");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(power_of_two(-3) == Rational(1, 8));
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("partition validation, parsing and automorphisms") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  bool sorted = true;
  Partition p = Partition::parse("1,2,2", &sorted);
  CHECK_FALSE(sorted);
  CHECK(p.parts() == std::vector<int>{2, 2, 1});
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.aut_order() == 2);
  CHECK(Partition({1, 1, 1}).aut_order() == 6);
  CHECK(p.to_string() == "(2,2,1)");
  CHECK(p.doubled().parts() == std::vector<int>{2, 2, 2, 2, 1, 1});
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4).front() == Partition({4}));
  nlohmann::json j = p;
  CHECK(j.dump() == "[2,2,1]");
  CHECK(j.get<Partition>() == p);
}

TEST_CASE("permutation cycles, composition and serialization") {
  Permutation p = Permutation::parse(6, "(1 2)(4 5)");
  CHECK(p.to_cycle_string() == "(1 2)(3)(4 5)(6)");
  CHECK(p.cycle_type() == Partition({2, 2, 1, 1}));
  CHECK(Permutation::parse(6, "(123)(654)").to_cycle_string() == "(1 2 3)(4 6 5)");
  CHECK_THROWS_AS(Permutation::parse(4, "(1 2)(2 3)"), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);

  Permutation a = Permutation::parse(3, "(1 2)");
  Permutation b = Permutation::parse(3, "(2 3)");
  // a*b applies b first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK((a * b).to_cycle_string() == "(1 2 3)");
  CHECK((a * b * (a * b).inverse()) == Permutation::identity(3));
  CHECK(a.is_transposition());
  CHECK_FALSE((a * b).is_transposition());

  nlohmann::json j = p;
  CHECK(j.dump() == "[2,1,3,5,4,6]");
  CHECK(j.get<Permutation>() == p);
}

TEST_CASE("make_tau") {
  CHECK(make_tau(3).to_cycle_string() == "(1 4)(2 5)(3 6)");
  CHECK(make_tau(1).to_cycle_string() == "(1 2)");
  CHECK(make_tau(2).to_cycle_string() == "(1 3)(2 4)");
  try {
    make_tau(0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDegree);
  }
}

TEST_CASE("cycle_classification") {
  auto cls = cycle_classification(Permutation::parse(6, "(1 2)(4 5)"), 3);
  REQUIRE(cls.pairs.size() == 2);
  CHECK(cls.self_symmetric.empty());
  CHECK(cycle_string(cls.pairs[0].first) == "(1 2)");
  CHECK(cycle_string(cls.pairs[0].second) == "(4 5)");
  CHECK(cycle_string(cls.pairs[1].first) == "(3)");
  CHECK(cycle_string(cls.pairs[1].second) == "(6)");

  auto id = cycle_classification(Permutation::identity(4), 2);
  REQUIRE(id.pairs.size() == 2);
  CHECK(cycle_string(id.pairs[0].first) == "(1)");
  CHECK(cycle_string(id.pairs[0].second) == "(3)");

  try {
    cycle_classification(Permutation::parse(4, "(1 2 3 4)"), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTwistedSymmetric);
  }

  // tau itself is self-symmetric in every transposition.
  auto t = cycle_classification(make_tau(2), 2);
  CHECK(t.pairs.empty());
  CHECK(t.self_symmetric.size() == 2);
}

TEST_CASE("is_in_b_tilde on listed elements") {
  CHECK(is_in_b_tilde(Permutation::parse(6, "(1 2)(3)(4 5)(6)"), Partition({2, 1}), 3));
  CHECK(is_in_b_tilde(Permutation::parse(6, "(1 2 3)(6 5 4)"), Partition({3}), 3));
  CHECK(is_in_b_tilde(Permutation::parse(4, "(1 2)(3 4)"), Partition({2}), 2));
  CHECK_FALSE(is_in_b_tilde(make_tau(2), Partition({1, 1}), 2));
  CHECK_FALSE(is_in_b_tilde(Permutation::parse(4, "(1 2)(3 4)"), Partition({1, 1}), 2));
}

TEST_CASE("enumerate_b_tilde reproduces the listed elements verbatim") {
  auto as_set = [](const std::vector<Permutation>& v) { return std::set<Permutation>(v.begin(), v.end()); };
  CHECK(as_set(enumerate_b_tilde(Partition({2, 1}))) ==
        parse_all(6, {"(12)(3)(45)(6)", "(13)(2)(46)(5)", "(15)(3)(24)(6)", "(16)(2)(34)(5)", "(23)(1)(56)(4)",
                      "(26)(1)(53)(4)"}));
  CHECK(as_set(enumerate_b_tilde(Partition({3}))) ==
        parse_all(6, {"(123)(654)", "(132)(564)", "(126)(354)", "(162)(534)", "(135)(264)", "(153)(624)",
                      "(156)(324)", "(165)(234)"}));
  CHECK(as_set(enumerate_b_tilde(Partition({2}))) == parse_all(4, {"(12)(34)", "(14)(23)"}));
  auto trivial = enumerate_b_tilde(Partition({1}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == Permutation::identity(2));
}

TEST_CASE("enumerate_b_tilde agrees with exhaustive scan and cardinality formula") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CAPTURE(lambda.to_string());
      auto listed = enumerate_b_tilde(lambda);
      std::set<Permutation> unique(listed.begin(), listed.end());
      CHECK(unique.size() == listed.size());
      CHECK(Integer(static_cast<unsigned long>(listed.size())) == b_tilde_cardinality(lambda));
      for (const auto& p : listed) {
        CHECK(cycle_classification(p, n).self_symmetric.empty());
      }
      if (n <= 3) CHECK(unique == b_tilde_by_exhaustion(lambda));
    }
  }
}

TEST_CASE("enumerate_b_tilde is deterministic and capped") {
  CHECK(enumerate_b_tilde(Partition({2, 2})) == enumerate_b_tilde(Partition({2, 2})));
  try {
    enumerate_b_tilde(Partition({7}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(std::string(e.what()).find("degree too large for exhaustive enumeration") != std::string::npos);
  }
  CHECK(enumerate_b_tilde(Partition({7}), 14).size() == 46080);
}

TEST_CASE("b_tilde_cardinality and double_factorial") {
  CHECK(b_tilde_cardinality(Partition({2, 1})) == 6);
  CHECK(b_tilde_cardinality(Partition({3})) == 8);
  CHECK(b_tilde_cardinality(Partition({2})) == 2);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(6) == 48);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(5), Error);
}

TEST_CASE("self-symmetric cycles have even length") {
  // Every element of C~(tau) in S_6: self-symmetric cycles must be even.
  std::vector<int> images(6);
  std::iota(images.begin(), images.end(), 0);
  int twisted = 0;
  do {
    Permutation p(images);
    try {
      auto cls = cycle_classification(p, 3);
      ++twisted;
      for (const auto& c : cls.self_symmetric) CHECK(c.size() % 2 == 0);
    } catch (const Error&) {
    }
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(twisted > 0);
}
