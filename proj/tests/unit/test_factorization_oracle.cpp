#include <doctest.h>

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twh/b_tilde.hpp"
#include "twh/classical.hpp"
#include "twh/error.hpp"
#include "twh/factorization.hpp"

using namespace twh;

namespace {

HurwitzInput input(int g, std::vector<int> mu, std::vector<int> nu, bool connected = true) {
  return {g, Partition(std::move(mu)), Partition(std::move(nu)), connected};
}

// Oracle: recompose the full product for every tuple with plain Permutation
// arithmetic and test transitivity by orbit closure.
std::uint64_t naive_count(const HurwitzInput& in) {
  const int n = in.mu.size();
  const int b = branch_count(in.genus, in.mu, in.nu);
  const Permutation tau = make_tau(n);
  std::vector<Permutation> etas;
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      Permutation t = Permutation::transposition(2 * n, i, j);
      if (!(t == tau * t * tau)) etas.push_back(t);
    }
  }
  if (etas.empty()) return 0;
  const Partition target = in.nu.doubled();
  std::uint64_t count = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(b), 0);
  for (const auto& sigma1 : enumerate_b_tilde(in.mu)) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      Permutation s = sigma1;
      for (std::size_t k = 0; k < pick.size(); ++k) {
        const auto& eta = etas[pick[k]];
        s = eta * s * (tau * eta * tau);
      }
      if (s.cycle_type() == target) {
        bool ok = true;
        if (in.connected) {
          std::set<int> orbit{0};
          bool grew = true;
          while (grew) {
            grew = false;
            std::vector<int> current(orbit.begin(), orbit.end());
            for (int x : current) {
              std::vector<int> images{sigma1(x)};
              for (auto k : pick) {
                images.push_back(etas[k](x));
                images.push_back((tau * etas[k] * tau)(x));
              }
              for (int y : images) grew |= orbit.insert(y).second;
            }
          }
          ok = static_cast<int>(orbit.size()) == 2 * n;
        }
        if (ok) ++count;
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == etas.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("branch_count") {
  CHECK(branch_count(1, Partition({4}), Partition({2, 2})) == 3);
  CHECK(branch_count(0, Partition({1}), Partition({1})) == 1);
  CHECK(branch_count(0, Partition({5}), Partition({3, 2})) == 2);
  CHECK_THROWS_AS(branch_count(0, Partition({2}), Partition({1})), Error);
  try {
    // With g >= 0 the count b is always positive; a negative genus is
    // rejected before b is formed.
    branch_count(-1, Partition({1}), Partition({1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("count_twisted_tuples on hand-checkable inputs") {
  CHECK(count_twisted_tuples(input(0, {2}, {2})).count == 4);
  CHECK(count_twisted_tuples(input(0, {1}, {1})).count == 0);
  CHECK(count_twisted_tuples(input(1, {4}, {2, 2})).count == 61440);
}

TEST_CASE("incremental scan agrees with naive recomposition") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        for (int g = 0; g <= 2; ++g) {
          const int b = g - 1 + mu.length() + nu.length();
          if (b < 1 || b > 3) continue;
          for (bool connected : {true, false}) {
            HurwitzInput in{g, mu, nu, connected};
            CAPTURE(g);
            CAPTURE(mu.to_string());
            CAPTURE(nu.to_string());
            CAPTURE(connected);
            CHECK(count_twisted_tuples(in).count == Integer(static_cast<unsigned long>(naive_count(in))));
          }
        }
      }
    }
  }
}

TEST_CASE("twisted_hurwitz_bruteforce values") {
  CHECK(twisted_hurwitz_bruteforce(input(1, {4}, {2, 2})) == 160);
  CHECK(twisted_hurwitz_bruteforce(input(0, {2}, {2})) == Rational(1, 2));
  // The unlabeled count; the end-labeled value |Aut nu| * 1 = 2 is the one the
  // genus-0 polynomial mu(mu-1)+nu1(nu1-1)+nu2(nu2-1) gives at (2,1,1).
  CHECK(twisted_hurwitz_bruteforce(input(0, {2}, {1, 1})) == 1);
  CHECK(twisted_hurwitz_bruteforce(input(1, {3}, {3})) == 10);
}

TEST_CASE("scan invariants: sigma2 stays twisted and inside B~_nu") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        const int b = -1 + mu.length() + nu.length();
        for (int g = 0; b + g <= 3; ++g) {
          if (b + g < 1) continue;
          auto scan = count_twisted_tuples({g, mu, nu, false});
          CHECK(scan.sigma2_not_twisted == 0);
          CHECK(scan.sigma2_outside_b_tilde == 0);
        }
      }
    }
  }
}

TEST_CASE("parallel scan is deterministic") {
  ScanOptions one;
  ScanOptions many;
  many.threads = 4;
  auto in = input(1, {3, 1}, {2, 2});
  CHECK(count_twisted_tuples(in, one).count == count_twisted_tuples(in, many).count);
}

TEST_CASE("tuple dump: every line satisfies the product relation") {
  std::ostringstream sink;
  ScanOptions options;
  options.tuple_sink = &sink;
  auto in = input(0, {3}, {2, 1});
  auto scan = count_twisted_tuples(in, options);
  std::istringstream lines(sink.str());
  std::string line;
  int read = 0;
  const Permutation tau = make_tau(3);
  std::set<std::string> seen;
  while (std::getline(lines, line)) {
    ++read;
    seen.insert(line);
    auto j = nlohmann::json::parse(line);
    Permutation s = j.at("sigma1").get<Permutation>();
    for (const auto& e : j.at("etas")) {
      Permutation eta = Permutation::transposition(6, e[0].get<int>() - 1, e[1].get<int>() - 1);
      s = eta * s * (tau * eta * tau);
    }
    CHECK(s == j.at("sigma2").get<Permutation>());
    CHECK(j.at("transitive").get<bool>());
  }
  CHECK(Integer(read) == scan.count);
  CHECK(seen.size() == static_cast<std::size_t>(read));
}

TEST_CASE("tuple set is closed under conjugation by the centralizer of tau") {
  // beta = (1 2)(4 5) commutes with tau = (1 4)(2 5)(3 6).
  const Permutation tau = make_tau(3);
  const Permutation beta = Permutation::parse(6, "(1 2)(4 5)");
  REQUIRE(beta * tau == tau * beta);
  std::ostringstream sink;
  ScanOptions options;
  options.tuple_sink = &sink;
  count_twisted_tuples(input(0, {2, 1}, {3}), options);

  auto key = [](const Permutation& s1, const std::vector<Permutation>& etas) {
    std::string k = s1.to_cycle_string();
    for (const auto& e : etas) k += "|" + e.to_cycle_string();
    return k;
  };
  std::set<std::string> tuples;
  std::vector<std::pair<Permutation, std::vector<Permutation>>> parsed;
  std::istringstream lines(sink.str());
  std::string line;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    Permutation s1 = j.at("sigma1").get<Permutation>();
    std::vector<Permutation> etas;
    for (const auto& e : j.at("etas")) {
      etas.push_back(Permutation::transposition(6, e[0].get<int>() - 1, e[1].get<int>() - 1));
    }
    tuples.insert(key(s1, etas));
    parsed.emplace_back(s1, etas);
  }
  REQUIRE_FALSE(parsed.empty());
  for (const auto& [s1, etas] : parsed) {
    std::vector<Permutation> conjugated;
    for (const auto& e : etas) conjugated.push_back(beta * e * beta.inverse());
    CHECK(tuples.count(key(beta * s1 * beta.inverse(), conjugated)) == 1);
  }
}

TEST_CASE("symmetry in mu and nu, and connected <= disconnected") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        for (int g = 0; g <= 1; ++g) {
          const int b = g - 1 + mu.length() + nu.length();
          if (b < 1 || b > 3) continue;
          Rational forward = twisted_hurwitz_bruteforce({g, mu, nu, true});
          CHECK(forward == twisted_hurwitz_bruteforce({g, nu, mu, true}));
          Rational disconnected = twisted_hurwitz_bruteforce({g, mu, nu, false});
          CHECK(forward <= disconnected);
          CHECK(one_hurwitz_number({g, mu, nu, true}) == disconnected * power_of_two(-b));
        }
      }
    }
  }
}

TEST_CASE("one_hurwitz_number") {
  CHECK(one_hurwitz_number(input(0, {1}, {1})) == 0);
  CHECK(one_hurwitz_number(input(0, {2}, {2})) ==
        Rational(1, 2) * twisted_hurwitz_bruteforce(input(0, {2}, {2}, false)));
}

TEST_CASE("permutations_of_cycle_type") {
  CHECK(permutations_of_cycle_type(Partition({3})).size() == 2);
  CHECK(permutations_of_cycle_type(Partition({2, 2})).size() == 3);
  CHECK(permutations_of_cycle_type(Partition({2, 1, 1})).size() == 6);
  for (const auto& p : permutations_of_cycle_type(Partition({3, 2}))) CHECK(p.cycle_type() == Partition({3, 2}));
}

TEST_CASE("classical_double_hurwitz_bruteforce") {
  CHECK(classical_double_hurwitz_bruteforce(0, Partition({2}), Partition({1, 1})) == Rational(1, 2));
  CHECK(classical_double_hurwitz_bruteforce(0, Partition({1}), Partition({1})) == 1);
  CHECK(classical_double_hurwitz_bruteforce(0, Partition({3}), Partition({1, 1, 1})) == 1);
  CHECK(classical_double_hurwitz_bruteforce(0, Partition({3}), Partition({3})) == Rational(1, 3));
  CHECK_THROWS_AS(classical_double_hurwitz_bruteforce(0, Partition({10}), Partition({10})), Error);
}
