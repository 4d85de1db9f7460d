#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<const char*> args) {
  args.insert(args.begin(), "hurwitz");
  std::ostringstream out;
  std::ostringstream err;
  const int code = twh::cli::main_entry(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count compares both engines") {
  auto r = run({"count", "--g", "1", "--mu", "4", "--nu", "2,2", "--engine", "both"});
  CHECK(r.code == twh::cli::kOk);
  CHECK(contains(r.out, "160 == 160 OK"));

  auto single = run({"count", "--g", "0", "--mu", "2", "--nu", "2"});
  CHECK(single.code == 0);
  CHECK(contains(single.out, "1/2"));

  auto json = run({"--format", "json", "count", "--g", "1", "--mu", "4", "--nu", "2,2", "--engine", "both"});
  REQUIRE(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("agree") == true);
  CHECK(j.at("brute") == "160");
}

TEST_CASE("count error paths") {
  CHECK(run({"count", "--g", "0", "--mu", "3", "--nu", "2"}).code == twh::cli::kInvalidInput);
  CHECK(run({"count", "--g", "0", "--mu", "x", "--nu", "2"}).code == twh::cli::kInvalidInput);
  CHECK(run({"count", "--mu", "1"}).code == twh::cli::kInvalidInput);
  auto capped = run({"--max-2n", "6", "count", "--g", "1", "--mu", "4", "--nu", "2,2", "--engine", "brute"});
  CHECK(capped.code == twh::cli::kCapExceeded);
  CHECK(contains(capped.err, "exceeds the cap"));
  CHECK(run({"count", "--g", "0", "--mu", "2", "--nu", "2", "--disconnected"}).code == twh::cli::kInvalidInput);
}

TEST_CASE("graphs lists the flagship covers") {
  auto r = run({"graphs", "--g", "1", "--mu", "4", "--nu", "2,2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "8 graphs, total 160"));
  auto dot = run({"--format", "dot", "graphs", "--g", "1", "--mu", "4", "--nu", "2,2"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "digraph"));
  auto json = run({"--format", "json", "graphs", "--g", "0", "--mu", "4", "--nu", "3,1"});
  CHECK(json.code == 0);
  std::istringstream lines(json.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++count;
  }
  CHECK(count == 4);  // three covers plus the summary
}

TEST_CASE("poly prints chamber polynomials") {
  auto r = run({"poly", "--g", "0", "--shape", "1,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1/2*mu1 - 1/2"));
  auto chamber = run({"poly", "--g", "0", "--shape", "2,2", "--chamber", "(+,+)"});
  CHECK(chamber.code == 0);
  CHECK(contains(chamber.out, "(+,+)"));
  CHECK(run({"poly", "--shape", "2,2", "--chamber", "(+,+,+)"}).code == twh::cli::kInvalidInput);
}

TEST_CASE("wallcross checks points") {
  auto r = run({"wallcross", "--shape", "2,2", "--wall", "I=1:J=1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "3/3 points: LHS == RHS"));
  auto published = run({"wallcross", "--shape", "2,2", "--wall", "I=1:J=1", "--formula", "published", "--near"});
  CHECK(published.code == 0);
  auto off_layer = run({"wallcross", "--shape", "2,2", "--wall", "I=1:J=1", "--formula", "published", "--points", "6"});
  CHECK(off_layer.code == twh::cli::kVerificationFailed);
  CHECK(run({"wallcross", "--shape", "2,2", "--wall", "I=1,2:J="}).code == twh::cli::kInvalidInput);
}

TEST_CASE("btilde lists elements") {
  auto r = run({"btilde", "--lambda", "2,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "6 elements"));
  auto capped = run({"--max-2n", "4", "btilde", "--lambda", "3"});
  CHECK(capped.code == twh::cli::kCapExceeded);
}
