#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twh/b_tilde.hpp"
#include "twh/chambers.hpp"
#include "twh/cover_io.hpp"
#include "twh/error.hpp"
#include "twh/factorization.hpp"
#include "twh/interpolation.hpp"
#include "twh/partition.hpp"
#include "twh/tropical.hpp"
#include "twh/wall_crossing.hpp"

namespace twh::cli {

namespace {

using nlohmann::json;

Partition parse_partition(const std::string& text, const char* name, std::ostream& err) {
  bool was_sorted = true;
  Partition p = Partition::parse(text, &was_sorted);
  if (!was_sorted) err << "warning: --" << name << " reordered to " << p.to_string() << "\n";
  return p;
}

std::pair<int, int> parse_shape(const std::string& text) {
  Partition shape = Partition::parse(text);  // validates positivity
  auto comma = text.find(',');
  if (shape.length() != 2 || comma == std::string::npos) {
    throw Error(ErrorKind::InvalidInput, "--shape must be m,n");
  }
  return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  throw Error(ErrorKind::InvalidInput, "format '" + config.format + "' is not supported by " + config.subcommand);
}

void require_b_cap(int b, const RunConfig& config) {
  if (b > config.max_b) {
    throw Error(ErrorKind::CapExceeded,
                "b = " + std::to_string(b) + " exceeds the cap " + std::to_string(config.max_b));
  }
}

std::string degree_set(const Polynomial& p) {
  std::string out = "{";
  auto parts = p.homogeneous_parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it != parts.rbegin()) out += ",";
    out += std::to_string(it->first);
  }
  return out + "}";
}

std::vector<int> degree_list(const Polynomial& p) {
  std::vector<int> out;
  auto parts = p.homogeneous_parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(it->first);
  return out;
}

std::vector<int> evaluate_point(const LatticePoint& p) { return canonical_coordinates(p.mu, p.nu); }

}  // namespace

RunConfig default_config() {
  RunConfig config;
  if (const char* cap = std::getenv("HURWITZ_MAX_2N")) config.max_2n = std::atoi(cap);
  if (const char* cap = std::getenv("HURWITZ_MAX_B")) config.max_b = std::atoi(cap);
  return config;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"text", "json"});
  const Partition mu = parse_partition(config.mu, "mu", err);
  const Partition nu = parse_partition(config.nu, "nu", err);
  const int b = branch_count(config.genus, mu, nu);
  const bool brute = config.engine == "brute" || config.engine == "both";
  const bool tropical = config.engine == "tropical" || config.engine == "both";
  if (!brute && !tropical) throw Error(ErrorKind::InvalidInput, "--engine must be brute, tropical or both");
  if (config.disconnected && tropical) {
    throw Error(ErrorKind::InvalidInput, "disconnected counts are only available from the brute engine");
  }
  // Check every cap before any engine runs.
  if (brute && 2 * mu.size() > config.max_2n) {
    throw Error(ErrorKind::CapExceeded,
                "2n = " + std::to_string(2 * mu.size()) + " exceeds the cap " + std::to_string(config.max_2n));
  }
  if (tropical) require_b_cap(b, config);

  json report = {{"g", config.genus}, {"mu", mu}, {"nu", nu}, {"b", b}, {"connected", !config.disconnected}};
  std::optional<Rational> brute_value;
  std::optional<Rational> tropical_value;
  if (brute) {
    ScanOptions options;
    options.max_2n = config.max_2n;
    options.threads = config.threads;
    auto scan = count_twisted_tuples({config.genus, mu, nu, !config.disconnected}, options);
    brute_value = Rational(scan.count, double_factorial(2 * mu.size()));
    brute_value->canonicalize();
    report["brute"] = to_string(*brute_value);
    report["tuples"] = to_string(scan.count);
    report["sigma2_outside_b_tilde"] = scan.sigma2_outside_b_tilde;
    if (scan.sigma2_outside_b_tilde > 0 || scan.sigma2_not_twisted > 0) {
      err << "note: " << scan.sigma2_outside_b_tilde << " counted tuples have sigma2 outside B~_nu, "
          << scan.sigma2_not_twisted << " outside C~(tau)\n";
    }
  }
  if (tropical) {
    tropical_value = twisted_hurwitz_tropical(config.genus, mu, nu);
    report["tropical"] = to_string(*tropical_value);
  }

  int code = kOk;
  std::string line;
  if (brute && tropical) {
    const bool agree = *brute_value == *tropical_value;
    report["agree"] = agree;
    line = to_string(*brute_value) + (agree ? " == " : " != ") + to_string(*tropical_value) +
           (agree ? " OK" : " MISMATCH");
    if (!agree) code = kVerificationFailed;
  } else {
    line = to_string(brute ? *brute_value : *tropical_value);
  }
  if (config.format == "json") {
    out << report.dump() << "\n";
  } else {
    out << line << "\n";
  }
  return code;
}

int cmd_graphs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"text", "json", "dot"});
  const Partition mu = parse_partition(config.mu, "mu", err);
  const Partition nu = parse_partition(config.nu, "nu", err);
  require_b_cap(branch_count(config.genus, mu, nu), config);
  TropicalOptions options;
  options.labeled_ends = config.labeled;
  options.prune_weight_one = config.prune;
  const auto contributions = tropical_contributions(config.genus, mu.view(), nu.view(), options);

  Rational total = 0;
  for (std::size_t k = 0; k < contributions.size(); ++k) {
    const auto& c = contributions[k];
    total += c.multiplicity;
    if (config.format == "json") {
      json line = c.cover;
      line["index"] = k + 1;
      line["multiplicity"] = to_string(c.multiplicity);
      line["aut"] = to_string(c.aut_order);
      out << line.dump() << "\n";
    } else if (config.format == "dot") {
      out << "// graph " << k + 1 << ": multiplicity " << to_string(c.multiplicity) << ", |Aut| "
          << to_string(c.aut_order) << "\n"
          << to_dot(c.cover, "graph" + std::to_string(k + 1));
    } else {
      out << "graph " << k + 1 << ": multiplicity " << to_string(c.multiplicity) << ", |Aut| "
          << to_string(c.aut_order) << ", 4-valent vertices " << c.cover.four_valent_count() << "\n";
    }
  }
  if (config.format == "json") {
    out << json{{"graphs", contributions.size()}, {"total", to_string(total)}}.dump() << "\n";
  } else {
    out << (config.format == "dot" ? "// " : "") << contributions.size() << " graphs, total " << to_string(total)
        << "\n";
  }
  return kOk;
}

int cmd_poly(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_format(config, {"text", "json"});
  const auto [m, n] = parse_shape(config.shape);
  std::vector<ChamberSignature> targets;
  if (!config.chamber.empty()) {
    targets.push_back(ChamberSignature::parse(config.chamber));
  } else {
    targets = chambers(m, n, config.bound);
  }
  InterpolationOptions options;
  options.bound = config.bound;
  options.max_bound = std::max(config.bound, 64);
  options.threads = config.threads;

  const bool single = wall_list(m, n).empty();
  json report = {{"g", config.genus}, {"shape", {m, n}}, {"chambers", json::array()}};
  for (const auto& chamber : targets) {
    const auto fit = interpolate_chamber(config.genus, m, n, chamber, options);
    report["chambers"].push_back({{"signature", chamber.to_string()},
                                  {"polynomial", fit.polynomial},
                                  {"pretty", fit.polynomial.to_string()},
                                  {"degrees", degree_list(fit.polynomial)},
                                  {"degree_bound", fit.degree},
                                  {"nodes", fit.nodes.size()},
                                  {"holdout", fit.holdout.size()}});
    if (config.format == "text") {
      if (!single) out << chamber.to_string() << ": ";
      out << fit.polynomial.to_string() << "; degrees " << degree_set(fit.polynomial) << "\n";
    }
  }
  if (config.format == "json") out << report.dump() << "\n";
  return kOk;
}

int cmd_wallcross(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_format(config, {"text", "json"});
  const auto [m, n] = parse_shape(config.shape);
  if (config.points < 1) throw Error(ErrorKind::InvalidInput, "--points must be positive");
  WallCrossingFormula formula;
  if (config.formula == "corrected") {
    formula = WallCrossingFormula::EndExcluded;
  } else if (config.formula == "published") {
    formula = WallCrossingFormula::AsPublished;
  } else {
    throw Error(ErrorKind::InvalidInput, "--formula must be corrected or published");
  }
  InterpolationOptions options;
  options.bound = config.bound;
  options.max_bound = std::max(config.bound, 64);
  options.threads = config.threads;
  WallCrossing wc(m, n, options);
  const auto walls = wall_list(m, n);
  const Wall wall = Wall::parse(config.wall, m, n);
  const auto index = static_cast<std::size_t>(std::find(walls.begin(), walls.end(), wall) - walls.begin());

  // Oriented chamber pairs across the wall, in chamber discovery order.
  const auto found = chambers(m, n, config.bound);
  std::vector<std::pair<ChamberSignature, ChamberSignature>> pairs;
  for (const auto& c1 : found) {
    ChamberSignature c2 = c1;
    c2.signs[index] = -c2.signs[index];
    if (std::find(found.begin(), found.end(), c2) == found.end()) continue;
    if (config.all_pairs || (pairs.empty() && c1.signs[index] > 0)) pairs.emplace_back(c1, c2);
  }
  if (pairs.empty()) throw Error(ErrorKind::ChamberEmpty, "no adjacent chambers across " + wall.to_string());

  int checked = 0;
  int passed = 0;
  json report = {{"shape", {m, n}}, {"wall", wall.to_string()}, {"formula", config.formula}, {"points", json::array()}};
  for (const auto& [c1, c2] : pairs) {
    const Polynomial lhs = wc.lhs(wall, c1, c2);
    std::vector<LatticePoint> sample;
    scan_lattice(m, n, config.bound, [&](const LatticePoint& p) {
      long long delta = wall_form(wall, p.mu, p.nu);
      if (config.near_wall && delta != 1 && delta != -1) return true;
      try {
        if (chamber_signature(p.mu, p.nu) != c1) return true;
      } catch (const Error&) {
        return true;
      }
      sample.push_back(p);
      return static_cast<int>(sample.size()) < config.points;
    });
    if (static_cast<int>(sample.size()) < config.points) {
      throw Error(ErrorKind::ChamberEmpty, "chamber " + c1.to_string() + " has too few points within the bound");
    }
    for (const auto& p : sample) {
      const auto coords = evaluate_point(p);
      const Rational left = lhs.evaluate(std::span<const int>(coords));
      const auto terms = wc.rhs(wall, c1, c2, p, formula);
      const bool ok = left == terms.value;
      ++checked;
      passed += ok ? 1 : 0;
      report["points"].push_back({{"point", p.to_string()},
                                  {"c1", c1.to_string()},
                                  {"c2", c2.to_string()},
                                  {"delta", terms.delta},
                                  {"lhs", to_string(left)},
                                  {"rhs", to_string(terms.value)},
                                  {"h_c1", to_string(terms.h_c1)},
                                  {"h_c2", to_string(terms.h_c2)},
                                  {"first_term", to_string(terms.first_term)},
                                  {"second_term", to_string(terms.second_term)},
                                  {"ok", ok}});
      if (config.format == "text") {
        out << p.to_string() << " " << c1.to_string() << "|" << c2.to_string() << " delta=" << terms.delta
            << ": LHS " << to_string(left) << ", RHS " << to_string(terms.value) << (ok ? " OK" : " MISMATCH")
            << "\n";
        if (!ok) {
          out << "  h0^{C1,delta} = " << to_string(terms.h_c1) << ", h0^{C2,delta} = " << to_string(terms.h_c2)
              << ", first term " << to_string(terms.first_term) << ", second term " << to_string(terms.second_term)
              << "\n";
        }
      }
    }
  }
  report["checked"] = checked;
  report["passed"] = passed;
  if (config.format == "json") {
    out << report.dump() << "\n";
  } else {
    out << passed << "/" << checked << " points: " << (passed == checked ? "LHS == RHS" : "LHS != RHS") << "\n";
  }
  return passed == checked ? kOk : kVerificationFailed;
}

int cmd_btilde(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"text", "json"});
  const Partition lambda = parse_partition(config.lambda, "lambda", err);
  const auto elements = enumerate_b_tilde(lambda, config.max_2n);
  const Integer formula = b_tilde_cardinality(lambda);
  if (config.format == "json") {
    json list = json::array();
    json cycles = json::array();
    for (const auto& p : elements) {
      list.push_back(p);
      cycles.push_back(p.to_cycle_string());
    }
    out << json{{"lambda", lambda}, {"elements", list}, {"cycles", cycles}, {"count", elements.size()},
                {"formula", to_string(formula)}}
               .dump()
        << "\n";
  } else {
    for (const auto& p : elements) out << p.to_cycle_string() << "\n";
    out << elements.size() << " elements; formula " << to_string(formula) << "\n";
  }
  return Integer(static_cast<unsigned long>(elements.size())) == formula ? kOk : kVerificationFailed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.max_2n < 1 || config.max_b < 1) throw Error(ErrorKind::InvalidInput, "caps must be positive");
    if (config.subcommand == "count") return cmd_count(config, out, err);
    if (config.subcommand == "graphs") return cmd_graphs(config, out, err);
    if (config.subcommand == "poly") return cmd_poly(config, out, err);
    if (config.subcommand == "wallcross") return cmd_wallcross(config, out, err);
    if (config.subcommand == "btilde") return cmd_btilde(config, out, err);
    throw Error(ErrorKind::InvalidInput, "unknown subcommand '" + config.subcommand + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CapExceeded: return kCapExceeded;
      case ErrorKind::DegreeBoundViolated: return kVerificationFailed;
      default: return kInvalidInput;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config = default_config();
  CLI::App app{"Twisted double Hurwitz numbers: brute-force and tropical counts, chamber polynomials, wall crossing"};
  app.require_subcommand(1);
  app.add_option("--max-2n", config.max_2n, "Cap on 2n for exhaustive scans (env HURWITZ_MAX_2N)")->capture_default_str();
  app.add_option("--max-b", config.max_b, "Cap on the number of branch points (env HURWITZ_MAX_B)")->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", config.format, "text, json or dot")->capture_default_str();

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--g", config.genus, "Genus")->capture_default_str();
    sub->add_option("--mu", config.mu, "Profile over 0, e.g. 4 or 2,1")->required();
    sub->add_option("--nu", config.nu, "Profile over infinity, e.g. 2,2")->required();
  };
  auto* count = app.add_subcommand("count", "Compute h~_g(mu, nu)");
  add_type(count);
  count->add_option("--engine", config.engine, "brute, tropical or both")->capture_default_str();
  count->add_flag("--disconnected", config.disconnected, "Drop transitivity (brute engine only)");

  auto* graphs = app.add_subcommand("graphs", "List twisted monodromy graphs with multiplicities");
  add_type(graphs);
  graphs->add_flag("--labeled", config.labeled, "Distinguish end pairs by position");
  graphs->add_flag("--prune", config.prune, "Skip covers with a weight-1 4-valent vertex");

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--shape", config.shape, "m,n = l(mu),l(nu)")->required();
    sub->add_option("--bound", config.bound, "Coordinate bound for lattice scans")->capture_default_str();
  };
  auto* poly = app.add_subcommand("poly", "Interpolate the chamber polynomials");
  add_shape(poly);
  poly->add_option("--g", config.genus, "Genus")->capture_default_str();
  poly->add_option("--chamber", config.chamber, "Signature such as (+,-); default all chambers");

  auto* wallcross = app.add_subcommand("wallcross", "Check the genus-0 wall-crossing formula pointwise");
  add_shape(wallcross);
  wallcross->add_option("--wall", config.wall, "Wall such as I=1:J=1")->required();
  wallcross->add_option("--points", config.points, "Points per chamber pair")->capture_default_str();
  wallcross->add_option("--formula", config.formula, "corrected or published")->capture_default_str();
  wallcross->add_flag("--near", config.near_wall, "Only use points with |delta| = 1");
  wallcross->add_flag("--all-pairs", config.all_pairs, "Check every oriented chamber pair across the wall");

  auto* btilde = app.add_subcommand("btilde", "List the elements of B~_lambda");
  btilde->add_option("--lambda", config.lambda, "Partition, e.g. 2,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  for (auto* sub : {count, graphs, poly, wallcross, btilde}) {
    if (sub->parsed()) config.subcommand = sub->get_name();
  }
  return run(config, out, err);
}

}  // namespace twh::cli
