#include "twh/chambers.hpp"

#include <algorithm>
#include <sstream>

#include "twh/error.hpp"

namespace twh {

namespace {

std::vector<int> complement_of(const std::vector<int>& set, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    if (!std::binary_search(set.begin(), set.end(), i)) out.push_back(i);
  }
  return out;
}

std::vector<int> parse_index_list(const std::string& text, int size) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad wall index '" + token + "'");
    }
    if (index < 1 || index > size) throw Error(ErrorKind::InvalidInput, "wall index out of range: " + token);
    out.push_back(index - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join_one_based(const std::vector<int>& set) {
  std::string out;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(set[k] + 1);
  }
  return out;
}

}  // namespace

Wall Wall::complement(int m, int n) const { return {complement_of(I, m), complement_of(J, n)}; }

std::string Wall::to_string() const { return "I=" + join_one_based(I) + ":J=" + join_one_based(J); }

Wall Wall::parse(const std::string& text, int m, int n) {
  auto colon = text.find(':');
  if (colon == std::string::npos || text.rfind("I=", 0) != 0 || text.compare(colon + 1, 2, "J=") != 0) {
    throw Error(ErrorKind::InvalidInput, "wall must look like I=1:J=1, got '" + text + "'");
  }
  Wall wall{parse_index_list(text.substr(2, colon - 2), m), parse_index_list(text.substr(colon + 3), n)};
  if (wall.I.empty() || static_cast<int>(wall.I.size()) >= m || wall.J.empty() ||
      static_cast<int>(wall.J.size()) >= n) {
    throw Error(ErrorKind::InvalidInput, "wall index sets must be non-empty proper subsets");
  }
  if (wall.I.front() != 0) wall = wall.complement(m, n);
  return wall;
}

long long wall_form(const Wall& wall, std::span<const int> mu, std::span<const int> nu) {
  long long delta = 0;
  for (int i : wall.I) delta += mu[static_cast<std::size_t>(i)];
  for (int j : wall.J) delta -= nu[static_cast<std::size_t>(j)];
  return delta;
}

std::vector<Wall> wall_list(int m, int n) {
  std::vector<Wall> walls;
  if (m < 2 || n < 2) return walls;
  for (unsigned imask = 1; imask + 1 < (1u << m); imask += 2) {  // odd masks contain index 0
    for (unsigned jmask = 1; jmask + 1 < (1u << n); ++jmask) {
      Wall wall;
      for (int i = 0; i < m; ++i) {
        if (imask & (1u << i)) wall.I.push_back(i);
      }
      for (int j = 0; j < n; ++j) {
        if (jmask & (1u << j)) wall.J.push_back(j);
      }
      walls.push_back(std::move(wall));
    }
  }
  return walls;
}

std::string ChamberSignature::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (k > 0) out += ',';
    out += signs[k] > 0 ? '+' : '-';
  }
  return out + ")";
}

ChamberSignature ChamberSignature::parse(const std::string& text) {
  ChamberSignature sig;
  for (char c : text) {
    if (c == '+') {
      sig.signs.push_back(1);
    } else if (c == '-') {
      sig.signs.push_back(-1);
    } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
      throw Error(ErrorKind::InvalidInput, "signature must look like (+,-), got '" + text + "'");
    }
  }
  return sig;
}

std::string LatticePoint::to_string() const {
  auto tuple = [](const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(parts[k]);
    }
    return out + ")";
  };
  return "(" + tuple(mu) + "," + tuple(nu) + ")";
}

ChamberSignature chamber_signature(std::span<const int> mu, std::span<const int> nu) {
  ChamberSignature sig;
  for (const auto& wall : wall_list(static_cast<int>(mu.size()), static_cast<int>(nu.size()))) {
    long long delta = wall_form(wall, mu, nu);
    if (delta == 0) throw Error(ErrorKind::OnWall, "point lies on the wall " + wall.to_string());
    sig.signs.push_back(delta > 0 ? 1 : -1);
  }
  return sig;
}

namespace {

// Fills coords[k..] with every composition of `remaining` into parts in
// [1, bound], lexicographically; the last slot takes whatever is left.
bool compositions(std::vector<int>& coords, std::size_t k, int remaining, int bound,
                  const std::function<bool()>& leaf) {
  if (k + 1 == coords.size()) {
    if (remaining < 1 || remaining > bound) return true;
    coords[k] = remaining;
    return leaf();
  }
  const int slots_after = static_cast<int>(coords.size() - k - 1);
  for (int x = 1; x <= bound && remaining - x >= slots_after; ++x) {
    coords[k] = x;
    if (!compositions(coords, k + 1, remaining - x, bound, leaf)) return false;
  }
  return true;
}

}  // namespace

void scan_lattice(int m, int n, int bound, const std::function<bool(const LatticePoint&)>& visit) {
  if (m < 1 || n < 1 || bound < 1) throw Error(ErrorKind::InvalidInput, "scan needs m, n, bound >= 1");
  LatticePoint point{std::vector<int>(static_cast<std::size_t>(m)), std::vector<int>(static_cast<std::size_t>(n))};
  for (int degree = std::max(m, n); degree <= std::min(m, n) * bound; ++degree) {
    bool keep_going = compositions(point.mu, 0, degree, bound, [&] {
      return compositions(point.nu, 0, degree, bound, [&] { return visit(point); });
    });
    if (!keep_going) return;
  }
}

std::vector<LatticePoint> chamber_sample(const ChamberSignature& signature, int m, int n, int count, int bound) {
  if (count < 1) throw Error(ErrorKind::InvalidInput, "count must be positive");
  const auto walls = wall_list(m, n);
  if (signature.signs.size() != walls.size()) {
    throw Error(ErrorKind::InvalidInput, "signature has " + std::to_string(signature.signs.size()) +
                                             " signs but there are " + std::to_string(walls.size()) + " walls");
  }
  std::vector<LatticePoint> out;
  scan_lattice(m, n, bound, [&](const LatticePoint& p) {
    for (std::size_t w = 0; w < walls.size(); ++w) {
      long long delta = wall_form(walls[w], p.mu, p.nu);
      if (delta == 0 || (delta > 0) != (signature.signs[w] > 0)) return true;
    }
    out.push_back(p);
    return static_cast<int>(out.size()) < count;
  });
  if (static_cast<int>(out.size()) < count) {
    throw Error(ErrorKind::ChamberEmpty, "only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                             " points of chamber " + signature.to_string() + " within bound " +
                                             std::to_string(bound));
  }
  return out;
}

std::vector<ChamberSignature> chambers(int m, int n, int bound) {
  std::vector<ChamberSignature> found;
  scan_lattice(m, n, bound, [&](const LatticePoint& p) {
    try {
      auto sig = chamber_signature(p.mu, p.nu);
      if (std::find(found.begin(), found.end(), sig) == found.end()) found.push_back(std::move(sig));
    } catch (const Error&) {
    }
    return true;
  });
  return found;
}

}  // namespace twh
