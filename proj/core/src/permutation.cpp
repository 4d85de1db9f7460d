#include "twh/permutation.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "twh/error.hpp"

namespace twh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= degree() || hit[static_cast<std::size_t>(image)]) {
      throw Error(ErrorKind::InvalidInput, "images do not form a bijection");
    }
    hit[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= degree || b >= degree) {
    throw Error(ErrorKind::InvalidInput, "invalid transposition");
  }
  Permutation p = identity(degree);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& one_based_cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree), -1);
  for (const auto& cycle : one_based_cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k] - 1;
      int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree ||
          images[static_cast<std::size_t>(from)] != -1) {
        throw Error(ErrorKind::InvalidInput, "malformed cycle notation");
      }
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  for (int i = 0; i < degree; ++i) {
    if (images[static_cast<std::size_t>(i)] == -1) images[static_cast<std::size_t>(i)] = i;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto fail = [&]() { throw Error(ErrorKind::InvalidInput, "malformed cycle notation '" + text + "'"); };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail();
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail();
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    bool has_separator = body.find_first_of(" ,") != std::string::npos;
    std::string token;
    auto flush = [&]() {
      if (!token.empty()) cycle.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : body) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (has_separator) {
          token += c;
        } else {
          cycle.push_back(c - '0');
        }
      } else if (c == ' ' || c == ',') {
        flush();
      } else {
        fail();
      }
    }
    flush();
    if (cycle.empty()) fail();
    cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::from_one_based_images(std::span<const int> images) {
  std::vector<int> zero_based;
  zero_based.reserve(images.size());
  for (int image : images) zero_based.push_back(image - 1);
  return Permutation(std::move(zero_based));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lengths));
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) ++moved;
  }
  if (moved != 2) return false;
  for (int i = 0; i < degree(); ++i) {
    int j = images_[static_cast<std::size_t>(i)];
    if (j != i && images_[static_cast<std::size_t>(j)] != i) return false;
  }
  return true;
}

std::string cycle_string(const Cycle& cycle) {
  std::string out = "(";
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(cycle[k] + 1);
  }
  return out + ")";
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& c : cycles()) out += cycle_string(c);
  return out;
}

std::vector<int> Permutation::one_based_images() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (int image : images_) out.push_back(image + 1);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidInput, "degree mismatch in composition");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) images[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

void to_json(nlohmann::json& j, const Permutation& p) { j = p.one_based_images(); }

void from_json(const nlohmann::json& j, Permutation& p) {
  p = Permutation::from_one_based_images(j.get<std::vector<int>>());
}

}  // namespace twh
