#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twh/partition.hpp"

namespace twh {

/// A cycle as a list of 0-based points, starting at its smallest element.
using Cycle = std::vector<int>;

/// Bijection of {0, ..., N-1}. Points are 0-based internally; every external
/// format (cycle strings, JSON image arrays) is 1-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection of {0..N-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);
  /// Builds a permutation of {1..degree} from 1-based cycles.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& one_based_cycles);
  /// Parses "(1 4)(2 5)(3 6)"; entries may be separated by spaces or, for
  /// single-digit points, written adjacently as in "(123)(654)".
  static Permutation parse(int degree, const std::string& cycle_notation);
  static Permutation from_one_based_images(std::span<const int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;

  /// Cycles ordered by smallest element; each cycle starts at its smallest
  /// element. Fixed points are included as 1-cycles.
  std::vector<Cycle> cycles() const;
  Partition cycle_type() const;
  bool is_transposition() const;

  std::string to_cycle_string() const;
  std::vector<int> one_based_images() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)): b is applied first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation operator*(const Permutation& a, const Permutation& b);

std::string cycle_string(const Cycle& cycle);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

}  // namespace twh
