#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twh/rational.hpp"

namespace twh {

/// Weakly decreasing tuple of positive integers. The empty partition is
/// allowed only when constructed explicitly via the default constructor.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidInput unless every part is >= 1 and the parts are sorted
  /// weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts first; `was_sorted` reports whether the input order
  /// already matched.
  static Partition from_unsorted(std::vector<int> parts, bool* was_sorted = nullptr);

  /// Comma-separated positive integers, e.g. "2,2,1"; sorted on the way in.
  static Partition parse(const std::string& text, bool* was_sorted = nullptr);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::span<const int> view() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }
  bool empty() const noexcept { return parts_.empty(); }

  /// n = sum of parts.
  int size() const noexcept { return size_; }
  /// Number of parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// prod_k (multiplicity of k)!
  Integer aut_order() const;
  Integer product_of_parts() const;

  /// The partition 2*lambda of 2n where every part appears twice.
  Partition doubled() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// |Aut| of an arbitrary (not necessarily sorted) weight tuple.
Integer tuple_aut_order(std::span<const int> weights);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

}  // namespace twh
