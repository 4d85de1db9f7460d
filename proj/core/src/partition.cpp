#include "twh/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twh/error.hpp"

namespace twh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorKind::InvalidInput, "partition parts must be positive");
  }
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw Error(ErrorKind::InvalidInput, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts, bool* was_sorted) {
  bool sorted = std::is_sorted(parts.begin(), parts.end(), std::greater<>());
  if (was_sorted != nullptr) *was_sorted = sorted;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text, bool* was_sorted) {
  std::vector<int> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "cannot parse partition '" + text + "'");
    }
    if (used != item.size()) {
      throw Error(ErrorKind::InvalidInput, "cannot parse partition '" + text + "'");
    }
    parts.push_back(value);
  }
  if (parts.empty()) throw Error(ErrorKind::InvalidInput, "empty partition");
  return from_unsorted(std::move(parts), was_sorted);
}

Integer Partition::aut_order() const { return tuple_aut_order(parts_); }

Integer Partition::product_of_parts() const {
  Integer product = 1;
  for (int p : parts_) product *= p;
  return product;
}

Partition Partition::doubled() const {
  std::vector<int> twice;
  twice.reserve(parts_.size() * 2);
  for (int p : parts_) {
    twice.push_back(p);
    twice.push_back(p);
  }
  return Partition(std::move(twice));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Integer tuple_aut_order(std::span<const int> weights) {
  std::map<int, unsigned> multiplicity;
  for (int w : weights) ++multiplicity[w];
  Integer order = 1;
  for (const auto& [weight, count] : multiplicity) order *= factorial(count);
  return order;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, largest); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition::from_unsorted(j.get<std::vector<int>>());
}

}  // namespace twh
