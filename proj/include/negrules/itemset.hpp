#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "negrules/error.hpp"

namespace negrules {

using ItemId = std::uint32_t;

/// A set of item ids stored as a strictly ascending vector.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> ids) : items_(ids) { normalize(); }
  explicit Itemset(std::vector<ItemId> ids) : items_(std::move(ids)) { normalize(); }

  /// Wraps ids that the caller guarantees are already strictly ascending.
  static Itemset from_sorted(std::vector<ItemId> ids) {
    Itemset s;
    s.items_ = std::move(ids);
    return s;
  }

  [[nodiscard]] std::span<const ItemId> items() const noexcept { return items_; }
  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] ItemId operator[](std::size_t i) const noexcept { return items_[i]; }
  [[nodiscard]] auto begin() const noexcept { return items_.begin(); }
  [[nodiscard]] auto end() const noexcept { return items_.end(); }

  [[nodiscard]] bool contains(ItemId id) const noexcept {
    return std::binary_search(items_.begin(), items_.end(), id);
  }
  [[nodiscard]] bool includes(const Itemset& other) const noexcept {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
  }
  [[nodiscard]] bool disjoint(const Itemset& other) const noexcept {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  [[nodiscard]] Itemset unite(const Itemset& other) const {
    std::vector<ItemId> out;
    out.reserve(size() + other.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset& a, const Itemset& b) { return a.items_ <=> b.items_; }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<ItemId> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (ItemId id : s) {
      h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Bijection between item labels and dense ids, in first-insertion order.
class ItemDictionary {
 public:
  ItemId intern(std::string_view label) {
    auto it = name_to_id_.find(std::string(label));
    if (it != name_to_id_.end()) return it->second;
    auto id = static_cast<ItemId>(id_to_name_.size());
    id_to_name_.emplace_back(label);
    name_to_id_.emplace(id_to_name_.back(), id);
    return id;
  }

  [[nodiscard]] std::optional<ItemId> find(std::string_view label) const {
    auto it = name_to_id_.find(std::string(label));
    if (it == name_to_id_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] const std::string& name(ItemId id) const {
    if (id >= id_to_name_.size()) {
      throw Error(ErrorCode::UnknownItem, "item id " + std::to_string(id) + " out of range");
    }
    return id_to_name_[id];
  }

  [[nodiscard]] std::size_t size() const noexcept { return id_to_name_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return id_to_name_; }

  /// Labels of `s` in id order.
  [[nodiscard]] std::vector<std::string> labels(const Itemset& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (ItemId id : s) out.push_back(name(id));
    return out;
  }

  /// Resolves labels to an itemset; throws UnknownItem for any missing label.
  [[nodiscard]] Itemset lookup(std::span<const std::string> labels) const {
    std::vector<ItemId> ids;
    ids.reserve(labels.size());
    for (const auto& label : labels) {
      auto id = find(label);
      if (!id) throw Error(ErrorCode::UnknownItem, "no item labelled '" + label + "'");
      ids.push_back(*id);
    }
    return Itemset(std::move(ids));
  }

 private:
  std::unordered_map<std::string, ItemId> name_to_id_;
  std::vector<std::string> id_to_name_;
};

}  // namespace negrules
