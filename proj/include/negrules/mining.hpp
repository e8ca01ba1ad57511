#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "negrules/bitvector.hpp"
#include "negrules/config.hpp"
#include "negrules/error.hpp"
#include "negrules/itemset.hpp"
#include "negrules/parallel.hpp"
#include "negrules/rational.hpp"
#include "negrules/transactions.hpp"

namespace negrules {

struct FrequentEntry {
  Itemset items;
  std::size_t count = 0;

  friend bool operator==(const FrequentEntry&, const FrequentEntry&) = default;
};

/// Every itemset of size 1..max_len whose support reaches minsprt, grouped
/// by size and sorted lexicographically inside each group.
class FrequentSet {
 public:
  FrequentSet() = default;
  explicit FrequentSet(std::size_t transactions) : n_(transactions) {}

  [[nodiscard]] std::size_t transactions() const noexcept { return n_; }

  /// Entries of size k (k >= 1); empty when no such level was reached.
  [[nodiscard]] const std::vector<FrequentEntry>& level(std::size_t k) const {
    static const std::vector<FrequentEntry> none;
    return k >= 1 && k <= by_size_.size() ? by_size_[k - 1] : none;
  }
  [[nodiscard]] std::size_t max_size() const noexcept { return by_size_.size(); }

  [[nodiscard]] std::size_t total() const noexcept { return lookup_.size(); }
  [[nodiscard]] bool empty() const noexcept { return lookup_.empty(); }

  [[nodiscard]] std::optional<std::size_t> count(const Itemset& s) const {
    if (s.empty()) return n_;
    auto it = lookup_.find(s);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] bool contains(const Itemset& s) const { return lookup_.contains(s); }

  /// All entries, smaller sizes first.
  [[nodiscard]] std::vector<FrequentEntry> entries() const {
    std::vector<FrequentEntry> out;
    out.reserve(total());
    for (const auto& lvl : by_size_) out.insert(out.end(), lvl.begin(), lvl.end());
    return out;
  }

  void add_level(std::vector<FrequentEntry> level) {
    if (level.empty()) return;
    for (const auto& e : level) lookup_.emplace(e.items, e.count);
    by_size_.push_back(std::move(level));
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<FrequentEntry>> by_size_;
  std::unordered_map<Itemset, std::size_t, ItemsetHash> lookup_;
};

namespace detail {

inline bool reaches(std::size_t count, std::size_t n, const Rational& threshold) {
  return Rational(static_cast<Rational::int_type>(count), static_cast<Rational::int_type>(n)) >= threshold;
}

}  // namespace detail

/// Level-wise enumeration: (k-1)-sets sharing a (k-2)-prefix are joined,
/// candidates with an infrequent (k-1)-subset are dropped before counting,
/// and survivors are counted by AND-ing the parent's bit-vector with the
/// new item's column.
inline FrequentSet mine_frequent(const TransactionDatabase& db, const MiningConfig& config,
                                 unsigned threads = 1) {
  if (db.size() == 0) throw Error(ErrorCode::EmptyDatabase, "no transactions");
  const std::size_t n = db.size();
  FrequentSet result(n);
  if (config.max_len == 0) return result;

  // Tid bit-vectors of the current level, parallel to the level's entries.
  std::vector<FrequentEntry> level;
  std::vector<BitVector> level_bits;
  for (ItemId id = 0; id < db.item_count(); ++id) {
    if (detail::reaches(db.column_count(id), n, config.minsprt)) {
      level.push_back({Itemset{id}, db.column_count(id)});
      level_bits.push_back(db.column(id));
    }
  }

  for (std::size_t k = 2; !level.empty(); ++k) {
    std::vector<FrequentEntry> current = level;
    result.add_level(std::move(current));
    if (k > config.max_len) break;

    struct Candidate {
      std::size_t parent;
      ItemId extension;
    };
    std::vector<Candidate> candidates;
    std::vector<ItemId> scratch;
    for (std::size_t i = 0; i < level.size(); ++i) {
      auto left = level[i].items.items();
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        auto right = level[j].items.items();
        if (!std::equal(left.begin(), left.end() - 1, right.begin())) break;
        // Downward closure: dropping any prefix item must leave a frequent set.
        bool closed = true;
        for (std::size_t drop = 0; drop + 1 < left.size() && closed; ++drop) {
          scratch.clear();
          for (std::size_t p = 0; p < left.size(); ++p) {
            if (p != drop) scratch.push_back(left[p]);
          }
          scratch.push_back(right.back());
          closed = result.contains(Itemset::from_sorted(scratch));
        }
        if (closed) candidates.push_back({i, right.back()});
      }
    }

    const bool need_bits = k < config.max_len;
    std::vector<std::size_t> counts(candidates.size());
    std::vector<BitVector> bits(need_bits ? candidates.size() : 0);
    detail::parallel_chunks(candidates.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t c = begin; c < end; ++c) {
        const auto& cand = candidates[c];
        const BitVector& col = db.column(cand.extension);
        if (need_bits) {
          bits[c] = level_bits[cand.parent] & col;
          counts[c] = bits[c].count();
        } else {
          counts[c] = BitVector::and_count(level_bits[cand.parent], col);
        }
      }
    });

    std::vector<FrequentEntry> next;
    std::vector<BitVector> next_bits;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!detail::reaches(counts[c], n, config.minsprt)) continue;
      auto ids = std::vector<ItemId>(level[candidates[c].parent].items.begin(),
                                     level[candidates[c].parent].items.end());
      ids.push_back(candidates[c].extension);
      next.push_back({Itemset::from_sorted(std::move(ids)), counts[c]});
      if (need_bits) next_bits.push_back(std::move(bits[c]));
    }
    level = std::move(next);
    level_bits = std::move(next_bits);
  }
  return result;
}

/// An ordered pair of disjoint frequent itemsets: the parts of a potential
/// negative itemset Q = A∪B.
struct NegativeCandidate {
  Itemset a;
  Itemset b;
  std::size_t a_count = 0;
  std::size_t b_count = 0;
  std::size_t union_count = 0;

  friend bool operator==(const NegativeCandidate&, const NegativeCandidate&) = default;
};

/// Transactions matching the literal conjunction of `form` for a candidate.
inline std::size_t literal_count(const NegativeCandidate& c, RuleForm form, std::size_t n) noexcept {
  switch (form) {
    case RuleForm::Positive: return c.union_count;
    case RuleForm::ANotB: return c.a_count - c.union_count;
    case RuleForm::NotAB: return c.b_count - c.union_count;
    case RuleForm::NotANotB: return n - c.a_count - c.b_count + c.union_count;
  }
  return 0;
}

/// All ordered pairs (A, B) of disjoint frequent itemsets with
/// |A| + |B| <= max_len, sorted by (A, B). Unions that are themselves
/// frequent are kept. Union counts come from the frequent set when known,
/// otherwise from one bit-vector intersection per distinct union.
inline std::vector<NegativeCandidate> generate_negative_candidates(const FrequentSet& frequent,
                                                                   const TransactionDatabase& db,
                                                                   const MiningConfig& config,
                                                                   unsigned threads = 1) {
  std::vector<NegativeCandidate> out;
  if (frequent.empty()) return out;
  std::vector<FrequentEntry> entries = frequent.entries();
  std::sort(entries.begin(), entries.end(),
            [](const FrequentEntry& x, const FrequentEntry& y) { return x.items < y.items; });

  std::unordered_map<Itemset, std::size_t, ItemsetHash> union_slot;
  std::vector<Itemset> unknown_unions;
  std::vector<std::size_t> slot_of;  // per candidate: index into unknown_unions, or npos
  constexpr std::size_t npos = static_cast<std::size_t>(-1);

  for (const auto& a : entries) {
    for (const auto& b : entries) {
      if (a.items.size() + b.items.size() > config.max_len) continue;
      if (!a.items.disjoint(b.items)) continue;
      Itemset u = a.items.unite(b.items);
      NegativeCandidate cand{a.items, b.items, a.count, b.count, 0};
      if (auto known = frequent.count(u)) {
        cand.union_count = *known;
        slot_of.push_back(npos);
      } else {
        auto [it, inserted] = union_slot.try_emplace(u, unknown_unions.size());
        if (inserted) unknown_unions.push_back(std::move(u));
        slot_of.push_back(it->second);
      }
      out.push_back(std::move(cand));
    }
  }

  std::vector<std::size_t> union_counts(unknown_unions.size());
  detail::parallel_chunks(unknown_unions.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) union_counts[i] = support_count(db, unknown_unions[i]);
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (slot_of[i] != npos) out[i].union_count = union_counts[slot_of[i]];
  }
  return out;
}

/// Stage-by-stage size of one mining run.
struct SearchSpaceReport {
  std::size_t frequent_itemsets = 0;
  /// Ordered 2-partitions (X, Y) of frequent itemsets of size >= 2.
  std::size_t positive_partitions = 0;
  std::size_t candidate_pairs = 0;
  /// Candidate pairs for which an enabled negative form has literal support
  /// >= minsprt.
  std::size_t negative_itemset_pairs = 0;
  std::size_t rules_emitted = 0;
  /// negative_itemset_pairs / candidate_pairs.
  Rational condition3_retention{1};
  /// rules_emitted / (rule hypotheses tested across enabled forms).
  Rational rule_yield{1};

  friend bool operator==(const SearchSpaceReport&, const SearchSpaceReport&) = default;
};

namespace detail {

inline Rational ratio_or_one(std::size_t num, std::size_t den) {
  if (den == 0) return Rational(1);
  return {static_cast<Rational::int_type>(num), static_cast<Rational::int_type>(den)};
}

inline SearchSpaceReport finish_report(SearchSpaceReport r, const FormSet& forms) {
  r.condition3_retention = ratio_or_one(r.negative_itemset_pairs, r.candidate_pairs);
  const std::size_t tested = (forms.contains(RuleForm::Positive) ? r.positive_partitions : 0) +
                             r.candidate_pairs * forms.negative_count();
  r.rule_yield = ratio_or_one(r.rules_emitted, tested);
  return r;
}

}  // namespace detail

inline SearchSpaceReport search_space_report(const FrequentSet& frequent,
                                             const std::vector<NegativeCandidate>& candidates,
                                             std::size_t emitted_rules, const MiningConfig& config) {
  SearchSpaceReport r;
  r.frequent_itemsets = frequent.total();
  for (std::size_t k = 2; k <= frequent.max_size(); ++k) {
    r.positive_partitions += frequent.level(k).size() * ((std::size_t{1} << k) - 2);
  }
  r.candidate_pairs = candidates.size();
  const std::size_t n = frequent.transactions();
  for (const auto& c : candidates) {
    for (RuleForm f : negative_forms) {
      if (config.forms.contains(f) && detail::reaches(literal_count(c, f, n), n, config.minsprt)) {
        ++r.negative_itemset_pairs;
        break;
      }
    }
  }
  r.rules_emitted = emitted_rules;
  return detail::finish_report(r, config.forms);
}

}  // namespace negrules
