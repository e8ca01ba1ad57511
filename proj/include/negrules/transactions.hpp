#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "negrules/bitvector.hpp"
#include "negrules/error.hpp"
#include "negrules/itemset.hpp"
#include "negrules/rational.hpp"

namespace negrules {

/// The four rule shapes. For the negative ones the base itemsets A and B are
/// stored un-negated; ¬S reads "not every item of S is present".
enum class RuleForm { Positive, ANotB, NotAB, NotANotB };

inline constexpr RuleForm all_forms[] = {RuleForm::Positive, RuleForm::ANotB, RuleForm::NotAB,
                                          RuleForm::NotANotB};
inline constexpr RuleForm negative_forms[] = {RuleForm::ANotB, RuleForm::NotAB, RuleForm::NotANotB};

constexpr bool negates_antecedent(RuleForm f) noexcept {
  return f == RuleForm::NotAB || f == RuleForm::NotANotB;
}
constexpr bool negates_consequent(RuleForm f) noexcept {
  return f == RuleForm::ANotB || f == RuleForm::NotANotB;
}

enum class Delimiter { Whitespace, Comma };

/// Immutable transaction database with one occurrence bit-vector per item.
class TransactionDatabase {
 public:
  /// Builds a database from already-interned transactions. Empty transactions
  /// are allowed here (they still count towards n); the basket loader never
  /// produces them.
  static TransactionDatabase from_transactions(ItemDictionary dictionary,
                                               std::vector<Itemset> transactions) {
    if (transactions.empty()) throw Error(ErrorCode::EmptyDatabase, "no transactions");
    TransactionDatabase db;
    db.dictionary_ = std::move(dictionary);
    db.transactions_ = std::move(transactions);
    const std::size_t n = db.transactions_.size();
    db.columns_.assign(db.dictionary_.size(), BitVector(n));
    for (std::size_t t = 0; t < n; ++t) {
      for (ItemId id : db.transactions_[t]) {
        if (id >= db.columns_.size()) {
          throw Error(ErrorCode::UnknownItem,
                      "transaction " + std::to_string(t) + " references item id " + std::to_string(id));
        }
        db.columns_[id].set(t);
      }
    }
    db.column_counts_.reserve(db.columns_.size());
    for (const auto& c : db.columns_) db.column_counts_.push_back(c.count());
    return db;
  }

  /// Convenience for fixtures: each transaction given as labels.
  static TransactionDatabase from_labels(const std::vector<std::vector<std::string>>& rows) {
    ItemDictionary dict;
    std::vector<Itemset> txs;
    txs.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<ItemId> ids;
      for (const auto& label : row) ids.push_back(dict.intern(label));
      txs.emplace_back(std::move(ids));
    }
    return from_transactions(std::move(dict), std::move(txs));
  }

  [[nodiscard]] std::size_t size() const noexcept { return transactions_.size(); }
  [[nodiscard]] std::size_t item_count() const noexcept { return dictionary_.size(); }
  [[nodiscard]] const ItemDictionary& dictionary() const noexcept { return dictionary_; }
  [[nodiscard]] const std::vector<Itemset>& transactions() const noexcept { return transactions_; }

  [[nodiscard]] const BitVector& column(ItemId id) const {
    check(id);
    return columns_[id];
  }
  [[nodiscard]] std::size_t column_count(ItemId id) const {
    check(id);
    return column_counts_[id];
  }

  void check(const Itemset& x) const {
    for (ItemId id : x) check(id);
  }

  [[nodiscard]] Rational ratio(std::size_t count) const {
    return {static_cast<Rational::int_type>(count), static_cast<Rational::int_type>(size())};
  }

 private:
  TransactionDatabase() = default;

  void check(ItemId id) const {
    if (id >= columns_.size()) {
      throw Error(ErrorCode::UnknownItem, "item id " + std::to_string(id) + " out of range");
    }
  }

  ItemDictionary dictionary_;
  std::vector<Itemset> transactions_;
  std::vector<BitVector> columns_;
  std::vector<std::size_t> column_counts_;
};

namespace detail {

inline void split_tokens(std::string_view line, Delimiter delim, std::vector<std::string_view>& out) {
  out.clear();
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; };
  auto is_sep = [&](char c) { return delim == Delimiter::Comma ? c == ',' : is_space(c); };
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    std::string_view tok = line.substr(start, i - start);
    while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
    while (!tok.empty() && is_space(tok.back())) tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(tok);
  }
}

}  // namespace detail

/// Reads basket text: one transaction per line; '#' comment lines and blank
/// lines are skipped; repeated items within a line collapse.
inline TransactionDatabase load_basket(std::istream& source, Delimiter delim = Delimiter::Whitespace) {
  ItemDictionary dict;
  std::vector<Itemset> txs;
  std::string line;
  std::vector<std::string_view> tokens;
  while (std::getline(source, line)) {
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    std::size_t first = view.find_first_not_of(" \t\v\f");
    if (first == std::string_view::npos || view[first] == '#') continue;
    detail::split_tokens(view, delim, tokens);
    if (tokens.empty()) continue;
    std::vector<ItemId> ids;
    ids.reserve(tokens.size());
    for (auto tok : tokens) ids.push_back(dict.intern(tok));
    txs.emplace_back(std::move(ids));
  }
  if (txs.empty()) throw Error(ErrorCode::EmptyDatabase, "input contains no transactions");
  return TransactionDatabase::from_transactions(std::move(dict), std::move(txs));
}

inline TransactionDatabase load_basket_text(std::string_view text, Delimiter delim = Delimiter::Whitespace) {
  std::istringstream in{std::string(text)};
  return load_basket(in, delim);
}

inline TransactionDatabase load_basket_file(const std::string& path, Delimiter delim = Delimiter::Whitespace) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return load_basket(in, delim);
}

/// Serializes back to basket text, items in id order. Databases holding an
/// empty transaction have no basket representation.
inline std::string to_basket(const TransactionDatabase& db, Delimiter delim = Delimiter::Whitespace) {
  const char sep = delim == Delimiter::Comma ? ',' : ' ';
  std::string out;
  for (const auto& tx : db.transactions()) {
    if (tx.empty()) throw Error(ErrorCode::InvalidParameter, "empty transaction cannot be serialized");
    bool first = true;
    for (ItemId id : tx) {
      if (!first) out.push_back(sep);
      out += db.dictionary().name(id);
      first = false;
    }
    out.push_back('\n');
  }
  return out;
}

/// Exact occurrence counts keyed by itemset; the empty itemset always maps
/// to n.
class SupportTable {
 public:
  explicit SupportTable(std::size_t n) : n_(n) {}

  [[nodiscard]] std::size_t transactions() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] const std::map<Itemset, std::size_t>& entries() const noexcept { return entries_; }

  void set(Itemset s, std::size_t count) { entries_[std::move(s)] = count; }

  [[nodiscard]] std::optional<std::size_t> count(const Itemset& s) const {
    if (s.empty()) return n_;
    auto it = entries_.find(s);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::size_t n_;
  std::map<Itemset, std::size_t> entries_;
};

/// Number of transactions containing every item of `x`.
inline std::size_t support_count(const TransactionDatabase& db, const Itemset& x) {
  db.check(x);
  if (x.empty()) return db.size();
  if (x.size() == 1) return db.column_count(x[0]);
  if (x.size() == 2) return BitVector::and_count(db.column(x[0]), db.column(x[1]));
  BitVector acc = db.column(x[0]) & db.column(x[1]);
  for (std::size_t i = 2; i + 1 < x.size(); ++i) acc &= db.column(x[i]);
  return BitVector::and_count(acc, db.column(x[x.size() - 1]));
}

inline Rational support(const TransactionDatabase& db, const Itemset& x) {
  return db.ratio(support_count(db, x));
}

namespace detail {

inline void check_pair(const TransactionDatabase& db, const Itemset& a, const Itemset& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyItemset, "both sides must be non-empty");
  if (!a.disjoint(b)) throw Error(ErrorCode::OverlappingItemsets, "antecedent and consequent overlap");
  db.check(a);
  db.check(b);
}

}  // namespace detail

/// Count of transactions matching the form's literal conjunction, derived
/// from three plain counts by inclusion-exclusion. RuleForm::Positive gives
/// the plain union count.
inline std::size_t negated_support_count(const TransactionDatabase& db, const Itemset& a,
                                         const Itemset& b, RuleForm form) {
  detail::check_pair(db, a, b);
  const std::size_t both = support_count(db, a.unite(b));
  switch (form) {
    case RuleForm::Positive: return both;
    case RuleForm::ANotB: return support_count(db, a) - both;
    case RuleForm::NotAB: return support_count(db, b) - both;
    case RuleForm::NotANotB: return db.size() - support_count(db, a) - support_count(db, b) + both;
  }
  return 0;
}

inline Rational negated_support(const TransactionDatabase& db, const Itemset& a, const Itemset& b,
                                RuleForm form) {
  return db.ratio(negated_support_count(db, a, b, form));
}

/// Same quantity by testing every transaction literally; shares nothing with
/// the bit-vector path.
inline Rational negated_support_direct(const TransactionDatabase& db, const Itemset& a,
                                       const Itemset& b, RuleForm form) {
  detail::check_pair(db, a, b);
  std::size_t hits = 0;
  for (const auto& tx : db.transactions()) {
    const bool has_a = std::includes(tx.begin(), tx.end(), a.begin(), a.end());
    const bool has_b = std::includes(tx.begin(), tx.end(), b.begin(), b.end());
    const bool want_a = !negates_antecedent(form);
    const bool want_b = !negates_consequent(form);
    if (has_a == want_a && has_b == want_b) ++hits;
  }
  return db.ratio(hits);
}

}  // namespace negrules
