#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <vector>

#include "negrules/config.hpp"
#include "negrules/error.hpp"
#include "negrules/itemset.hpp"
#include "negrules/mining.hpp"
#include "negrules/rational.hpp"
#include "negrules/rules.hpp"
#include "negrules/transactions.hpp"

// Brute-force reference for the miner. It borrows only data types (Itemset,
// TransactionDatabase, RuleRecord, ...) from the library: every count comes
// from a scan over the raw transactions and every rule condition is spelled
// out again here, so agreement with the optimized pipeline is meaningful.

namespace negrules::oracle {

inline constexpr std::size_t max_universe = 20;

struct OracleResult {
  SupportTable supports{0};
  std::vector<RuleRecord> rules;
  SearchSpaceReport stage_counts;
};

namespace detail {

inline void guard(const TransactionDatabase& db) {
  if (db.item_count() > max_universe) {
    throw Error(ErrorCode::UniverseTooLarge, std::to_string(db.item_count()) + " items exceed the oracle limit of " +
                                                 std::to_string(max_universe));
  }
}

inline std::size_t scan_count(const TransactionDatabase& db, const Itemset& s) {
  std::size_t hits = 0;
  for (const auto& tx : db.transactions()) {
    bool all = true;
    for (ItemId id : s) {
      if (std::find(tx.begin(), tx.end(), id) == tx.end()) {
        all = false;
        break;
      }
    }
    hits += all ? 1 : 0;
  }
  return hits;
}

inline Rational frac(std::size_t count, std::size_t n) {
  return {static_cast<Rational::int_type>(count), static_cast<Rational::int_type>(n)};
}

}  // namespace detail

/// Count of every itemset with 1..max_len items, no pruning.
inline SupportTable oracle_supports(const TransactionDatabase& db, std::size_t max_len) {
  detail::guard(db);
  SupportTable table(db.size());
  const auto universe = static_cast<ItemId>(db.item_count());
  const std::uint32_t limit = std::uint32_t{1} << universe;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_len) continue;
    std::vector<ItemId> ids;
    for (ItemId i = 0; i < universe; ++i) {
      if ((mask >> i) & 1U) ids.push_back(i);
    }
    Itemset s = Itemset::from_sorted(std::move(ids));
    table.set(s, detail::scan_count(db, s));
  }
  return table;
}

/// Tests every ordered pair of disjoint non-empty itemsets (combined size
/// <= max_len) against each enabled form by literal counting.
inline OracleResult oracle_rules(const TransactionDatabase& db, const MiningConfig& config) {
  detail::guard(db);
  const std::size_t n = db.size();
  OracleResult result;
  result.supports = oracle_supports(db, config.max_len);
  const Rational one(1);
  const Rational& minsprt = config.minsprt;

  auto frequent = [&](const Itemset& s) { return detail::frac(*result.supports.count(s), n) >= minsprt; };

  SearchSpaceReport& stages = result.stage_counts;
  for (const auto& [s, count] : result.supports.entries()) {
    if (detail::frac(count, n) >= minsprt) ++stages.frequent_itemsets;
  }

  for (const auto& [q, q_count] : result.supports.entries()) {
    if (q.size() < 2) continue;
    const std::uint64_t full = (std::uint64_t{1} << q.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<ItemId> left;
      std::vector<ItemId> right;
      for (std::size_t i = 0; i < q.size(); ++i) ((mask >> i) & 1U ? left : right).push_back(q[i]);
      const Itemset a = Itemset::from_sorted(std::move(left));
      const Itemset b = Itemset::from_sorted(std::move(right));
      const Rational sa = detail::frac(*result.supports.count(a), n);
      const Rational sb = detail::frac(*result.supports.count(b), n);
      const Rational sq = detail::frac(q_count, n);

      if (sq >= minsprt) ++stages.positive_partitions;

      if (config.forms.contains(RuleForm::Positive) && sq >= minsprt) {
        const Rational diff = sq - sa * sb;
        const Rational magnitude = diff < Rational(0) ? -diff : diff;
        const Rational conf = sq / sa;
        if (magnitude >= config.mininterest && conf >= config.minconf) {
          result.rules.push_back({RuleForm::Positive, a, b, sq, conf, diff, sq / (sa * sb)});
        }
      }

      if (!frequent(a) || !frequent(b)) continue;
      ++stages.candidate_pairs;
      bool hosts_negative = false;
      for (RuleForm form : negative_forms) {
        if (!config.forms.contains(form)) continue;
        const Rational literal = negated_support_direct(db, a, b, form);
        if (literal < minsprt) continue;
        hosts_negative = true;
        const Rational ante = negates_antecedent(form) ? one - sa : sa;
        const Rational cons = negates_consequent(form) ? one - sb : sb;
        const Rational diff = literal - ante * cons;
        const Rational tested = config.use_abs_interest_for_negative && diff < Rational(0) ? -diff : diff;
        if (tested < config.mininterest) continue;
        const Rational conf = literal / ante;
        if (conf < config.minconf) continue;
        RuleRecord r{form, a, b, literal, conf, diff, std::nullopt};
        if (!cons.is_zero()) r.interest_ratio = literal / (ante * cons);
        result.rules.push_back(std::move(r));
      }
      if (hosts_negative) ++stages.negative_itemset_pairs;
    }
  }

  std::sort(result.rules.begin(), result.rules.end(), [](const RuleRecord& x, const RuleRecord& y) {
    if (x.form != y.form) return x.form < y.form;
    if (x.antecedent != y.antecedent) return x.antecedent < y.antecedent;
    return x.consequent < y.consequent;
  });
  result.rules.erase(std::unique(result.rules.begin(), result.rules.end()), result.rules.end());

  stages.rules_emitted = result.rules.size();
  auto ratio = [](std::size_t num, std::size_t den) { return den == 0 ? Rational(1) : detail::frac(num, den); };
  stages.condition3_retention = ratio(stages.negative_itemset_pairs, stages.candidate_pairs);
  std::size_t negative_enabled = 0;
  for (RuleForm form : negative_forms) negative_enabled += config.forms.contains(form) ? 1 : 0;
  const std::size_t tested = (config.forms.contains(RuleForm::Positive) ? stages.positive_partitions : 0) +
                             stages.candidate_pairs * negative_enabled;
  stages.rule_yield = ratio(stages.rules_emitted, tested);
  return result;
}

}  // namespace negrules::oracle
