#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "negrules/config.hpp"
#include "negrules/error.hpp"
#include "negrules/itemset.hpp"
#include "negrules/mining.hpp"
#include "negrules/parallel.hpp"
#include "negrules/rational.hpp"
#include "negrules/transactions.hpp"

namespace negrules {

/// A mined rule. Antecedent and consequent hold the un-negated base itemsets;
/// `support` is the support of the rule's literal conjunction, e.g.
/// sprt(A∪¬B) for RuleForm::ANotB.
struct RuleRecord {
  RuleForm form = RuleForm::Positive;
  Itemset antecedent;
  Itemset consequent;
  Rational support;
  Rational confidence;
  Rational leverage;
  std::optional<Rational> interest_ratio;

  friend bool operator==(const RuleRecord&, const RuleRecord&) = default;
};

/// Canonical order: form, then antecedent items, then consequent items.
inline bool canonical_less(const RuleRecord& x, const RuleRecord& y) {
  return std::tie(x.form, x.antecedent, x.consequent) < std::tie(y.form, y.antecedent, y.consequent);
}

inline void canonical_sort(std::vector<RuleRecord>& rules) {
  std::sort(rules.begin(), rules.end(), canonical_less);
}

inline Rational confidence(const Rational& sprt_union, const Rational& sprt_antecedent) {
  if (sprt_antecedent.is_zero()) {
    throw Error(ErrorCode::DivisionUndefined, "confidence with zero antecedent support");
  }
  return sprt_union / sprt_antecedent;
}

/// sprt(X∪Y) - sprt(X)·sprt(Y), signed.
inline Rational leverage(const Rational& sprt_union, const Rational& sprt_x, const Rational& sprt_y) {
  return sprt_union - sprt_x * sprt_y;
}

/// sprt(X∪Y) / (sprt(X)·sprt(Y)); 1 under independence.
inline Rational interest_ratio(const Rational& sprt_union, const Rational& sprt_x, const Rational& sprt_y) {
  if (sprt_x.is_zero() || sprt_y.is_zero()) {
    throw Error(ErrorCode::DivisionUndefined, "interest ratio with a zero marginal");
  }
  return sprt_union / (sprt_x * sprt_y);
}

/// Largest meaningful minimum interest for a given minimum support:
/// minsprt - minsprt².
inline Rational mininterest_upper_bound(const Rational& minsprt) { return minsprt - minsprt * minsprt; }

struct ValidatedConfig {
  MiningConfig config;
  std::vector<std::string> warnings;
};

inline ValidatedConfig validate_config(const MiningConfig& config) {
  const Rational zero(0);
  const Rational one(1);
  auto reject = [](const std::string& what) { throw Error(ErrorCode::InvalidThreshold, what); };
  if (config.minsprt <= zero || config.minsprt > one) {
    reject("minsprt must be in (0,1], got " + config.minsprt.to_decimal());
  }
  if (config.minconf <= zero || config.minconf > one) {
    reject("minconf must be in (0,1], got " + config.minconf.to_decimal());
  }
  if (config.mininterest <= zero) reject("mininterest must be > 0, got " + config.mininterest.to_decimal());
  if (config.max_len < 2) reject("max_len must be >= 2, got " + std::to_string(config.max_len));

  ValidatedConfig out{config, {}};
  const Rational bound = mininterest_upper_bound(config.minsprt);
  if (config.mininterest > bound) {
    out.warnings.push_back("mininterest " + config.mininterest.to_decimal() + " exceeds bound " +
                           bound.to_decimal() + " (minsprt - minsprt^2)");
  }
  return out;
}

/// Supports of the two base itemsets and their union, as ratios.
struct PairSupports {
  Rational a;
  Rational b;
  Rational both;
};

enum class FormOutcome { Emitted, Rejected, DegenerateAntecedent };

/// Tests one rule form against its conditions. Positive: sprt(X∪Y) >= minsprt,
/// |leverage| >= mininterest, confidence >= minconf. Negative forms: both
/// base supports and the literal support >= minsprt, leverage against the
/// form's own marginals >= mininterest (|·| only if the config asks for it),
/// confidence >= minconf. A ¬A form with sprt(A) = 1 has no defined
/// confidence and is reported as degenerate.
inline FormOutcome evaluate_form(RuleForm form, const Itemset& a, const Itemset& b,
                                 const PairSupports& s, const MiningConfig& config,
                                 std::optional<RuleRecord>& out) {
  out.reset();
  const Rational one(1);
  if (form == RuleForm::Positive) {
    if (s.both < config.minsprt) return FormOutcome::Rejected;
    const Rational lev = leverage(s.both, s.a, s.b);
    if (lev.abs() < config.mininterest) return FormOutcome::Rejected;
    const Rational conf = confidence(s.both, s.a);
    if (conf < config.minconf) return FormOutcome::Rejected;
    out = RuleRecord{form, a, b, s.both, conf, lev, interest_ratio(s.both, s.a, s.b)};
    return FormOutcome::Emitted;
  }

  if (negates_antecedent(form) && s.a == one) return FormOutcome::DegenerateAntecedent;
  if (s.a < config.minsprt || s.b < config.minsprt) return FormOutcome::Rejected;

  Rational literal;
  switch (form) {
    case RuleForm::ANotB: literal = s.a - s.both; break;
    case RuleForm::NotAB: literal = s.b - s.both; break;
    default: literal = one - s.a - s.b + s.both; break;
  }
  if (literal < config.minsprt) return FormOutcome::Rejected;

  const Rational ante = negates_antecedent(form) ? one - s.a : s.a;
  const Rational cons = negates_consequent(form) ? one - s.b : s.b;
  const Rational lev = leverage(literal, ante, cons);
  const Rational tested = config.use_abs_interest_for_negative ? lev.abs() : lev;
  if (tested < config.mininterest) return FormOutcome::Rejected;
  const Rational conf = confidence(literal, ante);
  if (conf < config.minconf) return FormOutcome::Rejected;

  std::optional<Rational> ratio;
  if (!cons.is_zero()) ratio = interest_ratio(literal, ante, cons);
  out = RuleRecord{form, a, b, literal, conf, lev, ratio};
  return FormOutcome::Emitted;
}

/// All ordered (X, Y) with X, Y non-empty, disjoint, X∪Y = q. Order follows
/// the bitmask of q's positions that go to X, ascending.
inline std::vector<std::pair<Itemset, Itemset>> enumerate_partitions(const Itemset& q) {
  if (q.size() < 2) throw Error(ErrorCode::TooSmall, "partition needs at least two items");
  if (q.size() >= 63) throw Error(ErrorCode::InvalidParameter, "itemset too large to partition");
  const std::size_t k = q.size();
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::vector<std::pair<Itemset, Itemset>> out;
  out.reserve(static_cast<std::size_t>(full - 1));
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<ItemId> x;
    std::vector<ItemId> y;
    for (std::size_t i = 0; i < k; ++i) {
      ((mask >> i) & 1U ? x : y).push_back(q[i]);
    }
    out.emplace_back(Itemset::from_sorted(std::move(x)), Itemset::from_sorted(std::move(y)));
  }
  return out;
}

inline std::vector<RuleRecord> extract_positive_rules(const TransactionDatabase& db,
                                                      const FrequentSet& frequent,
                                                      const MiningConfig& config, unsigned threads = 1) {
  std::vector<RuleRecord> rules;
  if (!config.forms.contains(RuleForm::Positive)) return rules;
  std::vector<const FrequentEntry*> targets;
  for (std::size_t k = 2; k <= frequent.max_size(); ++k) {
    for (const auto& e : frequent.level(k)) targets.push_back(&e);
  }

  std::vector<std::vector<RuleRecord>> parts(detail::chunk_count(targets.size(), threads));
  detail::parallel_chunks(targets.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::optional<RuleRecord> rule;
    for (std::size_t t = begin; t < end; ++t) {
      const FrequentEntry& q = *targets[t];
      for (const auto& [x, y] : enumerate_partitions(q.items)) {
        PairSupports s{db.ratio(*frequent.count(x)), db.ratio(*frequent.count(y)), db.ratio(q.count)};
        if (evaluate_form(RuleForm::Positive, x, y, s, config, rule) == FormOutcome::Emitted) {
          parts[chunk].push_back(std::move(*rule));
        }
      }
    }
  });
  for (auto& p : parts) rules.insert(rules.end(), std::make_move_iterator(p.begin()),
                                     std::make_move_iterator(p.end()));
  canonical_sort(rules);
  return rules;
}

struct Diagnostic {
  ErrorCode code = ErrorCode::DegenerateAntecedent;
  RuleForm form = RuleForm::NotAB;
  Itemset antecedent;
  Itemset consequent;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct NegativeExtraction {
  std::vector<RuleRecord> rules;
  /// DegenerateAntecedent entries for skipped ¬A forms, in candidate order.
  std::vector<Diagnostic> diagnostics;
};

inline NegativeExtraction extract_negative_rules(const TransactionDatabase& db,
                                                 const std::vector<NegativeCandidate>& candidates,
                                                 const MiningConfig& config, unsigned threads = 1) {
  NegativeExtraction result;
  if (!config.forms.any_negative() || candidates.empty()) return result;
  struct Part {
    std::vector<RuleRecord> rules;
    std::vector<Diagnostic> diagnostics;
  };
  std::vector<Part> parts(detail::chunk_count(candidates.size(), threads));
  detail::parallel_chunks(candidates.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Part& part = parts[chunk];
    std::optional<RuleRecord> rule;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& c = candidates[i];
      PairSupports s{db.ratio(c.a_count), db.ratio(c.b_count), db.ratio(c.union_count)};
      for (RuleForm f : negative_forms) {
        if (!config.forms.contains(f)) continue;
        switch (evaluate_form(f, c.a, c.b, s, config, rule)) {
          case FormOutcome::Emitted: part.rules.push_back(std::move(*rule)); break;
          case FormOutcome::DegenerateAntecedent:
            part.diagnostics.push_back({ErrorCode::DegenerateAntecedent, f, c.a, c.b});
            break;
          case FormOutcome::Rejected: break;
        }
      }
    }
  });
  for (auto& p : parts) {
    result.rules.insert(result.rules.end(), std::make_move_iterator(p.rules.begin()),
                        std::make_move_iterator(p.rules.end()));
    result.diagnostics.insert(result.diagnostics.end(), p.diagnostics.begin(), p.diagnostics.end());
  }
  canonical_sort(result.rules);
  return result;
}

enum class Verdict { PositiveOfInterest, NegativeOfInterest, Uninteresting };

constexpr std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::PositiveOfInterest: return "positive-of-interest";
    case Verdict::NegativeOfInterest: return "negative-of-interest";
    case Verdict::Uninteresting: return "uninteresting";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Uninteresting;
  /// Every passing rule over q's partitions, positive and negative alike,
  /// canonically sorted.
  std::vector<RuleRecord> witnesses;
};

/// Positive wins when q admits witnesses of both kinds.
inline Classification classify_itemset(const TransactionDatabase& db, const Itemset& q,
                                       const MiningConfig& config) {
  if (q.empty()) throw Error(ErrorCode::EmptyItemset, "cannot classify the empty itemset");
  db.check(q);
  Classification result;
  if (q.size() < 2) return result;

  const Rational union_support = support(db, q);
  bool positive = false;
  bool negative = false;
  std::optional<RuleRecord> rule;
  for (const auto& [x, y] : enumerate_partitions(q)) {
    PairSupports s{support(db, x), support(db, y), union_support};
    for (RuleForm f : all_forms) {
      if (!config.forms.contains(f)) continue;
      if (evaluate_form(f, x, y, s, config, rule) == FormOutcome::Emitted) {
        (f == RuleForm::Positive ? positive : negative) = true;
        result.witnesses.push_back(std::move(*rule));
      }
    }
  }
  canonical_sort(result.witnesses);
  if (positive) {
    result.verdict = Verdict::PositiveOfInterest;
  } else if (negative) {
    result.verdict = Verdict::NegativeOfInterest;
  }
  return result;
}

}  // namespace negrules
