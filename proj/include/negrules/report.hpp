#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "negrules/config.hpp"
#include "negrules/error.hpp"
#include "negrules/itemset.hpp"
#include "negrules/mining.hpp"
#include "negrules/oracle.hpp"
#include "negrules/pipeline.hpp"
#include "negrules/rational.hpp"
#include "negrules/rules.hpp"
#include "negrules/transactions.hpp"

namespace negrules::report {

using json = nlohmann::ordered_json;

/// Everything that goes into a run report, independent of which engine
/// (pipeline or oracle) produced the rules.
struct RunReport {
  MiningConfig config;
  std::size_t transactions = 0;
  std::size_t items = 0;
  SearchSpaceReport stages;
  std::vector<RuleRecord> rules;
  std::vector<std::string> warnings;
  std::vector<StageTiming> timings;
};

inline json rational_json(const Rational& r) {
  return json{{"decimal", r.to_decimal()}, {"num", r.num()}, {"den", r.den()}};
}

inline std::string itemset_text(const ItemDictionary& dict, const Itemset& s) {
  std::string out = "{";
  bool first = true;
  for (ItemId id : s) {
    if (!first) out += ",";
    out += dict.name(id);
    first = false;
  }
  return out + "}";
}

/// Folds DegenerateAntecedent diagnostics into one warning per
/// (form, antecedent), in first-seen order.
inline std::vector<std::string> diagnostic_warnings(const ItemDictionary& dict,
                                                    const std::vector<Diagnostic>& diagnostics) {
  std::vector<std::string> keys;
  std::map<std::string, std::size_t> counts;
  for (const auto& d : diagnostics) {
    std::string key = std::string(to_string(d.code)) + ": " + std::string(form_name(d.form)) +
                      " skipped for antecedent " + itemset_text(dict, d.antecedent) + " (support 1)";
    if (counts[key]++ == 0) keys.push_back(key);
  }
  std::vector<std::string> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(k + ", " + std::to_string(counts[k]) + " candidate(s)");
  return out;
}

inline RunReport from_run(const TransactionDatabase& db, const MiningRun& run) {
  RunReport r{run.config, db.size(), db.item_count(), run.stages, run.rules, run.warnings, run.timings};
  for (auto& w : diagnostic_warnings(db.dictionary(), run.diagnostics)) r.warnings.push_back(std::move(w));
  return r;
}

inline RunReport from_oracle(const TransactionDatabase& db, const MiningConfig& config,
                             const oracle::OracleResult& result) {
  auto validated = validate_config(config);
  return {validated.config, db.size(), db.item_count(), result.stage_counts, result.rules,
          validated.warnings, {}};
}

inline json stages_json(const SearchSpaceReport& s) {
  return json{{"frequent_itemsets", s.frequent_itemsets},
              {"positive_partitions", s.positive_partitions},
              {"candidate_pairs", s.candidate_pairs},
              {"negative_itemset_pairs", s.negative_itemset_pairs},
              {"rules_emitted", s.rules_emitted},
              {"condition3_retention", rational_json(s.condition3_retention)},
              {"rule_yield", rational_json(s.rule_yield)}};
}

inline json rule_json(const ItemDictionary& dict, const RuleRecord& r) {
  return json{{"form", form_name(r.form)},
              {"antecedent", dict.labels(r.antecedent)},
              {"consequent", dict.labels(r.consequent)},
              {"support", rational_json(r.support)},
              {"confidence", rational_json(r.confidence)},
              {"leverage", rational_json(r.leverage)},
              {"interest_ratio", r.interest_ratio ? rational_json(*r.interest_ratio) : json(nullptr)}};
}

inline json to_json(const ItemDictionary& dict, const RunReport& r) {
  json rules = json::array();
  for (const auto& rule : r.rules) rules.push_back(rule_json(dict, rule));
  json j{{"config",
          {{"minsprt", rational_json(r.config.minsprt)},
           {"minconf", rational_json(r.config.minconf)},
           {"mininterest", rational_json(r.config.mininterest)},
           {"max_len", r.config.max_len},
           {"forms", r.config.forms.names()},
           {"abs_neg_interest", r.config.use_abs_interest_for_negative}}},
         {"stats", {{"transactions", r.transactions}, {"items", r.items}}},
         {"stage_counts", stages_json(r.stages)},
         {"rules", std::move(rules)},
         {"warnings", r.warnings}};
  if (!r.timings.empty()) {
    json t = json::object();
    for (const auto& s : r.timings) t[s.stage] = s.milliseconds;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

inline std::string render_json(const ItemDictionary& dict, const RunReport& r) {
  return to_json(dict, r).dump(2) + "\n";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string joined(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? " " : "") + labels[i];
  return out;
}

}  // namespace detail

/// One rule per row; decimal and exact columns for every ratio.
inline std::string render_csv(const ItemDictionary& dict, const RunReport& r) {
  std::string out =
      "form,antecedent,consequent,support,support_exact,confidence,confidence_exact,leverage,"
      "leverage_exact,interest_ratio,interest_ratio_exact\n";
  for (const auto& rule : r.rules) {
    auto pair = [](const Rational& v) { return v.to_decimal() + "," + v.to_fraction(); };
    out += std::string(form_name(rule.form)) + ",";
    out += detail::csv_field(detail::joined(dict.labels(rule.antecedent))) + ",";
    out += detail::csv_field(detail::joined(dict.labels(rule.consequent))) + ",";
    out += pair(rule.support) + "," + pair(rule.confidence) + "," + pair(rule.leverage) + ",";
    out += rule.interest_ratio ? pair(*rule.interest_ratio) : std::string(",");
    out += "\n";
  }
  return out;
}

struct ReportDiff {
  std::vector<std::string> added;    // rules only in the second report
  std::vector<std::string> removed;  // rules only in the first report
  std::vector<std::string> changed;  // same rule, different measures
  std::vector<std::string> stage_deltas;
  std::vector<std::string> config_deltas;

  [[nodiscard]] bool identical_rules() const noexcept {
    return added.empty() && removed.empty() && changed.empty();
  }
};

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::MalformedReport, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

inline std::string rule_key(const json& rule) {
  auto side = [](const json& labels) {
    if (!labels.is_array()) throw Error(ErrorCode::MalformedReport, "rule side is not an array");
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : ",") + l.get<std::string>();
    return "{" + out + "}";
  };
  return require(rule, "form").get<std::string>() + " " + side(require(rule, "antecedent")) + " -> " +
         side(require(rule, "consequent"));
}

}  // namespace detail

inline json parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedReport, e.what());
  }
  for (const char* key : {"config", "stats", "stage_counts", "rules"}) detail::require(j, key);
  if (!j.at("rules").is_array()) throw Error(ErrorCode::MalformedReport, "'rules' is not an array");
  return j;
}

/// Rule identity is (form, antecedent labels, consequent labels); a rule
/// present in both with different measures is "changed".
inline ReportDiff diff_reports(const json& first, const json& second) {
  ReportDiff d;
  try {
    std::map<std::string, json> a;
    std::map<std::string, json> b;
    for (const auto& r : detail::require(first, "rules")) a.emplace(detail::rule_key(r), r);
    for (const auto& r : detail::require(second, "rules")) b.emplace(detail::rule_key(r), r);
    for (const auto& [k, v] : a) {
      auto it = b.find(k);
      if (it == b.end()) {
        d.removed.push_back(k);
      } else if (it->second != v) {
        d.changed.push_back(k);
      }
    }
    for (const auto& [k, v] : b) {
      if (!a.contains(k)) d.added.push_back(k);
    }

    auto compare_objects = [](const json& x, const json& y, std::vector<std::string>& out) {
      std::set<std::string> keys;
      for (const auto& [k, v] : x.items()) keys.insert(k);
      for (const auto& [k, v] : y.items()) keys.insert(k);
      for (const auto& k : keys) {
        json vx = x.contains(k) ? x.at(k) : json(nullptr);
        json vy = y.contains(k) ? y.at(k) : json(nullptr);
        if (vx == vy) continue;
        auto show = [](const json& v) {
          if (v.is_object() && v.contains("decimal")) return v.at("decimal").get<std::string>();
          return v.dump();
        };
        out.push_back(k + ": " + show(vx) + " -> " + show(vy));
      }
    };
    compare_objects(detail::require(first, "stage_counts"), detail::require(second, "stage_counts"),
                    d.stage_deltas);
    compare_objects(detail::require(first, "config"), detail::require(second, "config"), d.config_deltas);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedReport, e.what());
  }
  return d;
}

inline std::string render_diff(const ReportDiff& d) {
  std::ostringstream os;
  auto section = [&](const char* title, const std::vector<std::string>& lines, const char* mark) {
    if (lines.empty()) return;
    os << title << " (" << lines.size() << ")\n";
    for (const auto& l : lines) os << "  " << mark << " " << l << "\n";
  };
  section("config", d.config_deltas, "~");
  section("stage_counts", d.stage_deltas, "~");
  section("removed rules", d.removed, "-");
  section("added rules", d.added, "+");
  section("changed rules", d.changed, "~");
  if (d.identical_rules() && d.stage_deltas.empty() && d.config_deltas.empty()) os << "identical\n";
  return os.str();
}

}  // namespace negrules::report
