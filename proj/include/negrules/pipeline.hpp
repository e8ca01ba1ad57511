#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "negrules/config.hpp"
#include "negrules/mining.hpp"
#include "negrules/rules.hpp"
#include "negrules/transactions.hpp"

namespace negrules {

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

/// Everything one end-to-end run produces.
struct MiningRun {
  MiningConfig config;
  FrequentSet frequent;
  std::vector<NegativeCandidate> candidates;
  std::vector<RuleRecord> rules;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> warnings;
  SearchSpaceReport stages;
  std::vector<StageTiming> timings;
};

/// validate -> mine_frequent -> generate_negative_candidates -> extract both
/// rule kinds -> search_space_report. Rules come back canonically sorted.
inline MiningRun run_pipeline(const TransactionDatabase& db, const MiningConfig& config, unsigned threads = 1) {
  using clock = std::chrono::steady_clock;
  MiningRun run;
  auto validated = validate_config(config);
  run.config = validated.config;
  run.warnings = std::move(validated.warnings);

  auto t0 = clock::now();
  auto lap = [&](const char* stage) {
    auto t1 = clock::now();
    run.timings.push_back({stage, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    t0 = t1;
  };

  run.frequent = mine_frequent(db, run.config, threads);
  lap("mine_frequent");
  run.candidates = generate_negative_candidates(run.frequent, db, run.config, threads);
  lap("generate_negative_candidates");
  run.rules = extract_positive_rules(db, run.frequent, run.config, threads);
  lap("extract_positive_rules");
  auto negative = extract_negative_rules(db, run.candidates, run.config, threads);
  lap("extract_negative_rules");

  run.rules.insert(run.rules.end(), std::make_move_iterator(negative.rules.begin()),
                   std::make_move_iterator(negative.rules.end()));
  canonical_sort(run.rules);
  run.diagnostics = std::move(negative.diagnostics);
  run.stages = search_space_report(run.frequent, run.candidates, run.rules.size(), run.config);
  lap("search_space_report");
  return run;
}

}  // namespace negrules
