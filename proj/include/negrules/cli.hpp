#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negrules/config.hpp"
#include "negrules/error.hpp"
#include "negrules/oracle.hpp"
#include "negrules/pipeline.hpp"
#include "negrules/report.hpp"
#include "negrules/rules.hpp"
#include "negrules/synth.hpp"
#include "negrules/transactions.hpp"

namespace negrules::cli {

enum ExitCode : int {
  Ok = 0,
  Differs = 1,
  ConfigError = 2,
  IoError = 3,
};

struct ThresholdFlags {
  std::string minsprt = "0.1";
  std::string minconf = "0.5";
  std::string mininterest = "0.01";
  std::size_t max_len = 6;
  std::string forms = "all";
  bool abs_neg_interest = false;
  std::string delimiter = "ws";

  void attach(CLI::App& cmd) {
    cmd.add_option("--minsprt", minsprt, "minimum support (decimal or a/b)")->capture_default_str();
    cmd.add_option("--minconf", minconf, "minimum confidence")->capture_default_str();
    cmd.add_option("--mininterest", mininterest, "minimum interest (leverage)")->capture_default_str();
    cmd.add_option("--max-len", max_len, "cap on |antecedent| + |consequent|")->capture_default_str();
    cmd.add_option("--forms", forms, "pos, neg, all, or a comma list of pos,a_not_b,not_a_b,not_a_not_b")
        ->capture_default_str();
    cmd.add_flag("--abs-neg-interest", abs_neg_interest, "test |leverage| for negative forms too");
    cmd.add_option("--delimiter", delimiter, "basket delimiter")
        ->check(CLI::IsMember({"ws", "comma"}))
        ->capture_default_str();
  }

  [[nodiscard]] MiningConfig config() const {
    MiningConfig c;
    c.minsprt = Rational::parse(minsprt);
    c.minconf = Rational::parse(minconf);
    c.mininterest = Rational::parse(mininterest);
    c.max_len = max_len;
    c.forms = FormSet::parse(forms);
    c.use_abs_interest_for_negative = abs_neg_interest;
    return c;
  }

  [[nodiscard]] Delimiter delim() const { return delimiter == "comma" ? Delimiter::Comma : Delimiter::Whitespace; }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  f << text;
}

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Io:
    case ErrorCode::EmptyDatabase: return IoError;
    default: return ConfigError;
  }
}

}  // namespace detail

/// Full command line, argv[0] excluded. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive and negative association rule miner", "negrules"};
  app.require_subcommand(1);

  ThresholdFlags mine_flags;
  std::string mine_input;
  std::string mine_format = "json";
  std::string mine_output;
  unsigned mine_threads = 1;
  bool mine_oracle = false;
  bool mine_timings = false;
  auto* mine = app.add_subcommand("mine", "mine positive and negative rules of interest");
  mine->add_option("input", mine_input, "basket file")->required();
  mine_flags.attach(*mine);
  mine->add_option("--format", mine_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  mine->add_option("--threads", mine_threads, "counting workers")->check(CLI::Range(1U, 256U));
  mine->add_option("-o,--output", mine_output, "write the report here instead of stdout");
  mine->add_flag("--oracle", mine_oracle, "use the brute-force reference instead of the miner");
  mine->add_flag("--timings", mine_timings, "include per-stage wall time in the JSON report");

  ThresholdFlags classify_flags;
  std::string classify_input;
  std::vector<std::string> classify_items;
  auto* classify = app.add_subcommand("classify", "classify one itemset as positive, negative, or uninteresting");
  classify->add_option("input", classify_input, "basket file")->required();
  classify->add_option("items", classify_items, "item labels of the itemset")->required();
  classify_flags.attach(*classify);

  GeneratorParams gen_params;
  std::string gen_density = "0.3";
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "write a seeded synthetic basket file");
  gen->add_option("--seed", gen_params.seed)->capture_default_str();
  gen->add_option("--items", gen_params.items)->capture_default_str();
  gen->add_option("--transactions", gen_params.transactions)->capture_default_str();
  gen->add_option("--density", gen_density, "per-item inclusion probability in (0,1)")->capture_default_str();
  gen->add_option("-o,--output", gen_output);

  std::string report_first;
  std::string report_second;
  auto* rep = app.add_subcommand("report", "diff two JSON run reports; exit 0 iff their rule sets match");
  rep->add_option("first", report_first)->required();
  rep->add_option("second", report_second)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return ConfigError;
  }

  try {
    if (mine->parsed()) {
      const MiningConfig config = mine_flags.config();
      validate_config(config);  // threshold errors before touching the input
      const auto db = load_basket_file(mine_input, mine_flags.delim());
      report::RunReport r;
      if (mine_oracle) {
        r = report::from_oracle(db, config, oracle::oracle_rules(db, config));
      } else {
        r = report::from_run(db, run_pipeline(db, config, mine_threads));
        if (!mine_timings) r.timings.clear();
      }
      for (const auto& w : r.warnings) err << "warning: " << w << "\n";
      const std::string text = mine_format == "csv" ? report::render_csv(db.dictionary(), r)
                                                    : report::render_json(db.dictionary(), r);
      detail::emit(text, mine_output, out);
      return Ok;
    }

    if (classify->parsed()) {
      const auto validated = validate_config(classify_flags.config());
      const auto db = load_basket_file(classify_input, classify_flags.delim());
      const Itemset q = db.dictionary().lookup(classify_items);
      const Classification c = classify_itemset(db, q, validated.config);
      report::json witnesses = report::json::array();
      for (const auto& w : c.witnesses) witnesses.push_back(report::rule_json(db.dictionary(), w));
      report::json j{{"itemset", db.dictionary().labels(q)},
                     {"verdict", verdict_name(c.verdict)},
                     {"witnesses", std::move(witnesses)},
                     {"warnings", validated.warnings}};
      out << j.dump(2) << "\n";
      return Ok;
    }

    if (gen->parsed()) {
      try {
        gen_params.density = Rational::parse(gen_density);
      } catch (const Error&) {
        throw Error(ErrorCode::InvalidParameter, "density is not a number: '" + gen_density + "'");
      }
      detail::emit(generate_basket(gen_params), gen_output, out);
      return Ok;
    }

    if (rep->parsed()) {
      const auto first = report::parse_report(detail::read_file(report_first));
      const auto second = report::parse_report(detail::read_file(report_second));
      const auto d = report::diff_reports(first, second);
      out << report::render_diff(d);
      return d.identical_rules() ? Ok : Differs;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e);
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return ConfigError;
  }
  return ConfigError;
}

}  // namespace negrules::cli
