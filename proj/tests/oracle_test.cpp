#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "negrules/oracle.hpp"
#include "negrules/pipeline.hpp"

namespace negrules {
namespace {

using testing::make_config;
using testing::salt;
using testing::soy;

TEST(OracleSupports, CooccurCounts) {
  auto table = oracle::oracle_supports(testing::cooccur_db(), 2);
  EXPECT_EQ(table.size(), 3U);
  EXPECT_EQ(table.count(Itemset{soy}), 25U);
  EXPECT_EQ(table.count(Itemset{salt}), 90U);
  EXPECT_EQ(table.count(Itemset{soy, salt}), 20U);
  EXPECT_EQ(table.count(Itemset{}), 100U);
}

TEST(OracleSupports, RespectsMaxLen) {
  auto db = load_basket_text("a b c\na b\nc\n");
  EXPECT_EQ(oracle::oracle_supports(db, 1).size(), 3U);
  EXPECT_EQ(oracle::oracle_supports(db, 3).size(), 7U);
  EXPECT_EQ(oracle::oracle_supports(db, 3).count(Itemset{0, 1, 2}), 1U);
}

TEST(OracleSupports, RefusesLargeUniverse) {
  std::string row;
  for (int i = 0; i < 21; ++i) row += "x" + std::to_string(i) + " ";
  auto db = load_basket_text(row + "\n");
  try {
    (void)oracle::oracle_supports(db, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseTooLarge);
  }
  EXPECT_THROW((void)oracle::oracle_rules(db, make_config("0.5", "0.5", "0.01")), Error);
}

TEST(OracleRules, CooccurAndExclusive) {
  auto pos = oracle::oracle_rules(testing::cooccur_db(), make_config("0.2", "0.52", "0.02"));
  // soy->salt, plus ¬soy->salt and salt->¬soy (both leverage 0.025).
  ASSERT_EQ(pos.rules.size(), 3U);
  EXPECT_EQ(pos.rules[0].form, RuleForm::Positive);
  EXPECT_EQ(pos.rules[0].leverage, Rational::parse("-0.025"));
  EXPECT_EQ(pos.rules[1].form, RuleForm::ANotB);
  EXPECT_EQ(pos.rules[1].antecedent, Itemset{salt});
  EXPECT_EQ(pos.rules[1].leverage, Rational::parse("0.025"));
  EXPECT_EQ(pos.rules[2].form, RuleForm::NotAB);
  EXPECT_EQ(pos.rules[2].antecedent, Itemset{soy});
  EXPECT_EQ(pos.rules[2].confidence, Rational(14, 15));

  auto neg = oracle::oracle_rules(testing::exclusive_db(), make_config("0.3", "0.52", "0.05"));
  ASSERT_EQ(neg.rules.size(), 4U);
  EXPECT_EQ(neg.rules[0].form, RuleForm::ANotB);
  EXPECT_EQ(neg.rules[0].antecedent, Itemset{soy});
  EXPECT_EQ(neg.rules[0].support, Rational::parse("0.35"));
  EXPECT_EQ(neg.rules[0].confidence, Rational::parse("0.875"));
  EXPECT_EQ(neg.rules[0].leverage, Rational::parse("0.19"));
}

TEST(OracleRules, NoFormsNoRules) {
  auto r = oracle::oracle_rules(testing::exclusive_db(), make_config("0.3", "0.52", "0.05", 6, FormSet{}));
  EXPECT_TRUE(r.rules.empty());
  EXPECT_EQ(r.stage_counts.candidate_pairs, 2U);
  EXPECT_EQ(r.stage_counts.rule_yield, Rational(1));
}

TEST(OracleRules, DegenerateAntecedentProducesNoRule) {
  auto db = load_basket_file(NEGRULES_DATA_DIR "/degenerate.basket");
  const Itemset a{*db.dictionary().find("a")};
  for (const auto& r : oracle::oracle_rules(db, make_config("0.3", "0.1", "0.01")).rules) {
    EXPECT_FALSE(negates_antecedent(r.form) && r.antecedent == a);
  }
}

TEST(OracleRules, PipelineAgreesOnRandomDatabases) {
  std::mt19937_64 rng(1234);
  const std::vector<Rational> supports{Rational(1, 10), Rational(3, 20), Rational(1, 5), Rational(3, 10)};
  const std::vector<Rational> confs{Rational(1, 10), Rational(1, 2), Rational(4, 5)};
  const std::vector<Rational> interests{Rational(1, 100), Rational(1, 20)};
  for (int round = 0; round < 60; ++round) {
    auto db = testing::random_db(rng, 8, 64);
    MiningConfig c;
    c.minsprt = testing::pick(rng, supports);
    c.minconf = testing::pick(rng, confs);
    c.mininterest = testing::pick(rng, interests);
    c.max_len = 2 + rng() % 4;
    c.use_abs_interest_for_negative = rng() % 2 == 0;
    FormSet forms;
    for (RuleForm f : all_forms) {
      if (rng() % 4 != 0) forms = forms.with(f);
    }
    c.forms = forms;
    auto run = run_pipeline(db, c);
    auto expected = oracle::oracle_rules(db, c);
    ASSERT_EQ(run.rules, expected.rules) << "round " << round;
    EXPECT_EQ(run.stages, expected.stage_counts) << "round " << round;
  }
}

}  // namespace
}  // namespace negrules
