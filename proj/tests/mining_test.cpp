#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "negrules/mining.hpp"
#include "negrules/oracle.hpp"

namespace negrules {
namespace {

using testing::make_config;
using testing::salt;
using testing::soy;

std::map<Itemset, std::size_t> as_map(const FrequentSet& f) {
  std::map<Itemset, std::size_t> out;
  for (const auto& e : f.entries()) out.emplace(e.items, e.count);
  return out;
}

// Exhaustive reference: every itemset of size 1..max_len whose scanned count
// reaches minsprt.
std::map<Itemset, std::size_t> enumerate_frequent(const TransactionDatabase& db, const MiningConfig& c) {
  std::map<Itemset, std::size_t> out;
  const auto table = oracle::oracle_supports(db, c.max_len);
  for (const auto& [s, count] : table.entries()) {
    if (db.ratio(count) >= c.minsprt) out.emplace(s, count);
  }
  return out;
}

TEST(MineFrequent, CooccurAtTwentyPercent) {
  auto db = testing::cooccur_db();
  auto f = mine_frequent(db, make_config("0.2", "0.5", "0.01", 2));
  std::map<Itemset, std::size_t> expected{{Itemset{soy}, 25}, {Itemset{salt}, 90}, {Itemset{soy, salt}, 20}};
  EXPECT_EQ(as_map(f), expected);
  EXPECT_EQ(as_map(f), enumerate_frequent(db, make_config("0.2", "0.5", "0.01", 2)));
}

TEST(MineFrequent, UniversalItemAtFullSupport) {
  auto db = load_basket_text("a b\na c\na\na b c\n");
  auto f = mine_frequent(db, make_config("1", "0.5", "0.01"));
  std::map<Itemset, std::size_t> expected{{Itemset{0}, 4}};
  EXPECT_EQ(as_map(f), expected);

  auto db2 = load_basket_text("a b\na b c\na b\n");
  auto f2 = mine_frequent(db2, make_config("1", "0.5", "0.01"));
  std::map<Itemset, std::size_t> expected2{{Itemset{0}, 3}, {Itemset{1}, 3}, {Itemset{0, 1}, 3}};
  EXPECT_EQ(as_map(f2), expected2);
}

TEST(MineFrequent, ExclusiveExcludesInfrequentUnion) {
  auto f = mine_frequent(testing::exclusive_db(), make_config("0.1", "0.5", "0.01", 2));
  std::map<Itemset, std::size_t> expected{{Itemset{soy}, 40}, {Itemset{salt}, 60}};
  EXPECT_EQ(as_map(f), expected);
  EXPECT_FALSE(f.contains(Itemset{soy, salt}));
}

TEST(MineFrequent, RespectsMaxLen) {
  auto db = load_basket_text("a b c d\na b c d\na b c\n");
  auto f = mine_frequent(db, make_config("0.5", "0.5", "0.01", 3));
  EXPECT_EQ(f.max_size(), 3U);
  EXPECT_FALSE(f.contains(Itemset{0, 1, 2, 3}));
  EXPECT_TRUE(f.contains(Itemset{1, 2, 3}));
}

TEST(MineFrequent, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(99);
  const std::vector<Rational> supports{Rational(1, 20), Rational(1, 10), Rational(1, 5), Rational(3, 10),
                                       Rational(1, 2)};
  for (int round = 0; round < 150; ++round) {
    auto db = testing::random_db(rng, 10, 80);
    MiningConfig c;
    c.minsprt = testing::pick(rng, supports);
    c.max_len = 2 + rng() % 5;
    auto f = mine_frequent(db, c);
    ASSERT_EQ(as_map(f), enumerate_frequent(db, c)) << "round " << round;
  }
}

TEST(MineFrequent, DownwardClosedAndThreadIndependent) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    auto db = testing::random_db(rng, 12, 200);
    auto c = make_config("0.1", "0.5", "0.01", 5);
    auto f = mine_frequent(db, c, 1);
    for (const auto& e : f.entries()) {
      EXPECT_GE(db.ratio(e.count), c.minsprt);
      if (e.items.size() < 2) continue;
      for (std::size_t drop = 0; drop < e.items.size(); ++drop) {
        std::vector<ItemId> sub;
        for (std::size_t i = 0; i < e.items.size(); ++i) {
          if (i != drop) sub.push_back(e.items[i]);
        }
        EXPECT_TRUE(f.contains(Itemset(sub)));
      }
    }
    auto f4 = mine_frequent(db, c, 4);
    for (std::size_t k = 1; k <= f.max_size(); ++k) EXPECT_EQ(f.level(k), f4.level(k));
  }
}

TEST(NegativeCandidates, OrderedDisjointPairs) {
  auto db = load_basket_text("a b\nb\na\n");
  auto c = make_config("0.5", "0.5", "0.01", 2);
  auto f = mine_frequent(db, c);
  auto cands = generate_negative_candidates(f, db, c);
  ASSERT_EQ(cands.size(), 2U);
  EXPECT_EQ(cands[0].a, Itemset{0});
  EXPECT_EQ(cands[0].b, Itemset{1});
  EXPECT_EQ(cands[1].a, Itemset{1});
  EXPECT_EQ(cands[1].b, Itemset{0});
  EXPECT_EQ(cands[0].union_count, 1U);
}

TEST(NegativeCandidates, SingleFrequentItemYieldsNothing) {
  auto db = load_basket_text("a\na\nb\n");
  auto c = make_config("0.5", "0.5", "0.01");
  auto f = mine_frequent(db, c);
  EXPECT_TRUE(generate_negative_candidates(f, db, c).empty());
  EXPECT_TRUE(generate_negative_candidates(FrequentSet(3), db, c).empty());
}

TEST(NegativeCandidates, ExclusiveCarriesUnionCount) {
  auto db = testing::exclusive_db();
  auto c = make_config("0.1", "0.5", "0.01", 2);
  auto cands = generate_negative_candidates(mine_frequent(db, c), db, c);
  ASSERT_EQ(cands.size(), 2U);
  EXPECT_EQ(cands[0].a, Itemset{soy});
  EXPECT_EQ(cands[0].b, Itemset{salt});
  EXPECT_EQ(cands[0].union_count, 5U);
  EXPECT_EQ(cands[0].a_count, 40U);
  EXPECT_EQ(cands[0].b_count, 60U);
}

TEST(NegativeCandidates, InvariantsAndDeterminism) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    auto db = testing::random_db(rng, 9, 120);
    auto c = make_config("0.15", "0.5", "0.01", 4);
    auto f = mine_frequent(db, c);
    auto cands = generate_negative_candidates(f, db, c, 1);
    EXPECT_EQ(cands, generate_negative_candidates(f, db, c, 3));
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& x = cands[i];
      EXPECT_TRUE(x.a.disjoint(x.b));
      EXPECT_TRUE(f.contains(x.a));
      EXPECT_TRUE(f.contains(x.b));
      EXPECT_LE(x.a.size() + x.b.size(), c.max_len);
      EXPECT_EQ(x.union_count, support_count(db, x.a.unite(x.b)));
      if (i > 0) {
        EXPECT_LT(std::tie(cands[i - 1].a, cands[i - 1].b), std::tie(x.a, x.b));
      }
    }
  }
}

TEST(SearchSpaceReport, EmptyRunReportsUnitRatios) {
  auto r = search_space_report(FrequentSet(10), {}, 0, make_config("0.5", "0.5", "0.01"));
  EXPECT_EQ(r.candidate_pairs, 0U);
  EXPECT_EQ(r.condition3_retention, Rational(1));
  EXPECT_EQ(r.rule_yield, Rational(1));
}

TEST(SearchSpaceReport, ExclusiveStageCounts) {
  auto db = testing::exclusive_db();
  auto c = make_config("0.1", "0.5", "0.01", 2);
  auto f = mine_frequent(db, c);
  auto cands = generate_negative_candidates(f, db, c);
  auto r = search_space_report(f, cands, 0, c);
  EXPECT_EQ(r.frequent_itemsets, 2U);
  EXPECT_EQ(r.positive_partitions, 0U);
  EXPECT_EQ(r.candidate_pairs, 2U);
  // (soy,salt): soy∧¬salt = 0.35; (salt,soy): salt∧¬soy = 0.55.
  EXPECT_EQ(r.negative_itemset_pairs, 2U);
  EXPECT_EQ(r.condition3_retention, Rational(1));
}

TEST(SearchSpaceReport, SeededDatasetMatchesOracleStages) {
  GeneratorParams p{7, 10, 200, Rational(3, 10)};
  auto db = load_basket_text(generate_basket(p));
  auto c = make_config("0.15", "0.5", "0.01");
  auto f = mine_frequent(db, c);
  auto cands = generate_negative_candidates(f, db, c);
  auto oracle = oracle::oracle_rules(db, c);
  auto r = search_space_report(f, cands, oracle.rules.size(), c);
  EXPECT_EQ(r, oracle.stage_counts);
  EXPECT_GT(r.candidate_pairs, 0U);
}

}  // namespace
}  // namespace negrules
