#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "negrules/negrules.hpp"

namespace negrules::testing {

/// 2x2 contingency table over items soy (id 0) and salt (id 1). The
/// "neither" cell becomes empty transactions, so no third item exists.
inline TransactionDatabase contingency_db(std::size_t both, std::size_t soy_only, std::size_t salt_only,
                                          std::size_t neither) {
  ItemDictionary dict;
  const ItemId soy = dict.intern("soy");
  const ItemId salt = dict.intern("salt");
  std::vector<Itemset> txs;
  txs.insert(txs.end(), both, Itemset{soy, salt});
  txs.insert(txs.end(), soy_only, Itemset{soy});
  txs.insert(txs.end(), salt_only, Itemset{salt});
  txs.insert(txs.end(), neither, Itemset{});
  return TransactionDatabase::from_transactions(std::move(dict), std::move(txs));
}

inline TransactionDatabase cooccur_db() { return contingency_db(20, 5, 70, 5); }
inline TransactionDatabase exclusive_db() { return contingency_db(5, 35, 55, 5); }

inline constexpr ItemId soy = 0;
inline constexpr ItemId salt = 1;

inline MiningConfig make_config(const char* minsprt, const char* minconf, const char* mininterest,
                                std::size_t max_len = 6, FormSet forms = FormSet::all()) {
  MiningConfig c;
  c.minsprt = Rational::parse(minsprt);
  c.minconf = Rational::parse(minconf);
  c.mininterest = Rational::parse(mininterest);
  c.max_len = max_len;
  c.forms = forms;
  return c;
}

/// Random database with up to `max_items` items and up to `max_rows` rows,
/// drawn through the basket generator so that fixtures and CLI data share
/// one source of randomness.
inline TransactionDatabase random_db(std::mt19937_64& rng, std::size_t max_items, std::size_t max_rows) {
  GeneratorParams p;
  p.seed = rng();
  p.items = 2 + rng() % (max_items - 1);
  p.transactions = 1 + rng() % max_rows;
  p.density = Rational(static_cast<Rational::int_type>(1 + rng() % 9), 10);
  return load_basket_text(generate_basket(p));
}

inline const Rational& pick(std::mt19937_64& rng, const std::vector<Rational>& options) {
  return options[rng() % options.size()];
}

}  // namespace negrules::testing
