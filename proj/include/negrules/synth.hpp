#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "negrules/error.hpp"
#include "negrules/rational.hpp"

namespace negrules {

struct GeneratorParams {
  std::uint64_t seed = 7;
  std::size_t items = 10;
  std::size_t transactions = 200;
  Rational density{3, 10};
};

/// Seeded basket text. Item k is labelled "i<k>" and joins each row
/// independently with probability `density`; a row that comes out empty gets
/// one uniformly chosen item so every row survives loading. Output depends
/// only on the parameters: std::mt19937_64 is fully specified and the
/// Bernoulli draw is done in integer arithmetic.
inline std::string generate_basket(const GeneratorParams& p) {
  if (p.items == 0 || p.transactions == 0) {
    throw Error(ErrorCode::InvalidParameter, "items and transactions must be positive");
  }
  if (p.density <= Rational(0) || p.density >= Rational(1)) {
    throw Error(ErrorCode::InvalidParameter, "density must be in (0,1), got " + p.density.to_decimal());
  }
  std::mt19937_64 rng(p.seed);
  // u ~ U{0, 2^53 - 1}; u < density * 2^53  <=>  u * den < num * 2^53.
  const auto num = static_cast<unsigned __int128>(p.density.num()) << 53;
  const auto den = static_cast<unsigned __int128>(p.density.den());
  std::string out;
  for (std::size_t t = 0; t < p.transactions; ++t) {
    std::string row;
    for (std::size_t i = 0; i < p.items; ++i) {
      const auto u = static_cast<unsigned __int128>(rng() >> 11);
      if (u * den < num) {
        if (!row.empty()) row.push_back(' ');
        row += "i" + std::to_string(i);
      }
    }
    if (row.empty()) row = "i" + std::to_string(rng() % p.items);
    out += row;
    out.push_back('\n');
  }
  return out;
}

}  // namespace negrules
