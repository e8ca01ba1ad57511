#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "negrules/error.hpp"
#include "negrules/rational.hpp"
#include "negrules/transactions.hpp"

namespace negrules {

constexpr std::string_view form_name(RuleForm f) noexcept {
  switch (f) {
    case RuleForm::Positive: return "pos";
    case RuleForm::ANotB: return "a_not_b";
    case RuleForm::NotAB: return "not_a_b";
    case RuleForm::NotANotB: return "not_a_not_b";
  }
  return "?";
}

inline RuleForm parse_form(std::string_view name) {
  for (RuleForm f : all_forms) {
    if (form_name(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown rule form '" + std::string(name) + "'");
}

/// Subset of the four rule forms.
class FormSet {
 public:
  constexpr FormSet() noexcept = default;

  static constexpr FormSet all() noexcept {
    FormSet s;
    s.bits_ = 0b1111;
    return s;
  }
  static constexpr FormSet positive_only() noexcept { return FormSet{}.with(RuleForm::Positive); }
  static constexpr FormSet negative_only() noexcept {
    return FormSet{}.with(RuleForm::ANotB).with(RuleForm::NotAB).with(RuleForm::NotANotB);
  }

  [[nodiscard]] constexpr FormSet with(RuleForm f) const noexcept {
    FormSet s = *this;
    s.bits_ |= bit(f);
    return s;
  }
  [[nodiscard]] constexpr bool contains(RuleForm f) const noexcept { return (bits_ & bit(f)) != 0; }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr bool any_negative() const noexcept { return (bits_ & 0b1110) != 0; }
  [[nodiscard]] std::size_t negative_count() const noexcept {
    std::size_t k = 0;
    for (RuleForm f : negative_forms) k += contains(f) ? 1 : 0;
    return k;
  }

  [[nodiscard]] std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (RuleForm f : all_forms) {
      if (contains(f)) out.emplace_back(form_name(f));
    }
    return out;
  }

  /// Accepts "pos", "neg", "all", "none", or a comma list of form names.
  static FormSet parse(std::string_view text) {
    if (text == "all") return all();
    if (text == "neg") return negative_only();
    if (text == "none") return {};
    FormSet s;
    while (!text.empty()) {
      auto comma = text.find(',');
      std::string_view tok = text.substr(0, comma);
      if (tok == "neg") {
        s.bits_ |= negative_only().bits_;
      } else if (!tok.empty()) {
        s = s.with(parse_form(tok));
      }
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (s.empty()) throw Error(ErrorCode::InvalidParameter, "no rule forms selected");
    return s;
  }

  friend constexpr bool operator==(const FormSet&, const FormSet&) noexcept = default;

 private:
  static constexpr unsigned bit(RuleForm f) noexcept { return 1U << static_cast<unsigned>(f); }
  unsigned bits_ = 0;
};

/// User thresholds. One minimum support governs frequent parts, positive
/// unions and negated supports alike.
struct MiningConfig {
  Rational minsprt{1, 10};
  Rational minconf{1, 2};
  Rational mininterest{1, 100};
  std::size_t max_len = 6;
  FormSet forms = FormSet::all();
  bool use_abs_interest_for_negative = false;
};

}  // namespace negrules
