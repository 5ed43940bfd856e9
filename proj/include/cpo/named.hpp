#pragma once

// The named CPOs: Φ, Θ, Ω and its variants, Λ, Λ′, Λ̂′, Ξ, Ξ^opp and V.
//
// Each is an OrderWord plus a labeler. Every block of the word is described
// by a label rule and, where the CPO is made of strings or string pairs, by
// the family of strings its offsets run through.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cpo/error.hpp"
#include "cpo/order.hpp"
#include "cpo/strings.hpp"

namespace cpo {

enum class CpoName {
  two,
  phi,
  theta,
  omega_set,
  omega_opp,
  omega_prime,
  omega_prime_opp,
  lambda,
  lambda_prime,
  lambda_hat_prime,
  xi,
  xi_opp,
  v,
};

inline constexpr std::array<CpoName, 13> kAllCpoNames = {
    CpoName::two,         CpoName::phi,          CpoName::theta,  CpoName::omega_set,
    CpoName::omega_opp,   CpoName::omega_prime,  CpoName::omega_prime_opp,
    CpoName::lambda,      CpoName::lambda_prime, CpoName::lambda_hat_prime,
    CpoName::xi,          CpoName::xi_opp,       CpoName::v,
};

/// Identifier used on the command line and in JSON.
inline std::string_view key(CpoName n) {
  switch (n) {
    case CpoName::two: return "two";
    case CpoName::phi: return "phi";
    case CpoName::theta: return "theta";
    case CpoName::omega_set: return "omega";
    case CpoName::omega_opp: return "omega_opp";
    case CpoName::omega_prime: return "omega_prime";
    case CpoName::omega_prime_opp: return "omega_prime_opp";
    case CpoName::lambda: return "lambda";
    case CpoName::lambda_prime: return "lambda_prime";
    case CpoName::lambda_hat_prime: return "lambda_hat_prime";
    case CpoName::xi: return "xi";
    case CpoName::xi_opp: return "xi_opp";
    case CpoName::v: return "v";
  }
  return "?";
}

inline std::string_view symbol(CpoName n) {
  switch (n) {
    case CpoName::two: return "2";
    case CpoName::phi: return "Φ";
    case CpoName::theta: return "Θ";
    case CpoName::omega_set: return "Ω";
    case CpoName::omega_opp: return "Ω^opp";
    case CpoName::omega_prime: return "Ω′";
    case CpoName::omega_prime_opp: return "Ω′(opp)";
    case CpoName::lambda: return "Λ";
    case CpoName::lambda_prime: return "Λ′";
    case CpoName::lambda_hat_prime: return "Λ̂′";
    case CpoName::xi: return "Ξ";
    case CpoName::xi_opp: return "Ξ^opp";
    case CpoName::v: return "V";
  }
  return "?";
}

inline CpoName parse_cpo_name(std::string_view s) {
  for (auto n : kAllCpoNames) {
    if (key(n) == s || symbol(n) == s) return n;
  }
  throw UnknownCpo(std::string(s));
}

using Carrier = std::variant<std::monostate, MonotypicString, PairString>;

/// Normalizes label spellings: ′ to ', ∞ to inf, − to -, and trims blanks.
inline std::string canonical_literal(std::string_view text) {
  std::string s = detail::trim(text);
  const auto replace_all = [&s](std::string_view from, std::string_view to) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) {
      s.replace(p, from.size(), to);
    }
  };
  replace_all("′", "'");
  replace_all("∞", "inf");
  replace_all("−", "-");
  return s;
}

namespace detail {

/// Strings indexed by a block offset k.
struct Family {
  enum class Kind { constant, ones_right, zeros_left } kind = Kind::constant;
  std::optional<MonotypicString> fixed;  // for constant
  std::uint64_t shift = 0;               // count = k + shift

  static Family constant(MonotypicString s) { return {Kind::constant, s, 0}; }
  static Family ones_right(std::uint64_t shift = 0) { return {Kind::ones_right, std::nullopt, shift}; }
  static Family zeros_left(std::uint64_t shift = 0) { return {Kind::zeros_left, std::nullopt, shift}; }

  MonotypicString at(std::uint64_t k) const {
    switch (kind) {
      case Kind::constant: return *fixed;
      case Kind::ones_right: return MonotypicString::ones_after_zeros(k + shift);
      case Kind::zeros_left: return MonotypicString::zeros_then_ones(k + shift);
    }
    throw std::logic_error("unreachable");
  }

  std::optional<std::uint64_t> offset_of(const MonotypicString& s) const {
    switch (kind) {
      case Kind::constant:
        if (s == *fixed) return 0;
        return std::nullopt;
      case Kind::ones_right:
        if (s.orientation() != Orientation::right || s.ones().is_omega()) return std::nullopt;
        if (s.ones().value() < shift) return std::nullopt;
        return s.ones().value() - shift;
      case Kind::zeros_left:
        if (s.orientation() != Orientation::left || s.zeros().is_omega()) return std::nullopt;
        if (s.zeros().value() < shift) return std::nullopt;
        return s.zeros().value() - shift;
    }
    return std::nullopt;
  }
};

/// Label of offset k: `fixed` when set, else prefix + (k + shift) + suffix,
/// except that `zero` (when set) names the number 0.
struct LabelRule {
  std::string fixed;
  std::string prefix;
  std::string suffix;
  std::uint64_t shift = 0;
  std::string zero;
  std::vector<std::string> aliases;  // other spellings of the fixed or zero label

  static LabelRule constant(std::string s, std::vector<std::string> aliases = {}) {
    LabelRule r;
    r.fixed = std::move(s);
    r.aliases = std::move(aliases);
    return r;
  }
  static LabelRule numbered(std::string prefix = "", std::string suffix = "", std::uint64_t shift = 0,
                            std::string zero = "", std::vector<std::string> aliases = {}) {
    LabelRule r;
    r.aliases = std::move(aliases);
    r.prefix = std::move(prefix);
    r.suffix = std::move(suffix);
    r.shift = shift;
    r.zero = std::move(zero);
    return r;
  }

  std::string at(std::uint64_t k) const {
    if (!fixed.empty()) return fixed;
    const auto n = k + shift;
    if (n == 0 && !zero.empty()) return zero;
    return prefix + std::to_string(n) + suffix;
  }

  std::optional<std::uint64_t> offset_of(const std::string& label) const {
    if (!fixed.empty()) {
      if (label == fixed) return 0;
      for (const auto& a : aliases) if (label == a) return 0;
      return std::nullopt;
    }
    const bool zero_alias = std::find(aliases.begin(), aliases.end(), label) != aliases.end();
    if (!zero.empty() && (label == zero || zero_alias)) {
      return shift == 0 ? std::optional<std::uint64_t>(0) : std::nullopt;
    }
    if (!label.starts_with(prefix) || !label.ends_with(suffix)) return std::nullopt;
    if (label.size() <= prefix.size() + suffix.size()) return std::nullopt;
    const auto digits = label.substr(prefix.size(), label.size() - prefix.size() - suffix.size());
    if (digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
    const auto n = std::stoull(digits);
    if (n < shift) return std::nullopt;
    if (n == 0 && !zero.empty()) return std::nullopt;
    return n - shift;
  }
};

struct BlockSpec {
  OrderAtom atom;
  LabelRule label;
  std::optional<Family> single;  // string carriers
  std::optional<Family> left;    // pair carriers
  std::optional<Family> right;
};

}  // namespace detail

class NamedCpo {
 public:
  CpoName name() const { return name_; }
  const OrderWord& word() const { return word_; }
  std::string_view symbol() const { return cpo::symbol(name_); }
  std::string_view key() const { return cpo::key(name_); }

  bool has_strings() const { return blocks_.front().single.has_value(); }
  bool has_pairs() const { return blocks_.front().left.has_value(); }

  std::string label(Elem x) const {
    require_valid(word_, x);
    return blocks_[x.block].label.at(x.offset);
  }

  Carrier value(Elem x) const {
    require_valid(word_, x);
    const auto& b = blocks_[x.block];
    if (b.single) return b.single->at(x.offset);
    if (b.left) return PairString{b.left->at(x.offset), b.right->at(x.offset)};
    return std::monostate{};
  }

  std::optional<Elem> find(const MonotypicString& s) const {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const auto& b = blocks_[j];
      if (!b.single) continue;
      if (auto k = b.single->offset_of(s); k && valid(word_, {j, *k})) return Elem{j, *k};
    }
    return std::nullopt;
  }

  std::optional<Elem> find(const PairString& p) const {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const auto& b = blocks_[j];
      if (!b.left) continue;
      const auto kl = b.left->offset_of(p.left);
      const auto kr = b.right->offset_of(p.right);
      if (!kl || !kr) continue;
      // One side is constant (offset 0), the other carries the offset.
      const bool left_varies = b.left->kind != detail::Family::Kind::constant;
      const auto k = left_varies ? *kl : *kr;
      if ((left_varies ? *kr : *kl) != 0) continue;
      if (valid(word_, {j, k})) return Elem{j, k};
    }
    return std::nullopt;
  }

  std::optional<Elem> find_label(std::string_view text) const {
    const auto s = canonical_literal(text);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (auto k = blocks_[j].label.offset_of(s); k && valid(word_, {j, *k})) return Elem{j, *k};
    }
    return std::nullopt;
  }

  /// Accepts a label ("3", "2'", "inf", "+4", "m'"), a string literal
  /// ("...0011", "011⋯") or a pair literal ("(...000, 111...)").
  Elem parse(std::string_view text) const {
    if (auto e = find_label(text)) return *e;
    const auto s = detail::trim(text);
    try {
      if (s.starts_with("(") && has_pairs()) {
        if (auto e = find(parse_pair(s))) return *e;
      } else if (has_strings()) {
        if (auto e = find(parse_string(s))) return *e;
      }
    } catch (const InvalidString&) {
    }
    throw BadElement("'" + s + "' is not an element of " + std::string(symbol()));
  }

 private:
  NamedCpo(CpoName n, std::vector<detail::BlockSpec> blocks)
      : name_(n), word_(atoms_of(blocks)), blocks_(std::move(blocks)) {}

  static OrderWord atoms_of(const std::vector<detail::BlockSpec>& blocks) {
    std::vector<OrderAtom> atoms;
    for (const auto& b : blocks) atoms.push_back(b.atom);
    return OrderWord(std::move(atoms));
  }

  friend NamedCpo named_cpo(CpoName n);

  CpoName name_;
  OrderWord word_;
  std::vector<detail::BlockSpec> blocks_;
};

inline NamedCpo named_cpo(CpoName n) {
  using detail::BlockSpec;
  using detail::Family;
  using detail::LabelRule;
  const auto w = OrderAtom::omega();
  const auto ws = OrderAtom::omega_star();
  const auto one = OrderAtom::fin(1);

  const auto zeros_l = MonotypicString::all_zeros_left();   // 000⋯
  const auto ones_r = MonotypicString::all_ones_right();    // ⋯111
  const auto zeros_r = MonotypicString::ones_after_zeros(0);  // ⋯000
  const auto ones_l = MonotypicString::zeros_then_ones(0);    // 111⋯

  // Ω: ⋯0 1^n labeled n. Ω^opp: 0^n 1⋯ labeled n'. ⋯111 is ∞, 000⋯ is ∞'.
  const BlockSpec omega_block{w, LabelRule::numbered(), Family::ones_right(), {}, {}};
  const BlockSpec omega_opp_block{ws, LabelRule::numbered("", "'"), Family::zeros_left(), {}, {}};
  const BlockSpec inf_block{one, LabelRule::constant("inf"), Family::constant(ones_r), {}, {}};
  const BlockSpec inf_prime_block{one, LabelRule::constant("inf'"), Family::constant(zeros_l), {}, {}};

  switch (n) {
    case CpoName::two:
      return NamedCpo(n, {{OrderAtom::fin(2), LabelRule::numbered(), {}, {}, {}}});
    case CpoName::phi:
      return NamedCpo(n, {{w, LabelRule::numbered(), {}, {}, {}},
                          {one, LabelRule::constant("inf"), {}, {}, {}},
                          {ws, LabelRule::numbered("", "'"), {}, {}, {}}});
    case CpoName::theta:
      return NamedCpo(n, {{w, LabelRule::numbered(), {}, {}, {}},
                          {one, LabelRule::constant("inf"), {}, {}, {}}});
    case CpoName::omega_set:
      return NamedCpo(n, {omega_block});
    case CpoName::omega_opp:
      return NamedCpo(n, {omega_opp_block});
    case CpoName::omega_prime:
      return NamedCpo(n, {omega_block, inf_block});
    case CpoName::omega_prime_opp:
      return NamedCpo(n, {inf_prime_block, omega_opp_block});
    case CpoName::lambda:
      return NamedCpo(n, {omega_block, inf_block, omega_opp_block});
    case CpoName::lambda_prime:
      return NamedCpo(n, {omega_block, inf_block, inf_prime_block, omega_opp_block});
    case CpoName::lambda_hat_prime:
      // (000⋯, x) for x in Ω; m = (000⋯, ⋯111); (y, ⋯111) for y in Ω^opp.
      return NamedCpo(n, {{w, LabelRule::numbered(), {}, Family::constant(zeros_l), Family::ones_right()},
                          {one, LabelRule::constant("m"), {}, Family::constant(zeros_l), Family::constant(ones_r)},
                          {ws, LabelRule::numbered("", "'"), {}, Family::zeros_left(), Family::constant(ones_r)}});
    case CpoName::xi:
      // (⋯000, y) for y in Ω′(opp); its greatest element is m′, labeled 0.
      return NamedCpo(n, {{one, LabelRule::constant("-inf"), {}, Family::constant(zeros_r), Family::constant(zeros_l)},
                          {ws, LabelRule::numbered("-", "", 0, "0", {"m'"}), {}, Family::constant(zeros_r), Family::zeros_left()}});
    case CpoName::xi_opp:
      // (x, 111⋯) for x in Ω′; its least element is m′, labeled 0.
      return NamedCpo(n, {{w, LabelRule::numbered("+", "", 0, "0", {"m'"}), {}, Family::ones_right(), Family::constant(ones_l)},
                          {one, LabelRule::constant("+inf"), {}, Family::constant(ones_r), Family::constant(ones_l)}});
    case CpoName::v:
      // 1+ω*+ω+1 with m′ = (⋯000, 111⋯) at offset 0 of the ω block.
      return NamedCpo(n, {{one, LabelRule::constant("-inf"), {}, Family::constant(zeros_r), Family::constant(zeros_l)},
                          {ws, LabelRule::numbered("-", "", 1), {}, Family::constant(zeros_r), Family::zeros_left(1)},
                          {w, LabelRule::numbered("+", "", 0, "0", {"m'"}), {}, Family::ones_right(), Family::constant(ones_l)},
                          {one, LabelRule::constant("+inf"), {}, Family::constant(ones_r), Family::constant(ones_l)}});
  }
  throw UnknownCpo("?");
}

inline NamedCpo named_cpo(std::string_view name) { return named_cpo(parse_cpo_name(name)); }

/// Every monotypic string is an element of Λ′, so its order is the ambient
/// order for comparing strings.
inline Cmp compare_strings(const MonotypicString& a, const MonotypicString& b) {
  static const NamedCpo universe = named_cpo(CpoName::lambda_prime);
  return compare(universe.word(), *universe.find(a), *universe.find(b));
}

inline std::string render(const Carrier& c) {
  if (const auto* s = std::get_if<MonotypicString>(&c)) return render(*s);
  if (const auto* p = std::get_if<PairString>(&c)) return render(*p);
  return {};
}

}  // namespace cpo
