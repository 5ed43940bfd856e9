#pragma once

// Monotypic infinite binary strings 0^u 1^v, the four specifications of the
// finite stage strings, their limits, and the opp / LR transformations.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "cpo/error.hpp"

namespace cpo {

/// A count in ℕ ∪ {ω}. ω is a distinguished value, never a sentinel integer.
class Count {
 public:
  static constexpr Count finite(std::uint64_t n) { return Count(false, n); }
  static constexpr Count omega() { return Count(true, 0); }

  constexpr bool is_omega() const { return omega_; }
  std::uint64_t value() const {
    if (omega_) throw std::logic_error("ω has no finite value");
    return n_;
  }

  constexpr bool operator==(const Count&) const = default;

  std::string to_string() const { return omega_ ? "ω" : std::to_string(n_); }

 private:
  constexpr Count(bool omega, std::uint64_t n) : omega_(omega), n_(n) {}
  bool omega_;
  std::uint64_t n_;
};

/// L: bits indexed from the left, order type ω. R: indexed from the right, ω*.
enum class Orientation { left, right };

class MonotypicString {
 public:
  /// Throws InvalidString unless exactly one count is ω and the string is
  /// one of 0^u 1^ω, 000⋯ (orientation L) or ⋯0^ω 1^v, ⋯111 (orientation R).
  static MonotypicString make(Orientation o, Count zeros, Count ones) {
    if (zeros.is_omega() == ones.is_omega()) {
      throw InvalidString("exactly one of the zero and one counts must be ω");
    }
    if (o == Orientation::left && zeros.is_omega() && ones != Count::finite(0)) {
      throw InvalidString("a left-indexed string with infinitely many 0's has no 1's");
    }
    if (o == Orientation::right && ones.is_omega() && zeros != Count::finite(0)) {
      throw InvalidString("a right-indexed string with infinitely many 1's has no 0's");
    }
    return MonotypicString(o, zeros, ones);
  }

  /// 0^u 1^ω
  static MonotypicString zeros_then_ones(std::uint64_t u) {
    return make(Orientation::left, Count::finite(u), Count::omega());
  }
  /// ⋯0^ω 1^v
  static MonotypicString ones_after_zeros(std::uint64_t v) {
    return make(Orientation::right, Count::omega(), Count::finite(v));
  }
  static MonotypicString all_zeros_left() { return make(Orientation::left, Count::omega(), Count::finite(0)); }
  static MonotypicString all_ones_right() { return make(Orientation::right, Count::finite(0), Count::omega()); }

  Orientation orientation() const { return orientation_; }
  Count zeros() const { return zeros_; }
  Count ones() const { return ones_; }

  /// The j-th bit (j ≥ 1) counted from the string's own indexing end.
  int bit(std::uint64_t j) const {
    if (j == 0) throw BadIndex("bit positions start at 1");
    if (orientation_ == Orientation::left) {
      if (zeros_.is_omega()) return 0;
      return j <= zeros_.value() ? 0 : 1;
    }
    if (ones_.is_omega()) return 1;
    return j <= ones_.value() ? 1 : 0;
  }

  bool operator==(const MonotypicString&) const = default;

 private:
  MonotypicString(Orientation o, Count z, Count n) : orientation_(o), zeros_(z), ones_(n) {}
  Orientation orientation_;
  Count zeros_;
  Count ones_;
};

struct PairString {
  MonotypicString left;
  MonotypicString right;

  bool operator==(const PairString&) const = default;
};

// ---------------------------------------------------------------------------
// Specifications

enum class Spec { I, II, III, IV };

inline std::string to_string(Spec s) {
  switch (s) {
    case Spec::I: return "I";
    case Spec::II: return "II";
    case Spec::III: return "III";
    case Spec::IV: return "IV";
  }
  return "?";
}

inline Spec parse_spec(std::string_view s) {
  if (s == "I" || s == "1") return Spec::I;
  if (s == "II" || s == "2") return Spec::II;
  if (s == "III" || s == "3") return Spec::III;
  if (s == "IV" || s == "4") return Spec::IV;
  throw std::invalid_argument("unknown specification '" + std::string(s) + "'");
}

/// A string together with the specification and index that defined it.
struct SpecifiedString {
  Spec spec = Spec::I;
  std::uint64_t index = 1;

  static SpecifiedString make(Spec s, std::uint64_t i) {
    if (i < 1) throw BadIndex("specification index must be at least 1");
    return {s, i};
  }

  bool operator==(const SpecifiedString&) const = default;
};

inline MonotypicString realize(const SpecifiedString& s) {
  switch (s.spec) {
    case Spec::I: return MonotypicString::all_zeros_left();
    case Spec::II: return MonotypicString::zeros_then_ones(s.index - 1);
    case Spec::III: return MonotypicString::ones_after_zeros(s.index - 1);
    case Spec::IV: return MonotypicString::all_ones_right();
  }
  throw std::logic_error("unreachable");
}

/// Specs I and II index bits from the left, III and IV from the right.
inline bool indexed_from_left(Spec s) { return s == Spec::I || s == Spec::II; }

/// The j-th bit of s_i^(n), counted from the specification's own end.
inline int stage_bit(Spec spec, std::uint64_t i, std::uint64_t n, std::uint64_t j) {
  switch (spec) {
    case Spec::I: return j + i <= n ? 0 : 1;
    case Spec::II: return j < i ? 0 : 1;
    case Spec::III: return j < i ? 1 : 0;
    case Spec::IV: return j + i <= n ? 1 : 0;
  }
  throw std::logic_error("unreachable");
}

/// s_i^(n) written left to right, length n-1.
inline std::string finite_approx(Spec spec, std::uint64_t i, std::uint64_t n) {
  if (n < 2) throw BadIndex("stage must be at least 2");
  if (i < 1 || i > n) throw BadIndex("index must lie in [1, n]");
  const std::uint64_t len = n - 1;
  std::string out(len, '0');
  for (std::uint64_t j = 1; j <= len; ++j) {
    const std::uint64_t pos = indexed_from_left(spec) ? j - 1 : len - j;
    out[pos] = static_cast<char>('0' + stage_bit(spec, i, n, j));
  }
  return out;
}

struct LimitCheck {
  bool stable = false;
  int bit = 0;  // the bit of the realized string at position j
};

/// Whether bit j of s_i^(n) equals bit j of the realized limit for every n in
/// [j+i, depth].
inline LimitCheck limit_check(Spec spec, std::uint64_t i, std::uint64_t j, std::uint64_t depth) {
  if (i < 1 || j < 1) throw BadIndex("index and bit position start at 1");
  if (depth < j + i) throw BadIndex("test depth must be at least j+i");
  const int limit = realize(SpecifiedString::make(spec, i)).bit(j);
  bool stable = true;
  for (std::uint64_t n = j + i; n <= depth; ++n) {
    stable = stable && stage_bit(spec, i, n, j) == limit;
  }
  return {stable, limit};
}

// ---------------------------------------------------------------------------
// Transformations

/// Flip every bit, then reverse the order type.
inline MonotypicString opp(const MonotypicString& x) {
  const auto o = x.orientation() == Orientation::left ? Orientation::right : Orientation::left;
  return MonotypicString::make(o, x.ones(), x.zeros());
}

inline PairString opp_pair(const PairString& p) { return {opp(p.right), opp(p.left)}; }

/// Replaces j by n-j in the specification: I↔III, II↔IV, index kept.
inline SpecifiedString lr(const SpecifiedString& s) {
  switch (s.spec) {
    case Spec::I: return {Spec::III, s.index};
    case Spec::II: return {Spec::IV, s.index};
    case Spec::III: return {Spec::I, s.index};
    case Spec::IV: return {Spec::II, s.index};
  }
  throw std::logic_error("unreachable");
}

inline std::pair<SpecifiedString, SpecifiedString> lr_pair(const std::pair<SpecifiedString, SpecifiedString>& p) {
  return {lr(p.first), lr(p.second)};
}

struct Classification {
  Spec family = Spec::I;
  std::optional<std::uint64_t> index;  // empty means indeterminate

  bool operator==(const Classification&) const = default;
};

/// The unique family a realized string can come from. Families I and IV
/// realize every index to the same string, so their index stays unknown.
inline Classification classify(const MonotypicString& x) {
  if (x.orientation() == Orientation::left) {
    if (x.zeros().is_omega()) return {Spec::I, std::nullopt};
    return {Spec::II, x.zeros().value() + 1};
  }
  if (x.ones().is_omega()) return {Spec::IV, std::nullopt};
  return {Spec::III, x.ones().value() + 1};
}

// ---------------------------------------------------------------------------
// Text forms

inline constexpr std::string_view kEllipsis = "⋯";

/// Sample rendering: "0011⋯", "000⋯", "⋯0011", "⋯111".
inline std::string render(const MonotypicString& x) {
  const std::string ell(kEllipsis);
  if (x.orientation() == Orientation::left) {
    if (x.zeros().is_omega()) return "000" + ell;
    const auto u = x.zeros().value();
    return (u == 0 ? std::string("111") : std::string(u, '0') + "11") + ell;
  }
  if (x.ones().is_omega()) return ell + "111";
  const auto v = x.ones().value();
  return ell + (v == 0 ? std::string("000") : "00" + std::string(v, '1'));
}

/// Compact rendering: "0^2 1^ω→" and "⋯0^ω 1^3".
inline std::string render_compact(const MonotypicString& x) {
  if (x.orientation() == Orientation::left) {
    return "0^" + x.zeros().to_string() + " 1^" + x.ones().to_string() + "→";
  }
  return std::string(kEllipsis) + "0^" + x.zeros().to_string() + " 1^" + x.ones().to_string();
}

inline std::string render(const PairString& p) { return "(" + render(p.left) + ", " + render(p.right) + ")"; }

inline std::string render(const SpecifiedString& s) { return "(" + to_string(s.spec) + ", " + std::to_string(s.index) + ")"; }

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline bool strip_prefix(std::string& s, std::string_view p) {
  if (!s.starts_with(p)) return false;
  s.erase(0, p.size());
  return true;
}

inline bool strip_suffix(std::string& s, std::string_view p) {
  if (!s.ends_with(p)) return false;
  s.erase(s.size() - p.size());
  return true;
}

inline Count parse_count(std::string_view s) {
  const auto t = trim(s);
  if (t == "ω" || t == "w" || t == "omega") return Count::omega();
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidString("bad count '" + t + "'");
  }
  return Count::finite(std::stoull(t));
}

}  // namespace detail

/// Parses sample forms ("0011⋯", "...0011", "⋯111") and compact forms
/// ("0^2 1^ω→", "⋯0^ω 1^3"). "..." may stand for "⋯", "w" for "ω".
inline MonotypicString parse_string(std::string_view text) {
  std::string s = detail::trim(text);
  const std::string original = s;
  const auto bad = [&](const char* why) { return InvalidString("malformed string '" + original + "': " + why); };

  bool leading = detail::strip_prefix(s, kEllipsis) || detail::strip_prefix(s, "...");
  const bool arrow = detail::strip_suffix(s, "→") || detail::strip_suffix(s, "->");
  bool trailing = !leading && (detail::strip_suffix(s, kEllipsis) || detail::strip_suffix(s, "..."));

  if (s.find('^') != std::string::npos) {
    // compact: 0^a 1^b
    std::string t;
    for (char c : s) if (c != ' ') t += c;
    if (!t.starts_with("0^")) throw bad("compact form starts with 0^");
    const auto one = t.find("1^");
    if (one == std::string::npos) throw bad("compact form needs 1^");
    const Count zeros = detail::parse_count(t.substr(2, one - 2));
    const Count ones = detail::parse_count(t.substr(one + 2));
    // Without a marker the infinite side decides: 0^ω leads, 1^ω trails.
    const bool right = leading || (!arrow && !trailing && zeros.is_omega());
    const auto o = right ? Orientation::right : Orientation::left;
    return MonotypicString::make(o, zeros, ones);
  }

  if (leading == trailing) throw bad("expected exactly one ellipsis");
  if (s.empty() || s.find_first_not_of("01") != std::string::npos) throw bad("bits must be 0 or 1");
  const auto first_one = s.find('1');
  if (first_one != std::string::npos && s.find('0', first_one) != std::string::npos) {
    throw bad("not of the form 0...01...1");
  }
  const std::uint64_t zeros = first_one == std::string::npos ? s.size() : first_one;
  const std::uint64_t ones = s.size() - zeros;
  if (leading) {
    // ⋯ d1 d2 ...: the repeated digit is the first one shown
    if (s[0] == '1') return MonotypicString::all_ones_right();
    return MonotypicString::ones_after_zeros(ones);
  }
  if (s.back() == '0') return MonotypicString::all_zeros_left();
  return MonotypicString::zeros_then_ones(zeros);
}

/// Parses "(x, y)" with each side a monotypic string literal.
inline PairString parse_pair(std::string_view text) {
  std::string s = detail::trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw InvalidString("pair literal must look like (x, y)");
  }
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw InvalidString("pair literal needs exactly one comma");
  }
  return {parse_string(s.substr(0, comma)), parse_string(s.substr(comma + 1))};
}

}  // namespace cpo
