#pragma once

// C(D,2) for a linear order D, represented by Scott-open final segments, and
// the fixed-point engine that runs on an isomorphism D ≅ C(D,2).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cpo/error.hpp"
#include "cpo/named.hpp"
#include "cpo/order.hpp"

namespace cpo {

/// A continuous map D → 2, stored as the final segment where it is 1.
struct OpenSegment {
  enum class Form { empty, up_from, block_tail };

  Form form = Form::empty;
  Elem from{};            // up_from
  std::size_t block = 0;  // block_tail: every element of blocks >= block

  static OpenSegment empty() { return {}; }
  static OpenSegment up_from(Elem x) { return {Form::up_from, x, 0}; }
  static OpenSegment block_tail(std::size_t j) { return {Form::block_tail, {}, j}; }

  bool operator==(const OpenSegment& o) const {
    if (form != o.form) return false;
    switch (form) {
      case Form::empty: return true;
      case Form::up_from: return from == o.from;
      case Form::block_tail: return block == o.block;
    }
    return false;
  }
};

inline bool segment_valid(const OrderWord& w, const OpenSegment& s) {
  switch (s.form) {
    case OpenSegment::Form::empty: return true;
    case OpenSegment::Form::up_from: {
      if (!valid(w, s.from)) return false;
      const auto bottom = extremes(w).bottom;
      return (bottom && *bottom == s.from) || neighbors(w, s.from).predecessor.has_value();
    }
    case OpenSegment::Form::block_tail:
      return s.block < w.size() && w[s.block].kind == AtomKind::omega_star;
  }
  return false;
}

inline void require_segment(const OrderWord& w, const OpenSegment& s) {
  if (!segment_valid(w, s)) throw InvalidSegment("segment is not Scott-open in this order");
}

inline int eval_segment(const OrderWord& w, const OpenSegment& s, Elem x) {
  require_segment(w, s);
  require_valid(w, x);
  switch (s.form) {
    case OpenSegment::Form::empty: return 0;
    case OpenSegment::Form::up_from: return leq(w, s.from, x) ? 1 : 0;
    case OpenSegment::Form::block_tail: return x.block >= s.block ? 1 : 0;
  }
  return 0;
}

/// Inclusion order: lt means a is a proper subset of b.
inline Cmp compare_segments(const OrderWord& w, const OpenSegment& a, const OpenSegment& b) {
  require_segment(w, a);
  require_segment(w, b);
  using F = OpenSegment::Form;
  if (a == b) return Cmp::eq;
  if (a.form == F::empty) return Cmp::lt;
  if (b.form == F::empty) return Cmp::gt;
  if (a.form == F::up_from && b.form == F::up_from) {
    // larger starting point, smaller segment
    return compare(w, a.from, b.from) == Cmp::gt ? Cmp::lt : Cmp::gt;
  }
  if (a.form == F::block_tail && b.form == F::block_tail) return a.block > b.block ? Cmp::lt : Cmp::gt;
  if (a.form == F::up_from) return a.from.block >= b.block ? Cmp::lt : Cmp::gt;
  return b.from.block >= a.block ? Cmp::gt : Cmp::lt;
}

inline std::string describe(const OpenSegment& s) {
  switch (s.form) {
    case OpenSegment::Form::empty: return "EMPTY";
    case OpenSegment::Form::up_from:
      return "UP_FROM(" + std::to_string(s.from.block) + "," + std::to_string(s.from.offset) + ")";
    case OpenSegment::Form::block_tail: return "BLOCK_TAIL(" + std::to_string(s.block) + ")";
  }
  return "?";
}

/// The open segments of a base word, ascending by inclusion, with the order
/// type they form.
class FuncSpace {
 public:
  const OrderWord& base() const { return base_; }
  const OrderWord& word() const { return norm_.word(); }
  /// The segment order before normalization, one block per run of segments.
  const OrderWord& raw_word() const { return norm_.source(); }

  OpenSegment segment_at(Elem y) const { return from_raw(norm_.from_normal(y)); }

  Elem position_of(const OpenSegment& s) const {
    require_segment(base_, s);
    return norm_.to_normal(to_raw(s));
  }

  /// Segments whose position in word() has offset at most `max_offset`.
  std::vector<OpenSegment> window(std::uint64_t max_offset) const {
    std::vector<OpenSegment> out;
    for (const auto& y : cpo::window(word(), max_offset)) out.push_back(segment_at(y));
    return out;
  }

 private:
  enum class Run { empty, fin_cut, omega_cut, omega_bottom, omega_star_cut, tail };

  struct RawBlock {
    Run run = Run::empty;
    std::size_t base_block = 0;
    std::uint64_t top = 0;  // fin_cut: offset of the smallest segment's start
  };

  FuncSpace(OrderWord base, std::vector<RawBlock> raw, Normalization norm)
      : base_(std::move(base)), raw_(std::move(raw)), norm_(std::move(norm)) {}

  OpenSegment from_raw(Elem r) const {
    const auto& b = raw_.at(r.block);
    switch (b.run) {
      case Run::empty: return OpenSegment::empty();
      case Run::fin_cut: return OpenSegment::up_from({b.base_block, b.top - r.offset});
      case Run::omega_cut: return OpenSegment::up_from({b.base_block, r.offset + 1});
      case Run::omega_bottom: return OpenSegment::up_from({b.base_block, 0});
      case Run::omega_star_cut: return OpenSegment::up_from({b.base_block, r.offset});
      case Run::tail: return OpenSegment::block_tail(b.base_block);
    }
    throw std::logic_error("unreachable");
  }

  Elem to_raw(const OpenSegment& s) const {
    for (std::size_t i = 0; i < raw_.size(); ++i) {
      const auto& b = raw_[i];
      switch (s.form) {
        case OpenSegment::Form::empty:
          if (b.run == Run::empty) return {i, 0};
          break;
        case OpenSegment::Form::block_tail:
          if (b.run == Run::tail && b.base_block == s.block) return {i, 0};
          break;
        case OpenSegment::Form::up_from: {
          if (b.base_block != s.from.block) break;
          const auto r = s.from.offset;
          if (b.run == Run::fin_cut && r <= b.top && b.top - r < raw_word()[i].size) return {i, b.top - r};
          if (b.run == Run::omega_cut && r >= 1) return {i, r - 1};
          if (b.run == Run::omega_bottom && r == 0) return {i, 0};
          if (b.run == Run::omega_star_cut) return {i, r};
          break;
        }
      }
    }
    throw InvalidSegment("segment is not Scott-open in this order");
  }

  friend FuncSpace scott_opens(const OrderWord& w);

  OrderWord base_;
  std::vector<RawBlock> raw_;
  Normalization norm_;
};

/// Walks the base from its last block to its first, so that segments come
/// out in ascending inclusion order.
inline FuncSpace scott_opens(const OrderWord& w) {
  using R = FuncSpace::RawBlock;
  using Run = FuncSpace::Run;
  std::vector<OrderAtom> atoms{OrderAtom::fin(1)};
  std::vector<R> raw{{Run::empty, 0, 0}};

  const auto starts_open = [&](std::size_t j) { return segment_valid(w, OpenSegment::up_from({j, 0})); };

  for (std::size_t j = w.size(); j-- > 0;) {
    const auto& a = w[j];
    switch (a.kind) {
      case AtomKind::fin: {
        const auto count = (a.size - 1) + (starts_open(j) ? 1 : 0);
        if (count > 0) {
          atoms.push_back(OrderAtom::fin(count));
          raw.push_back({Run::fin_cut, j, a.size - 1});
        }
        break;
      }
      case AtomKind::omega:
        atoms.push_back(OrderAtom::omega_star());
        raw.push_back({Run::omega_cut, j, 0});
        if (starts_open(j)) {
          atoms.push_back(OrderAtom::fin(1));
          raw.push_back({Run::omega_bottom, j, 0});
        }
        break;
      case AtomKind::omega_star:
        atoms.push_back(OrderAtom::omega());
        raw.push_back({Run::omega_star_cut, j, 0});
        atoms.push_back(OrderAtom::fin(1));
        raw.push_back({Run::tail, j, 0});
        break;
    }
  }
  auto norm = normalize_with_map(OrderWord(std::move(atoms)));
  return FuncSpace(w, std::move(raw), std::move(norm));
}

// ---------------------------------------------------------------------------
// D versus C(D,2)

struct SelfIsoVerdict {
  bool isomorphic = false;
  OrderWord base;
  OrderWord space;
  std::vector<std::string> reasons;  // empty when isomorphic
};

namespace detail {

inline void compare_feature(std::vector<std::string>& out, const std::string& what, bool in_base, bool in_space) {
  if (in_base == in_space) return;
  out.push_back(what + (in_base ? " in D but not in C(D,2)" : " in C(D,2) but not in D"));
}

}  // namespace detail

inline SelfIsoVerdict self_iso(const OrderWord& w) {
  const auto fs = scott_opens(w);
  SelfIsoVerdict v{iso(w, fs.word()), normalize(w), fs.word(), {}};
  if (v.isomorphic) return v;

  v.reasons.push_back("normal forms differ: " + to_string(v.base) + " vs " + to_string(v.space));
  const auto ed = extremes(w);
  const auto es = extremes(fs.word());
  detail::compare_feature(v.reasons, "a least element exists", ed.bottom.has_value(), es.bottom.has_value());
  detail::compare_feature(v.reasons, "a greatest element exists", ed.top.has_value(), es.top.has_value());
  if (ed.top && es.top) {
    detail::compare_feature(v.reasons, "the top has an immediate predecessor",
                            neighbors(w, *ed.top).predecessor.has_value(),
                            neighbors(fs.word(), *es.top).predecessor.has_value());
  }
  if (ed.bottom && es.bottom) {
    detail::compare_feature(v.reasons, "the bottom has an immediate successor",
                            neighbors(w, *ed.bottom).successor.has_value(),
                            neighbors(fs.word(), *es.bottom).successor.has_value());
  }
  return v;
}

/// The order isomorphism D → C(D,2). Both sides normalize to the same word
/// and such words are rigid, so matching normal-form positions is the only
/// choice.
class CanonicalIso {
 public:
  explicit CanonicalIso(const OrderWord& w)
      : base_norm_(normalize_with_map(w)), space_(scott_opens(w)) {
    if (!iso(w, space_.word())) {
      throw NotIsomorphic("D and C(D,2) are not isomorphic: " + to_string(base_norm_.word()) + " vs " +
                          to_string(space_.word()));
    }
  }

  const FuncSpace& space() const { return space_; }
  const OrderWord& base() const { return base_norm_.source(); }

  OpenSegment operator()(Elem x) const { return space_.segment_at(base_norm_.to_normal(x)); }

  Elem inverse(const OpenSegment& s) const { return base_norm_.from_normal(space_.position_of(s)); }

 private:
  Normalization base_norm_;
  FuncSpace space_;
};

inline CanonicalIso canonical_iso(const NamedCpo& c) { return CanonicalIso(c.word()); }

/// "psi_<label>" when the CPO is its own function space, otherwise a
/// structural name ("empty", "up(<label>)", "tail(<block>)").
inline std::string segment_name(const NamedCpo& c, const OpenSegment& s) {
  if (iso(c.word(), scott_opens(c.word()).word())) {
    return "psi_" + c.label(CanonicalIso(c.word()).inverse(s));
  }
  switch (s.form) {
    case OpenSegment::Form::empty: return "empty";
    case OpenSegment::Form::up_from: return "up(" + c.label(s.from) + ")";
    case OpenSegment::Form::block_tail: return "tail(" + std::to_string(s.block) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Rejected maps D → C(D,2) for words beginning with ω

struct CandidateMapping {
  std::string name;
  bool defined = true;
  bool order_preserving = true;
  std::string failure;  // empty when both hold on the window
};

/// The two natural maps sending the ω labels n to segments: ψ′_n = "the n
/// greatest elements" and ψ″_n = "everything above n". Each is checked on
/// offsets up to `max_offset`.
inline std::vector<CandidateMapping> candidate_mappings(const NamedCpo& c, std::uint64_t max_offset = 20) {
  const auto& w = c.word();
  if (w[0].kind != AtomKind::omega) return {};
  std::vector<CandidateMapping> out;

  CandidateMapping top_n{"psi'", true, true, {}};
  const auto top = extremes(w).top;
  for (std::uint64_t n = 1; n <= max_offset && top_n.defined; ++n) {
    std::optional<Elem> cur = top;
    for (std::uint64_t step = 1; step < n && cur; ++step) cur = neighbors(w, *cur).predecessor;
    if (!cur) {
      top_n.defined = false;
      top_n.failure = "the " + std::to_string(n) + " greatest elements do not exist";
    }
  }
  out.push_back(top_n);

  CandidateMapping above_n{"psi''", true, true, {}};
  const auto image = [&](Elem x) {
    const auto s = OpenSegment::up_from(x);
    return segment_valid(w, s) ? s : OpenSegment::empty();
  };
  const auto elems = window(w, max_offset);
  for (std::size_t i = 0; i + 1 < elems.size() && above_n.order_preserving; ++i) {
    const auto x = elems[i];
    const auto y = elems[i + 1];
    if (compare_segments(w, image(x), image(y)) == Cmp::gt) {
      above_n.order_preserving = false;
      above_n.failure = c.label(x) + " ⊆ " + c.label(y) + " but psi''_" + c.label(y) + " ⊂ psi''_" + c.label(x);
    }
  }
  out.push_back(above_n);
  return out;
}

// ---------------------------------------------------------------------------
// Fixed points

enum class Mu { const0, const1, id };

inline int apply(Mu mu, int bit) {
  switch (mu) {
    case Mu::const0: return 0;
    case Mu::const1: return 1;
    case Mu::id: return bit;
  }
  return bit;
}

inline std::string to_string(Mu mu) {
  switch (mu) {
    case Mu::const0: return "const0";
    case Mu::const1: return "const1";
    case Mu::id: return "id";
  }
  return "?";
}

inline Mu parse_mu(std::string_view s) {
  if (s == "const0") return Mu::const0;
  if (s == "const1") return Mu::const1;
  if (s == "id") return Mu::id;
  throw Error("unknown mu '" + std::string(s) + "' (expected const0, const1 or id)");
}

/// A map 2 → 2 given by its values at 0 and 1 is continuous iff monotone.
inline bool mu_continuous(std::array<int, 2> table) { return table[0] <= table[1]; }

struct FixedPointReport {
  CpoName cpo = CpoName::phi;
  Mu mu = Mu::id;
  OpenSegment g;
  Elem preimage;
  int value = 0;
};

struct FptInapplicable {
  CpoName cpo = CpoName::theta;
  Mu mu = Mu::id;
  std::string reason;
};

using FptResult = std::variant<FixedPointReport, FptInapplicable>;

namespace detail {

/// Offsets beyond 0 and 1 never change segment membership for these words;
/// the diagonal is sampled this far as a consistency check.
inline constexpr std::uint64_t kOffsetProbe = 64;

}  // namespace detail

/// g(x) = μ(φ(x)(x)) where φ is the canonical isomorphism; the fixed point
/// is g(φ⁻¹(g)).
inline FptResult fpt(const NamedCpo& c, Mu mu) {
  const auto& w = c.word();
  std::optional<CanonicalIso> phi;
  try {
    phi.emplace(w);
  } catch (const NotIsomorphic& e) {
    return FptInapplicable{c.name(), mu, e.what()};
  }
  const auto g_at = [&](Elem x) { return apply(mu, eval_segment(w, (*phi)(x), x)); };

  // The first element (in order) where g is 1 determines the segment.
  std::optional<OpenSegment> g;
  for (std::size_t j = 0; j < w.size() && !g; ++j) {
    const auto& a = w[j];
    switch (a.kind) {
      case AtomKind::fin:
        for (std::uint64_t r = 0; r < a.size && !g; ++r) {
          if (g_at({j, r})) g = OpenSegment::up_from({j, r});
        }
        break;
      case AtomKind::omega:
        if (g_at({j, 0})) g = OpenSegment::up_from({j, 0});
        else if (g_at({j, 1})) g = OpenSegment::up_from({j, 1});
        break;
      case AtomKind::omega_star:
        if (g_at({j, 1})) g = OpenSegment::block_tail(j);
        else if (g_at({j, 0})) g = OpenSegment::up_from({j, 0});
        break;
    }
  }
  if (!g) g = OpenSegment::empty();

  for (const auto& x : window(w, detail::kOffsetProbe)) {
    if (!segment_valid(w, *g) || eval_segment(w, *g, x) != g_at(x)) {
      throw std::logic_error("diagonal map is not a Scott-open segment");
    }
  }

  FixedPointReport r{c.name(), mu, *g, phi->inverse(*g), 0};
  r.value = eval_segment(w, r.g, r.preimage);
  if (apply(mu, r.value) != r.value) throw std::logic_error("fixed point check failed");
  return r;
}

}  // namespace cpo
