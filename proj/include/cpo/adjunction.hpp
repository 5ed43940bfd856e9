#pragma once

// Halves of the glued CPOs, the three opp-correspondence conditions between
// them, and the element where the halves meet.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpo/error.hpp"
#include "cpo/named.hpp"
#include "cpo/order.hpp"
#include "cpo/strings.hpp"

namespace cpo {

/// A half of a glued CPO, given by a membership test on element values.
struct Half {
  std::string symbol;
  bool (*contains)(const Carrier&) = nullptr;
};

namespace halves {

inline const MonotypicString* str(const Carrier& c) { return std::get_if<MonotypicString>(&c); }
inline const PairString* pair(const Carrier& c) { return std::get_if<PairString>(&c); }

inline bool right(const Carrier& c) { return str(c) && str(c)->orientation() == Orientation::right; }
inline bool left(const Carrier& c) { return str(c) && str(c)->orientation() == Orientation::left; }
inline bool left_finite_zeros(const Carrier& c) { return left(c) && !str(c)->zeros().is_omega(); }

inline bool hat_lower(const Carrier& c) {
  const auto* p = pair(c);
  return p && p->left == MonotypicString::all_zeros_left() && p->right.orientation() == Orientation::right;
}
inline bool hat_upper(const Carrier& c) {
  const auto* p = pair(c);
  return p && p->right == MonotypicString::all_ones_right() && p->left.orientation() == Orientation::left;
}
inline bool xi(const Carrier& c) {
  const auto* p = pair(c);
  return p && p->left == MonotypicString::ones_after_zeros(0) && p->right.orientation() == Orientation::left;
}
inline bool xi_opp(const Carrier& c) {
  const auto* p = pair(c);
  return p && p->right == MonotypicString::zeros_then_ones(0) && p->left.orientation() == Orientation::right;
}

}  // namespace halves

inline const Half kOmegaPrime{"Ω′", halves::right};
inline const Half kOmegaPrimeOpp{"Ω′(opp)", halves::left};
inline const Half kOmegaOpp{"Ω^opp", halves::left_finite_zeros};
inline const Half kHatLower{"Ω̂′", halves::hat_lower};
inline const Half kHatUpper{"Ω̂′(opp)", halves::hat_upper};
inline const Half kXi{"Ξ", halves::xi};
inline const Half kXiOpp{"Ξ^opp", halves::xi_opp};

/// Two halves inside an ambient CPO.
struct Pairing {
  CpoName ambient;
  Half lower;
  Half upper;
};

/// Λ′ pairs Ω′ with Ω′(opp); Λ pairs Ω′ with Ω^opp; Λ̂′ and V pair their
/// own halves.
inline Pairing pairing_for(CpoName ambient) {
  switch (ambient) {
    case CpoName::lambda_prime: return {ambient, kOmegaPrime, kOmegaPrimeOpp};
    case CpoName::lambda: return {ambient, kOmegaPrime, kOmegaOpp};
    case CpoName::lambda_hat_prime: return {ambient, kHatLower, kHatUpper};
    case CpoName::v: return {ambient, kXi, kXiOpp};
    default: break;
  }
  throw UnknownCpo(std::string(key(ambient)) + " (expected lambda_prime, lambda, lambda_hat_prime or v)");
}

inline Carrier opp(const Carrier& c) {
  if (const auto* s = std::get_if<MonotypicString>(&c)) return opp(*s);
  if (const auto* p = std::get_if<PairString>(&c)) return opp_pair(*p);
  return c;
}

inline std::optional<Elem> locate(const NamedCpo& c, const Carrier& v) {
  if (const auto* s = std::get_if<MonotypicString>(&v)) return c.find(*s);
  if (const auto* p = std::get_if<PairString>(&v)) return c.find(*p);
  return std::nullopt;
}

/// Elements of the ambient CPO with offsets up to `max_offset` that lie in
/// `h`, ascending. Every one-element block is included, so the ω-count
/// strings are always covered.
inline std::vector<Carrier> members(const NamedCpo& c, const Half& h, std::uint64_t max_offset) {
  std::vector<Carrier> out;
  for (const auto& x : window(c.word(), max_offset)) {
    auto v = c.value(x);
    if (h.contains(v)) out.push_back(std::move(v));
  }
  return out;
}

struct ConditionResult {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<Carrier> witness;  // one element for (1)/(2), (x, y) for (3)
};

struct AdjunctionReport {
  Pairing pairing;
  std::uint64_t window = 0;
  ConditionResult condition1;  // x ∈ A ⇒ x^opp ∈ B
  ConditionResult condition2;  // y ∈ B ⇒ y^opp ∈ A
  ConditionResult condition3;  // x ⊆ y^opp ⇔ x^opp ⊇ y
  std::size_t skipped3 = 0;    // pairs where an opp image lies outside the ambient CPO

  bool holds() const { return condition1.pass && condition2.pass && condition3.pass; }
};

inline AdjunctionReport check_adjunction(CpoName ambient, std::uint64_t window_size) {
  if (window_size < 1) throw BadIndex("window must be at least 1");
  const auto pairing = pairing_for(ambient);
  const auto c = named_cpo(ambient);
  AdjunctionReport r{pairing, window_size, {}, {}, {}, 0};
  const auto as = members(c, pairing.lower, window_size);
  const auto bs = members(c, pairing.upper, window_size);

  const auto closure = [](const std::vector<Carrier>& from, const Half& to, ConditionResult& out) {
    for (const auto& x : from) {
      ++out.checked;
      if (!to.contains(opp(x))) {
        out.pass = false;
        out.witness = {x};
        return;
      }
    }
  };
  closure(as, pairing.upper, r.condition1);
  closure(bs, pairing.lower, r.condition2);

  for (const auto& x : as) {
    for (const auto& y : bs) {
      const auto ex = locate(c, x);
      const auto ey = locate(c, y);
      const auto exo = locate(c, opp(x));
      const auto eyo = locate(c, opp(y));
      if (!ex || !ey || !exo || !eyo) {
        ++r.skipped3;
        continue;
      }
      ++r.condition3.checked;
      const bool lhs = leq(c.word(), *ex, *eyo);
      const bool rhs = leq(c.word(), *ey, *exo);
      if (lhs != rhs && r.condition3.pass) {
        r.condition3.pass = false;
        r.condition3.witness = {x, y};
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Glued pair CPOs

struct PairCpo {
  CpoName name;
  Half lower;
  Half upper;
  std::string glue;
  PairString boundary;
  Elem boundary_elem;
  std::string boundary_label;
};

inline PairCpo build_pair_cpo(CpoName which) {
  const auto zl = MonotypicString::all_zeros_left();
  const auto or_ = MonotypicString::all_ones_right();
  const auto zr = MonotypicString::ones_after_zeros(0);
  const auto ol = MonotypicString::zeros_then_ones(0);
  const auto finish = [which](Half lower, Half upper, std::string glue, PairString b, std::string label) {
    const auto e = named_cpo(which).find(b);
    return PairCpo{which, std::move(lower), std::move(upper), std::move(glue), b, *e, std::move(label)};
  };
  switch (which) {
    case CpoName::lambda_hat_prime:
      return finish(kHatLower, kHatUpper, "(a, ⋯111) ⊆ (000⋯, b) with a = 000⋯, b = ⋯111", {zl, or_}, "m");
    case CpoName::v:
      return finish(kXi, kXiOpp, "(a, ⋯111) ⊆ (⋯000, b) with a = ⋯000, b = 111⋯", {zr, ol}, "m'");
    default:
      break;
  }
  throw UnknownCpo(std::string(key(which)) + " (expected lambda_hat_prime or v)");
}

struct BoundaryReport {
  PairCpo pair;
  bool self_opp = false;
  Neighbors neighbors;
  bool in_lower = false;
  bool in_upper = false;
  bool sup_of_lower = false;  // greatest among lower-half elements in the window
  bool inf_of_upper = false;  // least among upper-half elements in the window
};

inline BoundaryReport boundary_report(CpoName which, std::uint64_t window_size = 100) {
  const auto p = build_pair_cpo(which);
  const auto c = named_cpo(which);
  const Carrier b = p.boundary;
  BoundaryReport r{p, opp_pair(p.boundary) == p.boundary, neighbors(c.word(), p.boundary_elem),
                   p.lower.contains(b), p.upper.contains(b), true, true};
  for (const auto& x : window(c.word(), window_size)) {
    const auto v = c.value(x);
    if (p.lower.contains(v) && compare(c.word(), x, p.boundary_elem) == Cmp::gt) r.sup_of_lower = false;
    if (p.upper.contains(v) && compare(c.word(), x, p.boundary_elem) == Cmp::lt) r.inf_of_upper = false;
  }
  r.sup_of_lower = r.sup_of_lower && r.in_lower;
  r.inf_of_upper = r.inf_of_upper && r.in_upper;
  return r;
}

/// A chain drawing of a named CPO's window: consecutive elements joined, a
/// dotted edge across each infinite gap, elements without immediate
/// neighbors boxed.
inline std::string chain_dot(const NamedCpo& c, std::uint64_t max_offset) {
  std::ostringstream os;
  os << "digraph " << c.key() << " {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  const auto elems = window(c.word(), max_offset);
  const auto id = [](std::size_t i) { return "e" + std::to_string(i); };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& x = elems[i];
    auto text = render(c.value(x));
    if (text.empty()) text = c.label(x);
    os << "  " << id(i) << " [label=\"" << text << "\"";
    if (!neighbors(c.word(), x).any()) os << ", shape=box";
    os << "];\n";
  }
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
    const auto n = neighbors(c.word(), elems[i]);
    const bool adjacent = n.successor && *n.successor == elems[i + 1];
    os << "  " << id(i) << " -> " << id(i + 1) << (adjacent ? "" : " [style=dotted]") << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cpo
