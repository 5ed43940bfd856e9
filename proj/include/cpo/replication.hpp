#pragma once

// Type decompositions of the glued CPOs, the comma insertion/removal map
// between Λ′ and V, the copy-and-project step on m, and the chain
// Λ → Λ̂′ → Λ′ → V with its property table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpo/adjunction.hpp"
#include "cpo/error.hpp"
#include "cpo/funcspace.hpp"
#include "cpo/named.hpp"
#include "cpo/order.hpp"
#include "cpo/strings.hpp"

namespace cpo {

// ---------------------------------------------------------------------------
// Decompositions

struct Decomposition {
  enum class Kind { natural, none_natural };

  CpoName cpo;
  std::vector<Spec> parts;
  Kind kind = Kind::natural;
  std::string iso_name;                      // "phi1", "phi2"; empty when none is natural
  std::optional<PairString> conflict;        // element claimed twice
  std::vector<MonotypicString> claimants;    // the strings claiming it
  bool order_preserving = true;              // checked on a window
};

namespace detail {

/// Maps a string into a glued CPO by attaching the fixed other component.
struct HalfMap {
  bool (*domain)(const MonotypicString&);
  PairString (*image)(const MonotypicString&);
};

inline bool in_omega(const MonotypicString& s) {
  return s.orientation() == Orientation::right && !s.ones().is_omega();
}
inline bool in_omega_opp(const MonotypicString& s) {
  return s.orientation() == Orientation::left && !s.zeros().is_omega();
}
inline bool in_omega_prime(const MonotypicString& s) { return s.orientation() == Orientation::right; }
inline bool in_omega_prime_opp(const MonotypicString& s) { return s.orientation() == Orientation::left; }

inline PairString after_all_zeros(const MonotypicString& x) { return {MonotypicString::all_zeros_left(), x}; }
inline PairString before_all_ones(const MonotypicString& y) { return {y, MonotypicString::all_ones_right()}; }
inline PairString before_ones_left(const MonotypicString& x) { return {x, MonotypicString::zeros_then_ones(0)}; }
inline PairString after_zeros_right(const MonotypicString& y) { return {MonotypicString::ones_after_zeros(0), y}; }

/// Strings of Λ′ with offsets up to `max_offset`, ascending.
inline std::vector<MonotypicString> string_window(std::uint64_t max_offset) {
  const auto c = named_cpo(CpoName::lambda_prime);
  std::vector<MonotypicString> out;
  for (const auto& x : window(c.word(), max_offset)) out.push_back(std::get<MonotypicString>(c.value(x)));
  return out;
}

/// Whether `f` sends the ascending `source` to an ascending sequence of `target`.
template <class F>
bool ascending_images(const NamedCpo& target, const std::vector<MonotypicString>& source, F f) {
  std::optional<Elem> prev;
  for (const auto& s : source) {
    const auto e = target.find(f(s));
    if (!e) return false;
    if (prev && compare(target.word(), *prev, *e) != Cmp::lt) return false;
    prev = e;
  }
  return true;
}

}  // namespace detail

/// Λ̂′: Ω and Ω^opp pair off with the two halves and m is left over, so
/// it may be typed by either of its components. V: the two half pairings
/// both claim m′.
inline std::vector<Decomposition> decompositions(CpoName which, std::uint64_t max_offset = 20) {
  const auto c = named_cpo(which);
  const auto strings = detail::string_window(max_offset);

  if (which == CpoName::lambda_hat_prime) {
    const detail::HalfMap lower{detail::in_omega, detail::after_all_zeros};
    const detail::HalfMap upper{detail::in_omega_opp, detail::before_all_ones};
    const auto m = build_pair_cpo(which).boundary;

    // Every element other than m is hit exactly once.
    for (const auto& x : window(c.word(), max_offset)) {
      const auto v = std::get<PairString>(c.value(x));
      if (v == m) continue;
      int hits = 0;
      for (const auto& s : strings) {
        if (lower.domain(s) && lower.image(s) == v) ++hits;
        if (upper.domain(s) && upper.image(s) == v) ++hits;
      }
      if (hits != 1) throw std::logic_error("half pairings do not cover the glued order");
    }

    std::vector<Decomposition> out;
    for (const auto& [name, free] : {std::pair{"phi1", m.left}, std::pair{"phi2", m.right}}) {
      std::vector<MonotypicString> source;
      for (const auto& s : strings) {
        if (lower.domain(s) || upper.domain(s) || s == free) source.push_back(s);
      }
      const auto f = [&](const MonotypicString& s) -> PairString {
        if (lower.domain(s)) return lower.image(s);
        if (upper.domain(s)) return upper.image(s);
        return m;
      };
      Decomposition d{which, {}, Decomposition::Kind::natural, name, std::nullopt, {}, true};
      d.parts = {classify(MonotypicString::ones_after_zeros(1)).family, classify(free).family,
                 classify(MonotypicString::zeros_then_ones(1)).family};
      d.order_preserving = detail::ascending_images(c, source, f);
      out.push_back(std::move(d));
    }
    return out;
  }

  if (which == CpoName::v) {
    const detail::HalfMap lower{detail::in_omega_prime, detail::before_ones_left};
    const detail::HalfMap upper{detail::in_omega_prime_opp, detail::after_zeros_right};
    Decomposition d{which, {}, Decomposition::Kind::none_natural, "", std::nullopt, {}, false};
    for (const auto& x : strings) {
      if (!lower.domain(x)) continue;
      for (const auto& y : strings) {
        if (upper.domain(y) && lower.image(x) == upper.image(y)) {
          d.conflict = lower.image(x);
          d.claimants = {x, y};
        }
      }
    }
    if (!d.conflict) throw std::logic_error("expected the half pairings of V to collide");

    // Types along V in order: the free component of each element.
    for (const auto& x : window(c.word(), 1)) {
      const auto v = std::get<PairString>(c.value(x));
      const auto& free = halves::xi(v) ? v.right : v.left;
      const auto t = classify(free).family;
      if (d.parts.empty() || d.parts.back() != t) d.parts.push_back(t);
    }
    return {d};
  }
  throw UnknownCpo(std::string(key(which)) + " (expected lambda_hat_prime or v)");
}

// ---------------------------------------------------------------------------
// Λ′ ↔ V

enum class Endpoint { left, right };

inline Endpoint parse_endpoint(std::string_view s) {
  if (s == "L" || s == "l" || s == "left") return Endpoint::left;
  if (s == "R" || s == "r" || s == "right") return Endpoint::right;
  throw Error("unknown endpoint '" + std::string(s) + "' (expected L or R)");
}

struct LcrImage {
  MonotypicString source;
  PairString image;
  Elem elem;
  std::string label;
  bool collision = false;  // the image is m′, which has two preimages
};

/// Inserts the comma: x ∈ Ω′ ↦ (x, 111⋯), y ∈ Ω′(opp) ↦ (⋯000, y).
inline LcrImage lcr_forward(const MonotypicString& x) {
  static const NamedCpo v = named_cpo(CpoName::v);
  const auto image = x.orientation() == Orientation::right ? detail::before_ones_left(x) : detail::after_zeros_right(x);
  const auto e = v.find(image);
  if (!e) throw std::logic_error("comma insertion left V");
  const auto m = build_pair_cpo(CpoName::v).boundary;
  return {x, image, *e, v.label(*e), image == m};
}

/// Removes the comma. Only m′ depends on the endpoint: standing at the right
/// gives ⋯000 ∈ Ω′, at the left 111⋯ ∈ Ω′(opp).
inline MonotypicString lcr_backward(const PairString& p, Endpoint end) {
  static const NamedCpo v = named_cpo(CpoName::v);
  if (!v.find(p)) throw BadElement("'" + render(p) + "' is not an element of V");
  if (p == build_pair_cpo(CpoName::v).boundary) {
    return end == Endpoint::right ? p.left : p.right;
  }
  return p.right == MonotypicString::zeros_then_ones(0) ? p.left : p.right;
}

// ---------------------------------------------------------------------------
// Copy and project

struct ReplicationResult {
  PairString source;
  MonotypicString intent;  // left component
  MonotypicString extent;  // right component
  std::string intent_label;
  std::string extent_label;
  bool mutual_neighbors = false;
};

inline ReplicationResult replicate(const PairString& m) {
  if (!(m == build_pair_cpo(CpoName::lambda_hat_prime).boundary)) {
    throw NotBoundary("'" + render(m) + "' is not the boundary element of Λ̂′");
  }
  const auto target = named_cpo(CpoName::lambda_prime);
  const auto i = target.find(m.left);
  const auto e = target.find(m.right);
  if (!i || !e) throw std::logic_error("projections left Λ′");
  const auto ni = neighbors(target.word(), *i);
  const auto ne = neighbors(target.word(), *e);
  const bool mutual = (ni.predecessor == e && ne.successor == i) || (ni.successor == e && ne.predecessor == i);
  return {m, m.left, m.right, target.label(*i), target.label(*e), mutual};
}

// ---------------------------------------------------------------------------
// The chain and its property table

struct PipelineEdge {
  CpoName from;
  CpoName to;
  std::string name;
  bool verified = false;
  std::string detail;
};

struct Table8Row {
  CpoName cpo;
  std::string annotation;  // relation to the previous CPO in the chain, if shown
  bool adjunction = false;
  bool fpt_applicable = false;
  std::optional<std::string> boundary;  // label of the element shared by both halves
  OrderWord order_type;
};

struct PipelineReport {
  std::vector<PipelineEdge> edges;
  std::vector<Table8Row> table;
  std::vector<MonotypicString> collision;  // preimages of m′
};

/// The element lying in both halves, named as the boundary when it is one.
inline std::optional<std::string> shared_element(CpoName name, std::uint64_t max_offset) {
  const auto c = named_cpo(name);
  const auto p = pairing_for(name);
  for (const auto& x : window(c.word(), max_offset)) {
    const auto v = c.value(x);
    if (!p.lower.contains(v) || !p.upper.contains(v)) continue;
    if (name == CpoName::lambda_hat_prime || name == CpoName::v) {
      const auto b = build_pair_cpo(name);
      if (b.boundary_elem == x) return b.boundary_label;
    }
    return c.label(x);
  }
  return std::nullopt;
}

inline Table8Row table8_row(CpoName name, std::uint64_t max_offset) {
  const auto c = named_cpo(name);
  return {name,
          {},
          check_adjunction(name, max_offset).holds(),
          self_iso(c.word()).isomorphic,
          shared_element(name, max_offset),
          c.word()};
}

inline PipelineReport pipeline(std::uint64_t max_offset = 20) {
  PipelineReport r;
  const auto lambda = named_cpo(CpoName::lambda);
  const auto hat = named_cpo(CpoName::lambda_hat_prime);
  const auto prime = named_cpo(CpoName::lambda_prime);
  const auto v = named_cpo(CpoName::v);

  // Dualization: Ω ∋ x ↦ (000⋯, x), ⋯111 ↦ m, Ω^opp ∋ y ↦ (y, ⋯111).
  {
    std::vector<MonotypicString> source;
    for (const auto& x : window(lambda.word(), max_offset)) source.push_back(std::get<MonotypicString>(lambda.value(x)));
    const auto m = build_pair_cpo(CpoName::lambda_hat_prime).boundary;
    const auto f = [&](const MonotypicString& s) -> PairString {
      if (detail::in_omega(s)) return detail::after_all_zeros(s);
      if (detail::in_omega_opp(s)) return detail::before_all_ones(s);
      return m;
    };
    const bool same_type = iso(lambda.word(), hat.word());
    const bool ordered = detail::ascending_images(hat, source, f);
    const bool onto = source.size() == window(hat.word(), max_offset).size();
    r.edges.push_back({CpoName::lambda, CpoName::lambda_hat_prime, "Dualization", same_type && ordered && onto,
                       to_string(lambda.word()) + (same_type ? " ≃ " : " ≄ ") + to_string(hat.word())});
  }

  // Replication: m splits into two neighbors of Λ′.
  {
    const auto boundary = build_pair_cpo(CpoName::lambda_hat_prime);
    const auto rep = replicate(boundary.boundary);
    // The one-element block holding m becomes two one-element blocks.
    std::vector<OrderAtom> split;
    for (std::size_t j = 0; j < hat.word().size(); ++j) {
      split.push_back(hat.word()[j]);
      if (j == boundary.boundary_elem.block) split.push_back(OrderAtom::fin(1));
    }
    const bool grows = OrderWord(split) == prime.word();
    r.edges.push_back({CpoName::lambda_hat_prime, CpoName::lambda_prime, "Replication",
                       rep.mutual_neighbors && grows,
                       "m ↦ " + render(rep.intent) + " (" + rep.intent_label + "), " + render(rep.extent) + " (" +
                           rep.extent_label + "); " + to_string(hat.word()) + " → " + to_string(prime.word())});
  }

  // LCR: round trip through V, with exactly one collision.
  {
    bool round_trip = true;
    const auto m_prime = build_pair_cpo(CpoName::v).boundary;
    for (const auto& s : detail::string_window(max_offset)) {
      const auto img = lcr_forward(s);
      if (img.collision) r.collision.push_back(s);
      const auto end = s.orientation() == Orientation::right ? Endpoint::right : Endpoint::left;
      round_trip = round_trip && lcr_backward(img.image, end) == s;
    }
    const bool one_collision = r.collision.size() == 2;
    r.edges.push_back({CpoName::lambda_prime, CpoName::v, "LCR", round_trip && one_collision,
                       std::to_string(r.collision.size()) + " strings map to " + render(m_prime)});
  }

  r.table.push_back(table8_row(CpoName::lambda, max_offset));
  r.table.push_back(table8_row(CpoName::lambda_prime, max_offset));
  r.table.push_back(table8_row(CpoName::lambda_hat_prime, max_offset));
  r.table.push_back(table8_row(CpoName::v, max_offset));
  r.table[2].annotation = std::string(iso(hat.word(), lambda.word()) ? "≃" : "≄") + std::string(symbol(CpoName::lambda));
  r.table[3].annotation = std::string(iso(v.word(), prime.word()) ? "≃" : "≄") + std::string(symbol(CpoName::lambda_prime));
  return r;
}

}  // namespace cpo
