#pragma once

// Countable linear orders written as finite sums of finite chains, ω and ω*.
//
// An OrderWord is the order-type expression itself; an Elem addresses one
// element of the denoted order by (block, offset).  Offsets are unbounded,
// so every operation here is exact on the infinite order.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpo/error.hpp"

namespace cpo {

enum class AtomKind { fin, omega, omega_star };

struct OrderAtom {
  AtomKind kind = AtomKind::fin;
  std::uint64_t size = 1;  // number of elements; meaningful for fin only

  static OrderAtom fin(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("FIN atom needs at least one element");
    return {AtomKind::fin, k};
  }
  static constexpr OrderAtom omega() { return {AtomKind::omega, 0}; }
  static constexpr OrderAtom omega_star() { return {AtomKind::omega_star, 0}; }

  constexpr bool is_finite() const { return kind == AtomKind::fin; }
  constexpr bool has_least() const { return kind != AtomKind::omega_star; }
  constexpr bool has_greatest() const { return kind != AtomKind::omega; }

  bool operator==(const OrderAtom& o) const {
    return kind == o.kind && (kind != AtomKind::fin || size == o.size);
  }
};

class OrderWord {
 public:
  OrderWord(std::vector<OrderAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("order word must be nonempty");
  }
  OrderWord(std::initializer_list<OrderAtom> atoms) : OrderWord(std::vector<OrderAtom>(atoms)) {}

  std::span<const OrderAtom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const OrderAtom& operator[](std::size_t i) const { return atoms_[i]; }
  const OrderAtom& back() const { return atoms_.back(); }

  /// No FIN before ω, no FIN after ω*, no two adjacent FINs.
  bool is_normal() const {
    for (std::size_t i = 0; i + 1 < atoms_.size(); ++i) {
      const auto& a = atoms_[i];
      const auto& b = atoms_[i + 1];
      if (a.is_finite() && (b.is_finite() || b.kind == AtomKind::omega)) return false;
      if (a.kind == AtomKind::omega_star && b.is_finite()) return false;
    }
    return true;
  }

  bool operator==(const OrderWord& o) const = default;

 private:
  std::vector<OrderAtom> atoms_;
};

struct Elem {
  std::size_t block = 0;
  std::uint64_t offset = 0;

  bool operator==(const Elem&) const = default;
};

enum class Cmp { lt, eq, gt };

inline bool valid(const OrderWord& w, Elem x) {
  if (x.block >= w.size()) return false;
  const auto& a = w[x.block];
  return !a.is_finite() || x.offset < a.size;
}

inline void require_valid(const OrderWord& w, Elem x) {
  if (!valid(w, x)) {
    throw BadElement("element (" + std::to_string(x.block) + ", " + std::to_string(x.offset) +
                     ") does not exist in this order");
  }
}

/// Blocks compare by index. Inside FIN and ω a larger offset is greater;
/// inside ω* offsets count down from the block's greatest element.
inline Cmp compare(const OrderWord& w, Elem a, Elem b) {
  require_valid(w, a);
  require_valid(w, b);
  if (a.block != b.block) return a.block < b.block ? Cmp::lt : Cmp::gt;
  if (a.offset == b.offset) return Cmp::eq;
  const bool larger = a.offset > b.offset;
  const bool reversed = w[a.block].kind == AtomKind::omega_star;
  return (larger != reversed) ? Cmp::gt : Cmp::lt;
}

inline bool leq(const OrderWord& w, Elem a, Elem b) { return compare(w, a, b) != Cmp::gt; }

namespace detail {

inline std::optional<Elem> least_of_block(const OrderWord& w, std::size_t j) {
  if (!w[j].has_least()) return std::nullopt;
  return Elem{j, 0};
}

inline std::optional<Elem> greatest_of_block(const OrderWord& w, std::size_t j) {
  const auto& a = w[j];
  switch (a.kind) {
    case AtomKind::fin: return Elem{j, a.size - 1};
    case AtomKind::omega_star: return Elem{j, 0};
    case AtomKind::omega: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

struct Neighbors {
  std::optional<Elem> predecessor;
  std::optional<Elem> successor;

  bool any() const { return predecessor.has_value() || successor.has_value(); }
};

inline Neighbors neighbors(const OrderWord& w, Elem x) {
  require_valid(w, x);
  const auto& a = w[x.block];
  Neighbors n;

  // Step inside the block when possible; at a block edge cross the seam.
  const auto prev_block = [&]() -> std::optional<Elem> {
    if (x.block == 0) return std::nullopt;
    return detail::greatest_of_block(w, x.block - 1);
  };
  const auto next_block = [&]() -> std::optional<Elem> {
    if (x.block + 1 >= w.size()) return std::nullopt;
    return detail::least_of_block(w, x.block + 1);
  };

  switch (a.kind) {
    case AtomKind::fin:
      n.predecessor = x.offset > 0 ? std::optional<Elem>(Elem{x.block, x.offset - 1}) : prev_block();
      n.successor = x.offset + 1 < a.size ? std::optional<Elem>(Elem{x.block, x.offset + 1}) : next_block();
      break;
    case AtomKind::omega:
      n.predecessor = x.offset > 0 ? std::optional<Elem>(Elem{x.block, x.offset - 1}) : prev_block();
      n.successor = Elem{x.block, x.offset + 1};
      break;
    case AtomKind::omega_star:
      n.predecessor = Elem{x.block, x.offset + 1};
      n.successor = x.offset > 0 ? std::optional<Elem>(Elem{x.block, x.offset - 1}) : next_block();
      break;
  }
  return n;
}

struct Extremes {
  std::optional<Elem> bottom;
  std::optional<Elem> top;
};

inline Extremes extremes(const OrderWord& w) {
  return {detail::least_of_block(w, 0), detail::greatest_of_block(w, w.size() - 1)};
}

/// Ascending list of every element whose offset is at most `max_offset`.
inline std::vector<Elem> window(const OrderWord& w, std::uint64_t max_offset) {
  std::vector<Elem> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto& a = w[j];
    switch (a.kind) {
      case AtomKind::fin:
        for (std::uint64_t k = 0; k < a.size; ++k) out.push_back({j, k});
        break;
      case AtomKind::omega:
        for (std::uint64_t k = 0; k <= max_offset; ++k) out.push_back({j, k});
        break;
      case AtomKind::omega_star:
        for (std::uint64_t k = max_offset + 1; k-- > 0;) out.push_back({j, k});
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

/// Result of rewriting a word to normal form, with the element bijection
/// between the input order and the normalized one.
class Normalization {
 public:
  const OrderWord& word() const { return word_; }
  const OrderWord& source() const { return source_; }

  Elem to_normal(Elem x) const {
    require_valid(source_, x);
    const auto& p = placement_[x.block];
    return {p.target, p.negate ? p.add - x.offset : p.add + x.offset};
  }

  Elem from_normal(Elem y) const {
    require_valid(word_, y);
    for (std::size_t i = 0; i < source_.size(); ++i) {
      const auto& p = placement_[i];
      if (p.target != y.block) continue;
      std::uint64_t off = 0;
      if (p.negate) {
        if (y.offset > p.add) continue;
        off = p.add - y.offset;
      } else {
        if (y.offset < p.add) continue;
        off = y.offset - p.add;
      }
      if (valid(source_, Elem{i, off})) return {i, off};
    }
    throw std::logic_error("normalization map is not onto");
  }

 private:
  // Offset in the target block is add + offset, or add - offset when negated.
  struct Placement {
    std::size_t target = 0;
    std::uint64_t add = 0;
    bool negate = false;
  };

  Normalization(OrderWord source, OrderWord word, std::vector<Placement> placement)
      : source_(std::move(source)), word_(std::move(word)), placement_(std::move(placement)) {}

  friend Normalization normalize_with_map(const OrderWord& w);

  OrderWord source_;
  OrderWord word_;
  std::vector<Placement> placement_;
};

/// Applies FIN·FIN → FIN, FIN·ω → ω and ω*·FIN → ω* until none applies.
inline Normalization normalize_with_map(const OrderWord& w) {
  using P = Normalization::Placement;
  std::vector<OrderAtom> out;
  std::vector<std::vector<std::size_t>> members;  // source blocks in each output block
  std::vector<P> place(w.size());

  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[i]);
    members.push_back({i});
    place[i] = {out.size() - 1, 0, false};

    while (out.size() >= 2) {
      auto& a = out[out.size() - 2];
      auto& b = out.back();
      const std::size_t ia = out.size() - 2;
      if (a.is_finite() && b.is_finite()) {
        for (auto s : members.back()) place[s].add += a.size;
        a.size += b.size;
      } else if (a.is_finite() && b.kind == AtomKind::omega) {
        for (auto s : members.back()) place[s].add += a.size;
        a = OrderAtom::omega();
      } else if (a.kind == AtomKind::omega_star && b.is_finite()) {
        // The finite tail becomes the top of the ω*; old offsets shift down by its size.
        for (auto s : members[ia]) place[s].add += b.size;
        for (auto s : members.back()) place[s] = {ia, b.size - 1 - place[s].add, true};
      } else {
        break;
      }
      for (auto s : members.back()) {
        place[s].target = ia;
        members[ia].push_back(s);
      }
      out.pop_back();
      members.pop_back();
    }
  }
  return Normalization(w, OrderWord(std::move(out)), std::move(place));
}

inline OrderWord normalize(const OrderWord& w) { return normalize_with_map(w).word(); }

// ---------------------------------------------------------------------------
// Isomorphism

/// Order type of a class of elements at finite distance from one another.
enum class ClassType { finite, omega, omega_star, zeta };

struct CondensationClass {
  ClassType type = ClassType::finite;
  std::uint64_t size = 0;  // element count for finite classes

  bool operator==(const CondensationClass&) const = default;
};

/// Invariant signature computed without the rewrite system: adjacent blocks
/// are merged whenever the left one has a greatest and the right one a least
/// element, and each merged class is typed by whether it has a min and a max.
inline std::vector<CondensationClass> signature(const OrderWord& w) {
  std::vector<CondensationClass> out;
  std::size_t j = 0;
  while (j < w.size()) {
    std::size_t end = j;
    while (end + 1 < w.size() && w[end].has_greatest() && w[end + 1].has_least()) ++end;
    bool all_finite = true;
    std::uint64_t count = 0;
    for (std::size_t k = j; k <= end; ++k) {
      all_finite = all_finite && w[k].is_finite();
      if (w[k].is_finite()) count += w[k].size;
    }
    const bool has_min = w[j].has_least();
    const bool has_max = w[end].has_greatest();
    if (all_finite) {
      out.push_back({ClassType::finite, count});
    } else if (has_min && !has_max) {
      out.push_back({ClassType::omega, 0});
    } else if (!has_min && has_max) {
      out.push_back({ClassType::omega_star, 0});
    } else if (!has_min && !has_max) {
      out.push_back({ClassType::zeta, 0});
    } else {
      throw std::logic_error("class with both extremes must be finite");
    }
    j = end + 1;
  }
  return out;
}

/// Decides isomorphism by normal-form equality and cross-checks the verdict
/// against the condensation signature.
inline bool iso(const OrderWord& a, const OrderWord& b) {
  const bool by_normal_form = normalize(a) == normalize(b);
  const bool by_signature = signature(a) == signature(b);
  if (by_normal_form != by_signature) {
    throw std::logic_error("normal form and invariant signature disagree");
  }
  return by_normal_form;
}

// ---------------------------------------------------------------------------
// Text form: "ω+1+ω*", "1+ω*+ω+1"

inline std::string to_string(const OrderAtom& a) {
  switch (a.kind) {
    case AtomKind::fin: return std::to_string(a.size);
    case AtomKind::omega: return "ω";
    case AtomKind::omega_star: return "ω*";
  }
  return "?";
}

inline std::string to_string(const OrderWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '+';
    s += to_string(w[i]);
  }
  return s;
}

/// Parses "ω+1+ω*"; also accepts "w", "omega" and an optional "*" or "^*".
inline OrderWord parse_word(std::string_view text) {
  std::vector<OrderAtom> atoms;
  std::size_t pos = 0;
  const auto bad = [&](const std::string& why) {
    return std::invalid_argument("malformed order word '" + std::string(text) + "': " + why);
  };
  const auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) throw bad("expected an atom");
    const std::string_view rest = text.substr(pos);
    if (rest[0] >= '0' && rest[0] <= '9') {
      std::uint64_t k = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        k = k * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        ++pos;
      }
      if (k == 0) throw bad("finite atoms must be positive");
      atoms.push_back(OrderAtom::fin(k));
    } else {
      std::size_t len = 0;
      if (rest.starts_with("ω")) len = std::string_view("ω").size();
      else if (rest.starts_with("omega")) len = 5;
      else if (rest.starts_with("w")) len = 1;
      else throw bad("unknown atom");
      pos += len;
      bool star = false;
      if (text.substr(pos).starts_with("^*")) { star = true; pos += 2; }
      else if (text.substr(pos).starts_with("*")) { star = true; pos += 1; }
      atoms.push_back(star ? OrderAtom::omega_star() : OrderAtom::omega());
    }
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw bad("expected '+'");
    ++pos;
  }
  return OrderWord(std::move(atoms));
}

}  // namespace cpo
