#pragma once

// Finite stages S_n = C(S_{n-1}, 2), their embedding/projection pairs, and the
// projection-consistent paths whose classes form the inverse limit.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpo/error.hpp"
#include "cpo/order.hpp"

namespace cpo {

/// The k-th element of S_n (k ones, right-aligned) as a string of length n-1.
inline std::string stage_string(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k >= n) throw BadIndex("label out of range for stage");
  return std::string(n - 1 - k, '0') + std::string(k, '1');
}

struct Stage {
  std::uint64_t n = 1;
  std::vector<std::string> elements;  // ascending
};

inline Stage stage(std::uint64_t n) {
  if (n < 1) throw BadIndex("stages start at 1");
  Stage s{n, {}};
  for (std::uint64_t k = 0; k < n; ++k) s.elements.push_back(stage_string(n, k));
  return s;
}

/// All monotone maps from the chain 0 < 1 < ... < m-1 into 2, by brute force
/// over the 2^m maps. Each map is listed by its outputs; the result ascends
/// pointwise.
inline std::vector<std::vector<int>> enumerate_monotone(std::uint64_t m) {
  if (m < 1) throw BadIndex("chain size must be at least 1");
  if (m > 24) throw BadIndex("chain too large for brute-force enumeration");
  std::vector<std::vector<int>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<int> f(m);
    for (std::uint64_t x = 0; x < m; ++x) f[x] = static_cast<int>((bits >> x) & 1U);
    bool monotone = true;
    for (std::uint64_t x = 0; x + 1 < m; ++x) monotone = monotone && f[x] <= f[x + 1];
    if (monotone) out.push_back(std::move(f));
  }
  // pointwise ascending == ascending number of ones for threshold maps
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::count(a.begin(), a.end(), 1) < std::count(b.begin(), b.end(), 1);
  });
  return out;
}

enum class Scheme { standard, alternative };

inline std::string to_string(Scheme s) { return s == Scheme::standard ? "standard" : "alternative"; }

/// A map between stage labels (label = number of 1's).
struct LabelMap {
  std::uint64_t from_stage = 1;
  std::uint64_t to_stage = 1;
  std::vector<std::uint64_t> mapping;

  std::uint64_t operator()(std::uint64_t k) const { return mapping.at(k); }
  bool monotone() const {
    for (std::size_t k = 0; k + 1 < mapping.size(); ++k) {
      if (mapping[k] > mapping[k + 1]) return false;
    }
    return true;
  }
};

struct EpPair {
  Scheme scheme = Scheme::standard;
  std::uint64_t n = 1;
  LabelMap e;  // S_n -> S_{n+1}
  LabelMap p;  // S_{n+1} -> S_n
};

/// Labels at or below this threshold are fixed by the standard pair; above
/// it e skips one label upward and p steps one down.
inline std::uint64_t standard_threshold(std::uint64_t n) { return (n - 1) / 2; }

inline EpPair ep_pair(Scheme scheme, std::uint64_t n) {
  if (n < 1) throw BadIndex("stages start at 1");
  EpPair pair{scheme, n, {n, n + 1, {}}, {n + 1, n, {}}};
  const auto t = standard_threshold(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    pair.e.mapping.push_back(scheme == Scheme::standard ? (k <= t ? k : k + 1) : k);
  }
  for (std::uint64_t k = 0; k <= n; ++k) {
    pair.p.mapping.push_back(scheme == Scheme::standard ? (k <= t ? k : k - 1) : std::min(k, n - 1));
  }
  return pair;
}

struct LawReport {
  bool e_monotone = true;
  bool p_monotone = true;
  bool retraction = true;  // p∘e = id on S_n
  bool deflation = true;   // e∘p ⊆ id on S_{n+1}
  std::optional<std::uint64_t> retraction_witness;
  std::optional<std::uint64_t> deflation_witness;

  bool ok() const { return e_monotone && p_monotone && retraction && deflation; }
};

inline LawReport verify_ep(const EpPair& pair) {
  LawReport r;
  r.e_monotone = pair.e.monotone();
  r.p_monotone = pair.p.monotone();
  for (std::uint64_t k = 0; k < pair.e.mapping.size(); ++k) {
    if (pair.p(pair.e(k)) != k) {
      r.retraction = false;
      r.retraction_witness = k;
      break;
    }
  }
  for (std::uint64_t k = 0; k < pair.p.mapping.size(); ++k) {
    if (pair.e(pair.p(k)) > k) {
      r.deflation = false;
      r.deflation_witness = k;
      break;
    }
  }
  return r;
}

inline LawReport verify_ep(Scheme scheme, std::uint64_t n) { return verify_ep(ep_pair(scheme, n)); }

// ---------------------------------------------------------------------------
// Inverse-limit paths

enum class PathClass { finite_label, primed_label, infinity };

struct LimitPath {
  std::vector<std::uint64_t> entries;  // entries[m-1] lies in S_m
  PathClass cls = PathClass::finite_label;
  std::uint64_t label = 0;  // n for finite_label and primed_label

  std::string label_text() const {
    switch (cls) {
      case PathClass::finite_label: return std::to_string(label);
      case PathClass::primed_label: return std::to_string(label) + "'";
      case PathClass::infinity: return "inf";
    }
    return "?";
  }
};

/// The entry at stage m of the path that keeps growing forever.
inline std::uint64_t diagonal_entry(Scheme scheme, std::uint64_t m) {
  return scheme == Scheme::standard ? standard_threshold(m) : m - 1;
}

/// Every projection-consistent label sequence through stages 1..depth,
/// ascending. A sequence is fixed by its last entry; it is classified by
/// where that entry sits against the diagonal path.
inline std::vector<LimitPath> limit_paths(Scheme scheme, std::uint64_t depth) {
  if (depth < 2) throw BadDepth("path depth must be at least 2");
  std::vector<EpPair> pairs;
  for (std::uint64_t n = 1; n < depth; ++n) pairs.push_back(ep_pair(scheme, n));

  std::vector<LimitPath> out;
  const auto diag = diagonal_entry(scheme, depth);
  for (std::uint64_t last = 0; last < depth; ++last) {
    LimitPath path;
    path.entries.assign(depth, 0);
    path.entries[depth - 1] = last;
    for (std::uint64_t m = depth - 1; m >= 1; --m) {
      path.entries[m - 1] = pairs[m - 1].p(path.entries[m]);
    }
    if (last < diag) {
      path.cls = PathClass::finite_label;
      path.label = last;
    } else if (last == diag) {
      path.cls = PathClass::infinity;
    } else {
      path.cls = PathClass::primed_label;
      path.label = depth - 1 - last;
    }
    out.push_back(std::move(path));
  }
  return out;
}

/// Order type of the inverse limit, read off the path classes: finite labels
/// form an ω, the infinite path a single point, primed labels an ω*.
inline OrderWord limit_cpo(Scheme scheme, std::uint64_t probe_depth = 12) {
  bool finite = false, infinity = false, primed = false;
  for (const auto& p : limit_paths(scheme, probe_depth)) {
    finite = finite || p.cls == PathClass::finite_label;
    infinity = infinity || p.cls == PathClass::infinity;
    primed = primed || p.cls == PathClass::primed_label;
  }
  std::vector<OrderAtom> atoms;
  if (finite) atoms.push_back(OrderAtom::omega());
  if (infinity) atoms.push_back(OrderAtom::fin(1));
  if (primed) atoms.push_back(OrderAtom::omega_star());
  return OrderWord(std::move(atoms));
}

/// Graphviz rendering of the embedding/projection diagram through stage
/// `depth`: "↔" where e and p both fix a label, "e" and "p" on diagonals.
inline std::string ep_diagram_dot(Scheme scheme, std::uint64_t depth) {
  if (depth < 2) throw BadDepth("diagram depth must be at least 2");
  std::ostringstream os;
  const auto node = [](std::uint64_t n, std::uint64_t k) {
    return "s" + std::to_string(n) + "_" + std::to_string(k);
  };
  os << "digraph " << (scheme == Scheme::standard ? "table1" : "table5") << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=plaintext];\n";
  for (std::uint64_t n = 1; n <= depth; ++n) {
    os << "  subgraph stage" << n << " {\n    rank=same;\n";
    for (std::uint64_t k = 0; k < n; ++k) {
      const auto s = stage_string(n, k);
      os << "    " << node(n, k) << " [label=\"" << (s.empty() ? "λ" : s) << "\"];\n";
    }
    os << "  }\n";
  }
  for (std::uint64_t n = 1; n < depth; ++n) {
    const auto pair = ep_pair(scheme, n);
    for (std::uint64_t k = 0; k < n; ++k) {
      if (pair.e(k) == k && pair.p(k) == k) {
        os << "  " << node(n, k) << " -> " << node(n + 1, k) << " [dir=both, label=\"↔\"];\n";
      } else {
        os << "  " << node(n, k) << " -> " << node(n + 1, pair.e(k)) << " [label=\"e\"];\n";
      }
    }
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto target = pair.p(k);
      if (target == k && k < n && pair.e(k) == k) continue;  // drawn as ↔
      os << "  " << node(n + 1, k) << " -> " << node(n, target) << " [label=\"p\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cpo
