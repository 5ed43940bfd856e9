// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values are hand-written or come from small
// brute-force oracles below, never from the code under test.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpo/cpo.hpp"

using namespace cpo;

namespace {

using MS = MonotypicString;
using Labels = std::vector<std::uint64_t>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// ---------------------------------------------------------------------------
// Oracles

// Monotone maps from an m-chain into 2, by trying every bit vector.
std::vector<std::vector<int>> brute_monotone(std::uint64_t m) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t bits = 0; bits < (1ULL << m); ++bits) {
    std::vector<int> f;
    for (std::uint64_t i = 0; i < m; ++i) f.push_back(static_cast<int>((bits >> i) & 1U));
    if (std::is_sorted(f.begin(), f.end())) out.push_back(f);
  }
  return out;
}

// Rows of the value tables for C(Φ,2) and C(Λ′,2), from the segment
// descriptions: ψ_n holds the n greatest primed labels, ψ_∞ every primed
// label, ψ_∞′ adds ∞′, ψ_n′ runs from n up.
int table_cell(const std::string& row, const std::string& col) {
  const auto kind = [](const std::string& s) {
    if (s == "inf") return 'i';
    if (s == "inf'") return 'j';
    return s.back() == '\'' ? 'p' : 'n';
  };
  const auto num = [](const std::string& s) { return std::stoi(s); };
  const char r = kind(row), x = kind(col);
  switch (r) {
    case 'n': return x == 'p' && num(col) < num(row);
    case 'i': return x == 'p';
    case 'j': return x == 'p' || x == 'j';
    case 'p': return x != 'n' || num(col) >= num(row);
  }
  return -1;
}

bool table_matches(CpoName name, bool with_inf_prime, std::string& where) {
  const auto c = named_cpo(name);
  const CanonicalIso phi(c.word());
  std::vector<std::string> labels{"0", "1", "2", "3", "4", "5", "inf"};
  if (with_inf_prime) labels.push_back("inf'");
  for (int n = 5; n >= 0; --n) labels.push_back(std::to_string(n) + "'");
  for (const auto& row : labels) {
    const auto s = phi(*c.find_label(row));
    if (segment_name(c, s) != "psi_" + row) {
      where = "row " + row + " named " + segment_name(c, s);
      return false;
    }
    for (const auto& col : labels) {
      if (eval_segment(c.word(), s, *c.find_label(col)) != table_cell(row, col)) {
        where = "psi_" + row + "(" + col + ")";
        return false;
      }
    }
  }
  return true;
}

Labels path_row(Scheme s, std::uint64_t depth, const std::string& label) {
  for (const auto& p : limit_paths(s, depth)) {
    if (p.label_text() == label) return p.entries;
  }
  return {};
}

std::string show(const Labels& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Criteria

Outcome stage_counts() {
  Outcome o;
  // S_n built directly as monotone maps S_{n-1} → 2, counted by brute force.
  std::uint64_t prev = 1;
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto brute = n == 1 ? 1 : brute_monotone(prev).size();
    o.require(brute == n, "brute force |S_" + std::to_string(n) + "| = " + std::to_string(brute));
    o.require(stage(n).elements.size() == n, "stage(" + std::to_string(n) + ") size");
    if (n > 1) o.require(enumerate_monotone(n - 1).size() == n, "enumerate_monotone(" + std::to_string(n - 1) + ")");
    prev = brute;
  }
  return o;
}

Outcome ep_laws() {
  Outcome o;
  for (auto s : {Scheme::standard, Scheme::alternative}) {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const auto pair = ep_pair(s, n);
      const auto tag = to_string(s) + " n=" + std::to_string(n);
      o.require(verify_ep(pair).ok(), "verify_ep " + tag);
      for (std::uint64_t k = 0; k < n; ++k) o.require(pair.p(pair.e(k)) == k, "p∘e " + tag);
      for (std::uint64_t k = 0; k <= n; ++k) o.require(pair.e(pair.p(k)) <= k, "e∘p " + tag);
      o.require(pair.e.monotone() && pair.p.monotone(), "monotone " + tag);
    }
  }
  return o;
}

Outcome path_labels() {
  Outcome o;
  const std::map<std::string, Labels> standard = {
      {"0", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}, {"1", {0, 0, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"2", {0, 0, 1, 1, 2, 2, 2, 2, 2, 2}}, {"inf", {0, 0, 1, 1, 2, 2, 3, 3, 4, 4}},
      {"2'", {0, 0, 1, 1, 2, 3, 4, 5, 6, 7}}, {"1'", {0, 0, 1, 2, 3, 4, 5, 6, 7, 8}},
      {"0'", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}},
  };
  for (const auto& [label, row] : standard) {
    const auto got = path_row(Scheme::standard, 10, label);
    o.require(got == row, "standard " + label + " = " + show(got));
  }
  for (std::uint64_t k = 0; k < 9; ++k) {
    Labels row;
    for (std::uint64_t m = 0; m < 10; ++m) row.push_back(std::min(m, k));
    const auto got = path_row(Scheme::alternative, 10, std::to_string(k));
    o.require(got == row, "alternative " + std::to_string(k) + " = " + show(got));
  }
  const auto inf = path_row(Scheme::alternative, 10, "inf");
  o.require(inf == Labels{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, "alternative inf = " + show(inf));
  return o;
}

Outcome function_spaces() {
  Outcome o;
  std::string where;
  const auto phi = named_cpo(CpoName::phi);
  o.require(iso(scott_opens(phi.word()).word(), phi.word()), "C(Φ,2) ≄ Φ");
  o.require(table_matches(CpoName::phi, false, where), "Φ table at " + where);
  const auto prime = named_cpo(CpoName::lambda_prime);
  o.require(iso(scott_opens(prime.word()).word(), prime.word()), "C(Λ′,2) ≄ Λ′");
  o.require(table_matches(CpoName::lambda_prime, true, where), "Λ′ table at " + where);

  const auto theta = named_cpo(CpoName::theta).word();
  o.require(scott_opens(theta).word() == parse_word("1+ω*"), "C(Θ,2) = " + to_string(scott_opens(theta).word()));
  o.require(!self_iso(theta).isomorphic, "self_iso(Θ)");

  const auto v = self_iso(named_cpo(CpoName::v).word());
  o.require(!v.isomorphic, "self_iso(V)");
  const std::string reason = "the top has an immediate predecessor in C(D,2) but not in D";
  o.require(std::find(v.reasons.begin(), v.reasons.end(), reason) != v.reasons.end(), "V reason missing");
  return o;
}

Outcome fixed_points() {
  Outcome o;
  struct Case {
    CpoName cpo;
    Mu mu;
    const char* g;
    const char* pre;
    int value;
  };
  const Case cases[] = {
      {CpoName::phi, Mu::const0, "psi_0", "0", 0},        {CpoName::lambda, Mu::const0, "psi_0", "0", 0},
      {CpoName::phi, Mu::const1, "psi_0'", "0'", 1},      {CpoName::lambda, Mu::const1, "psi_0'", "0'", 1},
      {CpoName::phi, Mu::id, "psi_inf", "inf", 0},        {CpoName::lambda, Mu::id, "psi_inf", "inf", 0},
      {CpoName::lambda_prime, Mu::id, "psi_inf'", "inf'", 1},
  };
  for (const auto& k : cases) {
    const auto c = named_cpo(k.cpo);
    const auto r = fpt(c, k.mu);
    const auto tag = std::string(key(k.cpo)) + " " + to_string(k.mu);
    const auto* p = std::get_if<FixedPointReport>(&r);
    o.require(p != nullptr, tag + " inapplicable");
    if (!p) continue;
    o.require(segment_name(c, p->g) == k.g, tag + " g = " + segment_name(c, p->g));
    o.require(c.label(p->preimage) == k.pre, tag + " preimage " + c.label(p->preimage));
    o.require(p->value == k.value, tag + " value");
  }
  for (auto mu : {Mu::const0, Mu::const1, Mu::id}) {
    o.require(std::holds_alternative<FptInapplicable>(fpt(named_cpo(CpoName::theta), mu)), "Θ " + to_string(mu));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (std::uint64_t k = 1; k <= 8; ++k) {
    const OrderWord w{OrderAtom::fin(k)};
    const auto fs = scott_opens(w);
    o.require(fs.word() == OrderWord{OrderAtom::fin(k + 1)}, "C(" + std::to_string(k) + ",2) word");
    const auto segs = fs.window(0);
    const auto brute = brute_monotone(k);
    o.require(segs.size() == brute.size(), "size at k=" + std::to_string(k));
    if (segs.size() != brute.size()) continue;
    // brute force lists by bit pattern; compare as sets
    std::set<std::vector<int>> got(brute.begin(), brute.end()), sym;
    for (const auto& s : segs) {
      std::vector<int> f;
      for (const auto& x : window(w, 0)) f.push_back(eval_segment(w, s, x));
      sym.insert(f);
    }
    o.require(got == sym, "segments at k=" + std::to_string(k));
  }
  return o;
}

Outcome transformations() {
  Outcome o;
  std::vector<MS> strings{MS::all_zeros_left(), MS::all_ones_right()};
  for (std::uint64_t k = 0; k <= 100; ++k) {
    strings.push_back(MS::zeros_then_ones(k));
    strings.push_back(MS::ones_after_zeros(k));
  }
  for (const auto& s : strings) {
    o.require(opp(opp(s)) == s, "opp∘opp at " + render(s));
    o.require(opp(s) != s, "opp fixes " + render(s));
  }
  o.require(opp(parse_string("⋯00011")) == parse_string("00111⋯"), "opp(⋯00011)");
  const std::map<Spec, Spec> toggle = {{Spec::I, Spec::III}, {Spec::II, Spec::IV}, {Spec::III, Spec::I}, {Spec::IV, Spec::II}};
  for (const auto& [from, to] : toggle) {
    for (std::uint64_t i = 1; i <= 100; ++i) {
      const auto r = lr(SpecifiedString::make(from, i));
      o.require(r.spec == to && r.index == i, "lr(" + to_string(from) + ", " + std::to_string(i) + ")");
    }
  }
  const SpecifiedString two{Spec::II, 2};
  o.require(realize(two) == parse_string("0111⋯"), "(II, 2) realizes 0111⋯");
  o.require(realize(lr(two)) == parse_string("⋯111"), "lr maps 0111⋯ to ⋯111");
  return o;
}

Outcome adjunction() {
  Outcome o;
  for (auto name : {CpoName::lambda_prime, CpoName::v}) {
    const auto r = check_adjunction(name, 50);
    o.require(r.holds(), std::string(key(name)) + " conditions");
    o.require(r.skipped3 == 0 && r.condition3.checked > 0, std::string(key(name)) + " coverage");
    // ω-extremes are in the checked window
    const auto c = named_cpo(name);
    const auto p = pairing_for(name);
    const auto lower = members(c, p.lower, 50);
    const auto has = [&](const Carrier& x) { return std::find(lower.begin(), lower.end(), x) != lower.end(); };
    if (name == CpoName::lambda_prime) o.require(has(Carrier{MS::all_ones_right()}), "⋯111 not checked");
  }
  const auto bad = check_adjunction(CpoName::lambda, 50);
  o.require(!bad.condition1.pass, "Λ condition 1 passes");
  o.require(bad.condition1.witness.size() == 1 && bad.condition1.witness[0] == Carrier{MS::all_ones_right()},
            "Λ witness");
  return o;
}

Outcome boundaries() {
  Outcome o;
  const auto hat = boundary_report(CpoName::lambda_hat_prime);
  o.require(hat.pair.boundary == PairString{MS::all_zeros_left(), MS::all_ones_right()}, "m value");
  o.require(opp_pair(hat.pair.boundary) == hat.pair.boundary, "m^opp ≠ m");
  o.require(!hat.neighbors.any(), "m has a neighbor");
  o.require(hat.sup_of_lower && hat.inf_of_upper, "m not sup/inf");

  const auto v = boundary_report(CpoName::v);
  const auto vc = named_cpo(CpoName::v);
  o.require(v.pair.boundary == PairString{MS::ones_after_zeros(0), MS::zeros_then_ones(0)}, "m′ value");
  o.require(opp_pair(v.pair.boundary) == v.pair.boundary, "m′^opp ≠ m′");
  o.require(v.neighbors.predecessor && vc.label(*v.neighbors.predecessor) == "-1", "m′ predecessor");
  o.require(v.neighbors.successor && vc.label(*v.neighbors.successor) == "+1", "m′ successor");
  o.require(v.sup_of_lower && v.inf_of_upper, "m′ not sup/inf");
  return o;
}

Outcome iso_matrix() {
  Outcome o;
  const auto w = [](CpoName n) { return named_cpo(n).word(); };
  const std::vector<CpoName> names = {CpoName::phi, CpoName::theta, CpoName::lambda, CpoName::lambda_prime,
                                      CpoName::lambda_hat_prime, CpoName::omega_prime, CpoName::v};
  // Expected classes: {Φ, Λ, Λ̂′}, {Θ, Ω′}, {Λ′}, {V}
  const std::map<CpoName, int> cls = {{CpoName::phi, 0},          {CpoName::lambda, 0},
                                      {CpoName::lambda_hat_prime, 0}, {CpoName::theta, 1},
                                      {CpoName::omega_prime, 1},  {CpoName::lambda_prime, 2},
                                      {CpoName::v, 3}};
  for (auto a : names) {
    for (auto b : names) {
      o.require(iso(w(a), w(b)) == (cls.at(a) == cls.at(b)),
                std::string(key(a)) + " vs " + std::string(key(b)));
    }
  }
  return o;
}

Outcome replication() {
  Outcome o;
  std::map<std::string, std::vector<MS>> pre;
  std::vector<MS> strings{MS::all_zeros_left(), MS::all_ones_right()};
  for (std::uint64_t k = 0; k <= 100; ++k) {
    strings.push_back(MS::zeros_then_ones(k));
    strings.push_back(MS::ones_after_zeros(k));
  }
  for (const auto& s : strings) pre[render(lcr_forward(s).image)].push_back(s);
  const auto m = parse_pair("(⋯000, 111⋯)");
  for (const auto& [img, srcs] : pre) {
    o.require(srcs.size() == (img == render(m) ? 2U : 1U), "preimages of " + img);
  }
  const auto& ms = pre[render(m)];
  o.require(ms.size() == 2 && std::find(ms.begin(), ms.end(), parse_string("⋯000")) != ms.end() &&
                std::find(ms.begin(), ms.end(), parse_string("111⋯")) != ms.end(),
            "preimages of m′");
  o.require(lcr_backward(m, Endpoint::right) == parse_string("⋯000"), "backward R");
  o.require(lcr_backward(m, Endpoint::left) == parse_string("111⋯"), "backward L");

  const auto r = replicate(parse_pair("(000⋯, ⋯111)"));
  o.require(r.intent == MS::all_zeros_left() && r.extent == MS::all_ones_right(), "replicate components");
  o.require(r.intent_label == "inf'" && r.extent_label == "inf", "replicate labels");
  o.require(r.mutual_neighbors, "replicate neighbors");
  return o;
}

Outcome table8() {
  Outcome o;
  struct Row {
    CpoName cpo;
    bool adjunction;
    bool fpt;
    std::optional<std::string> boundary;
    const char* type;
  };
  const Row expected[] = {
      {CpoName::lambda, false, true, std::nullopt, "ω+1+ω*"},
      {CpoName::lambda_prime, true, true, std::nullopt, "ω+1+1+ω*"},
      {CpoName::lambda_hat_prime, true, true, "m", "ω+1+ω*"},
      {CpoName::v, true, false, "m'", "1+ω*+ω+1"},
  };
  const auto p = pipeline();
  o.require(p.table.size() == 4, "row count");
  if (p.table.size() != 4) return o;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& got = p.table[i];
    const auto& want = expected[i];
    const auto tag = std::string(key(want.cpo));
    o.require(got.cpo == want.cpo, tag + " order");
    o.require(got.adjunction == want.adjunction, tag + " adjunction");
    o.require(got.fpt_applicable == want.fpt, tag + " fpt");
    o.require(got.boundary == want.boundary, tag + " boundary");
    o.require(got.order_type == parse_word(want.type), tag + " order type " + to_string(got.order_type));
  }
  o.require(p.table[2].annotation == "≃Λ" && p.table[3].annotation == "≄Λ′", "annotations");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"stage counts", stage_counts},
      {"ep laws", ep_laws},
      {"path labels", path_labels},
      {"function spaces", function_spaces},
      {"fixed points", fixed_points},
      {"oracle equivalence", oracle_equivalence},
      {"transformations", transformations},
      {"adjunction", adjunction},
      {"boundaries", boundaries},
      {"isomorphism matrix", iso_matrix},
      {"replication", replication},
      {"property table", table8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2zu %s", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first);
    if (!o.ok) std::printf(" (%s)", o.detail.c_str());
    std::printf("\n");
    failed += o.ok ? 0 : 1;
  }
  return failed ? 1 : 0;
}
