#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cpo/adjunction.hpp"
#include "cpo/named.hpp"

using namespace cpo;

namespace {

using MS = MonotypicString;

// Ω′ = {⋯0 1^v : v <= n} ∪ {⋯111}; Ω′(opp) = {0^u 1⋯ : u <= n} ∪ {000⋯};
// Ω^opp drops 000⋯ from Ω′(opp).
std::vector<MS> omega_prime(std::uint64_t n) {
  std::vector<MS> out{MS::all_ones_right()};
  for (std::uint64_t v = 0; v <= n; ++v) out.push_back(MS::ones_after_zeros(v));
  return out;
}
std::vector<MS> omega_prime_opp(std::uint64_t n) {
  std::vector<MS> out{MS::all_zeros_left()};
  for (std::uint64_t u = 0; u <= n; ++u) out.push_back(MS::zeros_then_ones(u));
  return out;
}

bool contains(const std::vector<MS>& xs, const MS& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

bool subset(const MS& a, const MS& b) { return compare_strings(a, b) != Cmp::gt; }

Elem at(const NamedCpo& c, const char* label) {
  const auto e = c.find_label(label);
  EXPECT_TRUE(e.has_value()) << label;
  return e.value_or(Elem{});
}

}  // namespace

TEST(PairCpo, Build) {
  const auto hat = build_pair_cpo(CpoName::lambda_hat_prime);
  EXPECT_EQ(hat.boundary, (PairString{MS::all_zeros_left(), MS::all_ones_right()}));
  EXPECT_EQ(hat.boundary_label, "m");
  EXPECT_EQ(to_string(named_cpo(CpoName::lambda_hat_prime).word()), "ω+1+ω*");

  const auto v = build_pair_cpo(CpoName::v);
  EXPECT_EQ(v.boundary, (PairString{MS::ones_after_zeros(0), MS::zeros_then_ones(0)}));
  const auto vc = named_cpo(CpoName::v);
  EXPECT_EQ(v.boundary_elem, at(vc, "0"));
  EXPECT_EQ(std::get<PairString>(vc.value(at(vc, "+1"))), parse_pair("(⋯001, 111⋯)"));
  EXPECT_EQ(to_string(vc.word()), "1+ω*+ω+1");

  EXPECT_THROW(build_pair_cpo(CpoName::phi), UnknownCpo);
  EXPECT_THROW(pairing_for(CpoName::theta), UnknownCpo);
}

TEST(PairCpo, HalvesCoverAndMeetOnce) {
  for (auto name : {CpoName::lambda_hat_prime, CpoName::v}) {
    const auto c = named_cpo(name);
    const auto p = build_pair_cpo(name);
    for (const auto& x : window(c.word(), 60)) {
      const auto v = c.value(x);
      const bool lo = p.lower.contains(v), up = p.upper.contains(v);
      EXPECT_TRUE(lo || up) << render(v);
      EXPECT_EQ(lo && up, x == p.boundary_elem) << render(v);
      // every lower element sits below every upper one
      if (lo && !up) { EXPECT_EQ(compare(c.word(), x, p.boundary_elem), Cmp::lt); }
      if (up && !lo) { EXPECT_EQ(compare(c.word(), x, p.boundary_elem), Cmp::gt); }
    }
  }
}

TEST(Adjunction, Examples) {
  const auto prime = check_adjunction(CpoName::lambda_prime, 50);
  EXPECT_TRUE(prime.holds());
  EXPECT_EQ(prime.skipped3, 0U);
  EXPECT_EQ(prime.condition3.checked, 52U * 52U);

  const auto lambda = check_adjunction(CpoName::lambda, 50);
  EXPECT_FALSE(lambda.condition1.pass);
  ASSERT_EQ(lambda.condition1.witness.size(), 1U);
  EXPECT_EQ(render(lambda.condition1.witness[0]), "⋯111");
  EXPECT_FALSE(lambda.holds());

  EXPECT_TRUE(check_adjunction(CpoName::v, 50).holds());
  EXPECT_TRUE(check_adjunction(CpoName::lambda_hat_prime, 50).holds());
  EXPECT_THROW(check_adjunction(CpoName::v, 0), BadIndex);
}

TEST(Adjunction, DirectStringOracle) {
  for (std::uint64_t n : {1U, 7U, 50U}) {
    const auto a = omega_prime(n);
    const auto b = omega_prime_opp(n);
    for (const auto& x : a) EXPECT_TRUE(contains(b, opp(x)));
    for (const auto& y : b) EXPECT_TRUE(contains(a, opp(y)));
    for (const auto& x : a) {
      for (const auto& y : b) {
        // x ⊆ y^opp  ⇔  x^opp ⊇ y, in both directions
        EXPECT_EQ(subset(x, opp(y)), subset(y, opp(x)));
      }
    }
    EXPECT_TRUE(check_adjunction(CpoName::lambda_prime, n).holds());

    // Ω^opp lacks 000⋯, the image of ⋯111.
    std::vector<MS> omega_opp(b.begin() + 1, b.end());
    EXPECT_FALSE(contains(omega_opp, opp(MS::all_ones_right())));
  }
}

TEST(Adjunction, ConditionThreeBothWays) {
  for (auto name : {CpoName::lambda_prime, CpoName::lambda_hat_prime, CpoName::v}) {
    const auto c = named_cpo(name);
    const auto p = pairing_for(name);
    const auto as = members(c, p.lower, 30);
    const auto bs = members(c, p.upper, 30);
    for (const auto& x : as) {
      for (const auto& y : bs) {
        const auto ex = locate(c, x), ey = locate(c, y), exo = locate(c, opp(x)), eyo = locate(c, opp(y));
        ASSERT_TRUE(ex && ey && exo && eyo);
        const bool forward = leq(c.word(), *ex, *eyo);
        const bool backward = leq(c.word(), *ey, *exo);
        EXPECT_EQ(forward, backward) << key(name) << " " << render(x) << " " << render(y);
      }
    }
  }
}

TEST(Boundary, Reports) {
  const auto hat = boundary_report(CpoName::lambda_hat_prime);
  EXPECT_TRUE(hat.self_opp);
  EXPECT_FALSE(hat.neighbors.predecessor);
  EXPECT_FALSE(hat.neighbors.successor);
  EXPECT_TRUE(hat.in_lower && hat.in_upper);

  const auto v = boundary_report(CpoName::v);
  const auto vc = named_cpo(CpoName::v);
  EXPECT_TRUE(v.self_opp);
  ASSERT_TRUE(v.neighbors.predecessor && v.neighbors.successor);
  EXPECT_EQ(vc.label(*v.neighbors.predecessor), "-1");
  EXPECT_EQ(vc.label(*v.neighbors.successor), "+1");
  EXPECT_TRUE(v.in_lower && v.in_upper);
}

TEST(Boundary, SupOfLowerInfOfUpper) {
  for (auto name : {CpoName::lambda_hat_prime, CpoName::v}) {
    for (std::uint64_t n : {1U, 10U, 50U, 100U}) {
      const auto r = boundary_report(name, n);
      EXPECT_TRUE(r.sup_of_lower) << key(name) << " " << n;
      EXPECT_TRUE(r.inf_of_upper) << key(name) << " " << n;
    }
  }
}

TEST(Boundary, OppReversesOrderAcrossHalves) {
  for (auto name : {CpoName::lambda_hat_prime, CpoName::v}) {
    const auto c = named_cpo(name);
    const auto p = build_pair_cpo(name);
    const auto lower = members(c, p.lower, 100);
    for (const auto& x : lower) {
      ASSERT_TRUE(p.upper.contains(opp(x))) << render(x);
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      for (std::size_t j = i; j < lower.size(); j += 7) {
        const auto ex = *locate(c, lower[i]), ey = *locate(c, lower[j]);
        ASSERT_TRUE(leq(c.word(), ex, ey));
        const auto ox = *locate(c, opp(lower[i])), oy = *locate(c, opp(lower[j]));
        EXPECT_TRUE(leq(c.word(), oy, ox)) << render(lower[i]) << " " << render(lower[j]);
      }
    }
  }
}

TEST(IsoMatrix, GluedOrders) {
  const auto w = [](CpoName n) { return named_cpo(n).word(); };
  EXPECT_TRUE(iso(w(CpoName::lambda), w(CpoName::phi)));
  EXPECT_TRUE(iso(w(CpoName::phi), w(CpoName::lambda_hat_prime)));
  EXPECT_TRUE(iso(w(CpoName::lambda_hat_prime), w(CpoName::lambda)));
  EXPECT_TRUE(iso(w(CpoName::omega_prime), w(CpoName::theta)));
  for (auto other : {CpoName::phi, CpoName::theta, CpoName::lambda, CpoName::lambda_hat_prime}) {
    EXPECT_FALSE(iso(w(CpoName::lambda_prime), w(other))) << key(other);
  }
  for (auto other : {CpoName::phi, CpoName::theta, CpoName::lambda, CpoName::lambda_prime, CpoName::lambda_hat_prime}) {
    EXPECT_FALSE(iso(w(CpoName::v), w(other))) << key(other);
  }
}

TEST(ChainDot, BoxesElementsWithoutNeighbors) {
  const auto hat = chain_dot(named_cpo(CpoName::lambda_hat_prime), 2);
  EXPECT_NE(hat.find("[label=\"(000⋯, ⋯111)\", shape=box]"), std::string::npos);
  EXPECT_NE(hat.find("style=dotted"), std::string::npos);

  const auto v = chain_dot(named_cpo(CpoName::v), 2);
  EXPECT_NE(v.find("[label=\"(⋯000, 111⋯)\"];"), std::string::npos);
  EXPECT_NE(v.find("[label=\"(⋯000, 000⋯)\", shape=box]"), std::string::npos);
}
