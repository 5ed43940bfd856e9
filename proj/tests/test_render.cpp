#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "cpo/json.hpp"
#include "cpo/render.hpp"

using namespace cpo;

namespace {

std::string pad(const std::string& s, std::size_t spaces) { return s + std::string(spaces, ' '); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  EXPECT_TRUE(cur.empty()) << "missing final newline";
  return out;
}

}  // namespace

TEST(DisplayWidth, Examples) {
  EXPECT_EQ(display_width(""), 0U);
  EXPECT_EQ(display_width("abc"), 3U);
  EXPECT_EQ(display_width("⋯001"), 4U);
  EXPECT_EQ(display_width("Λ′"), 2U);
  EXPECT_EQ(display_width("Λ̂′"), 2U);  // combining circumflex takes no column
  EXPECT_EQ(display_width("ω+1+ω*"), 6U);
  EXPECT_EQ(display_width("𝔸x"), 2U);
}

TEST(Columns, AlignsByDisplayWidth) {
  const auto t = columns({{"a", "bb", "c"}, {"Λ̂′x", "d", "e"}, {"f"}});
  EXPECT_EQ(t, "a    bb  c\nΛ̂′x  d   e\nf\n");
  EXPECT_EQ(columns({}), "");
}

TEST(PrettyLabel, Examples) {
  EXPECT_EQ(pretty_label("inf'"), "∞′");
  EXPECT_EQ(pretty_label("2'"), "2′");
  EXPECT_EQ(pretty_label("-inf"), "−∞");
  EXPECT_EQ(pretty_label("+3"), "+3");
  EXPECT_EQ(pretty_label("m'"), "m′");
  EXPECT_EQ(pretty_label("7"), "7");
}

TEST(Table8Text, Exact) {
  const std::string expected = pad("CPO", 6) + pad("Adjunction", 2) + pad("FPT", 13) + pad("Boundary", 2) +
                               "Order type\n" +
                               pad("Λ", 8) + pad("No", 10) + pad("Applicable", 6) + pad("N/A", 7) + "ω+1+ω*\n" +
                               pad("Λ′", 7) + pad("Yes", 9) + pad("Applicable", 6) + pad("N/A", 7) + "ω+1+1+ω*\n" +
                               pad("Λ̂′ (≃Λ)", 2) + pad("Yes", 9) + pad("Applicable", 6) + pad("m", 9) + "ω+1+ω*\n" +
                               pad("V (≄Λ′)", 2) + pad("Yes", 9) + pad("Not applicable", 2) + pad("m′", 8) +
                               "1+ω*+ω+1\n";
  EXPECT_EQ(table8_text(pipeline()), expected);
}

TEST(Grid, TextLayout) {
  Grid g{{"0", "inf'"}, {"psi_0", "psi_inf"}, {{0, 1}, {1, 1}}};
  EXPECT_EQ(grid_text(g), "psi\\x    0  ∞′\npsi_0    0  1\npsi_inf  1  1\n");
}

TEST(Grid, ShapeFollowsIsomorphism) {
  for (auto name : {CpoName::phi, CpoName::lambda, CpoName::lambda_prime}) {
    const auto c = named_cpo(name);
    const auto g = value_grid(c, 3);
    EXPECT_EQ(g.rows.size(), g.columns.size()) << key(name);
    ASSERT_EQ(g.cells.size(), g.rows.size());
    for (const auto& r : g.cells) EXPECT_EQ(r.size(), g.columns.size());
    // rows ascend by inclusion, so each column is monotone downward
    for (std::size_t j = 0; j < g.columns.size(); ++j) {
      for (std::size_t i = 0; i + 1 < g.cells.size(); ++i) EXPECT_LE(g.cells[i][j], g.cells[i + 1][j]);
    }
    const auto ls = lines(grid_text(g));
    EXPECT_EQ(ls.size(), g.rows.size() + 1);
  }
}

TEST(Grid, NonIsomorphicUsesSegments) {
  const auto c = named_cpo(CpoName::v);
  const auto g = value_grid(c, 2);
  EXPECT_EQ(g.rows.size(), scott_opens(c.word()).window(2).size());
  EXPECT_NE(g.rows.size(), g.columns.size());
}

TEST(Json, StringRoundTrip) {
  for (const char* text : {"⋯111", "000⋯", "⋯000", "111⋯", "⋯0011", "0001⋯"}) {
    const auto s = parse_string(text);
    const auto j = json::string(s);
    EXPECT_EQ(json::parse_string(j), s) << text;
    EXPECT_EQ(json::parse_string(nlohmann::ordered_json::parse(j.dump())), s) << text;
  }
  const auto j = json::string(parse_string("⋯011"));
  EXPECT_EQ(j.dump(), R"({"text":"⋯0011","orientation":"R","zeros":"omega","ones":2})");
}

TEST(Json, RejectsBadStrings) {
  using J = nlohmann::ordered_json;
  EXPECT_THROW(json::parse_string(J::parse(R"({"orientation":"L","zeros":1,"ones":1})")), InvalidString);
  EXPECT_THROW(json::parse_string(J::parse(R"({"orientation":"X","zeros":"omega","ones":0})")), InvalidString);
  EXPECT_THROW(json::parse_string(J::parse(R"({"orientation":"L","zeros":"omega"})")), InvalidString);
  EXPECT_THROW(json::parse_string(J::parse(R"({"orientation":"R","zeros":"omega","ones":-1})")), InvalidString);
  EXPECT_THROW(json::parse_count(J("infinity")), InvalidString);
  EXPECT_TRUE(json::parse_count(J("omega")).is_omega());
  EXPECT_EQ(json::parse_count(J(4)).value(), 4U);
}

TEST(Json, PairAndElem) {
  const auto j = json::pair(parse_pair("(⋯000, 111⋯)"));
  EXPECT_EQ(j.at("text"), "(⋯000, 111⋯)");
  EXPECT_EQ(json::parse_string(j.at("left")), parse_string("⋯000"));
  EXPECT_EQ(json::parse_string(j.at("right")), parse_string("111⋯"));
  EXPECT_EQ(json::elem({2, 5}).dump(), R"({"block":2,"offset":5})");
}
