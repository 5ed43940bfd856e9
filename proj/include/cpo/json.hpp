#pragma once

// JSON encodings of the library's values and reports (nlohmann::ordered_json,
// so keys keep the order they are written in).

#include <nlohmann/json.hpp>

#include "cpo/adjunction.hpp"
#include "cpo/funcspace.hpp"
#include "cpo/named.hpp"
#include "cpo/order.hpp"
#include "cpo/render.hpp"
#include "cpo/replication.hpp"
#include "cpo/stages.hpp"
#include "cpo/strings.hpp"

namespace cpo::json {

using Json = nlohmann::ordered_json;

inline Json count(const Count& c) { return c.is_omega() ? Json("omega") : Json(c.value()); }

inline Count parse_count(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "omega") return Count::omega();
  if (j.is_number_unsigned()) return Count::finite(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Count::finite(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  throw InvalidString("count must be a nonnegative integer or \"omega\"");
}

inline Json string(const MonotypicString& s) {
  return Json{{"text", render(s)},
              {"orientation", s.orientation() == Orientation::left ? "L" : "R"},
              {"zeros", count(s.zeros())},
              {"ones", count(s.ones())}};
}

/// Accepts {"orientation": "L"|"R", "zeros": n|"omega", "ones": n|"omega"};
/// a "text" member, if present, is ignored.
inline MonotypicString parse_string(const Json& j) {
  if (!j.is_object() || !j.contains("orientation") || !j.contains("zeros") || !j.contains("ones")) {
    throw InvalidString("string object needs orientation, zeros and ones");
  }
  const auto o = j.at("orientation").get<std::string>();
  if (o != "L" && o != "R") throw InvalidString("orientation must be L or R");
  return MonotypicString::make(o == "L" ? Orientation::left : Orientation::right, parse_count(j.at("zeros")),
                               parse_count(j.at("ones")));
}

inline Json pair(const PairString& p) {
  return Json{{"text", render(p)}, {"left", string(p.left)}, {"right", string(p.right)}};
}

inline Json specified(const SpecifiedString& s) { return Json{{"spec", to_string(s.spec)}, {"index", s.index}}; }

inline Json carrier(const Carrier& c) {
  if (const auto* s = std::get_if<MonotypicString>(&c)) return string(*s);
  if (const auto* p = std::get_if<PairString>(&c)) return pair(*p);
  return nullptr;
}

inline Json elem(const Elem& e) { return Json{{"block", e.block}, {"offset", e.offset}}; }

inline Json label_or_null(const NamedCpo& c, const std::optional<Elem>& e) {
  return e ? Json(c.label(*e)) : Json(nullptr);
}

inline Json segment(const NamedCpo& c, const OpenSegment& s) {
  Json j{{"name", segment_name(c, s)}};
  switch (s.form) {
    case OpenSegment::Form::empty: j["form"] = "EMPTY"; break;
    case OpenSegment::Form::up_from:
      j["form"] = "UP_FROM";
      j["from"] = c.label(s.from);
      break;
    case OpenSegment::Form::block_tail:
      j["form"] = "BLOCK_TAIL";
      j["block"] = s.block;
      break;
  }
  return j;
}

inline Json law_report(Scheme scheme, std::uint64_t n, const LawReport& r) {
  const auto opt = [](const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"scheme", to_string(scheme)},
              {"n", n},
              {"e_monotone", r.e_monotone},
              {"p_monotone", r.p_monotone},
              {"retraction", r.retraction},
              {"deflation", r.deflation},
              {"retraction_witness", opt(r.retraction_witness)},
              {"deflation_witness", opt(r.deflation_witness)},
              {"ok", r.ok()}};
}

inline std::string path_class(PathClass c) {
  switch (c) {
    case PathClass::finite_label: return "finite";
    case PathClass::primed_label: return "primed";
    case PathClass::infinity: return "infinity";
  }
  return "?";
}

inline Json condition(const ConditionResult& c) {
  Json w = Json::array();
  for (const auto& x : c.witness) w.push_back(render(x));
  return Json{{"pass", c.pass}, {"checked", c.checked}, {"witness", w}};
}

inline Json adjunction(const AdjunctionReport& r) {
  return Json{{"cpo", key(r.pairing.ambient)},
              {"lower", r.pairing.lower.symbol},
              {"upper", r.pairing.upper.symbol},
              {"window", r.window},
              {"condition1", condition(r.condition1)},
              {"condition2", condition(r.condition2)},
              {"condition3", condition(r.condition3)},
              {"skipped3", r.skipped3},
              {"holds", r.holds()}};
}

inline Json boundary(const BoundaryReport& r) {
  const auto c = named_cpo(r.pair.name);
  return Json{{"cpo", key(r.pair.name)},
              {"boundary", pair(r.pair.boundary)},
              {"label", r.pair.boundary_label},
              {"self_opp", r.self_opp},
              {"predecessor", label_or_null(c, r.neighbors.predecessor)},
              {"successor", label_or_null(c, r.neighbors.successor)},
              {"in_lower", r.in_lower},
              {"in_upper", r.in_upper},
              {"sup_of_lower", r.sup_of_lower},
              {"inf_of_upper", r.inf_of_upper}};
}

inline Json pair_cpo(const PairCpo& p) {
  return Json{{"cpo", key(p.name)},
              {"word", to_string(named_cpo(p.name).word())},
              {"lower", p.lower.symbol},
              {"upper", p.upper.symbol},
              {"glue", p.glue},
              {"boundary", pair(p.boundary)},
              {"label", p.boundary_label}};
}

inline Json decomposition(const Decomposition& d) {
  Json parts = Json::array();
  for (auto s : d.parts) parts.push_back(to_string(s));
  Json claimants = Json::array();
  for (const auto& s : d.claimants) claimants.push_back(render(s));
  return Json{{"cpo", key(d.cpo)},
              {"parts", parts},
              {"kind", d.kind == Decomposition::Kind::natural ? "NATURAL" : "NONE_NATURAL"},
              {"iso", d.iso_name.empty() ? Json(nullptr) : Json(d.iso_name)},
              {"conflict", d.conflict ? Json(render(*d.conflict)) : Json(nullptr)},
              {"claimants", claimants},
              {"order_preserving", d.order_preserving}};
}

inline Json table8_row(const Table8Row& r) {
  return Json{{"cpo", key(r.cpo)},
              {"symbol", symbol(r.cpo)},
              {"adjunction", r.adjunction},
              {"fpt_applicable", r.fpt_applicable},
              {"boundary", r.boundary ? Json(*r.boundary) : Json(nullptr)},
              {"order_type", to_string(r.order_type)}};
}

inline Json pipeline(const PipelineReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    edges.push_back(Json{{"from", key(e.from)}, {"to", key(e.to)}, {"name", e.name}, {"verified", e.verified},
                         {"detail", e.detail}});
  }
  Json table = Json::array();
  for (const auto& row : r.table) table.push_back(table8_row(row));
  Json collision = Json::array();
  for (const auto& s : r.collision) collision.push_back(render(s));
  return Json{{"edges", edges}, {"table8", table}, {"collision", collision}};
}

inline Json grid(const NamedCpo& c, const Grid& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rows.size(); ++i) rows.push_back(Json{{"name", g.rows[i]}, {"values", g.cells[i]}});
  return Json{{"cpo", key(c.name())}, {"columns", g.columns}, {"rows", rows}};
}

}  // namespace cpo::json
