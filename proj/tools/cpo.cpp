// cpo: command-line access to the order, function-space, string and
// replication machinery. Exit status 0 on success (including negative
// verdicts), 2 on usage errors and malformed literals.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpo/cpo.hpp"
#include "cpo/json.hpp"

namespace {

using cpo::json::Json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string cpo;
  std::string a, b;
  std::string word;
  std::string x, y;
  std::string mu = "id";
  std::string scheme = "standard";
  std::string endpoint = "R";
  std::string spec = "I", spec2 = "I";
  std::uint64_t n = 1, m = 1, i = 1, i2 = 1, j = 1;
  std::uint64_t depth = 12;
  std::uint64_t window = 20;
  std::uint64_t table = 1;
};

void emit(const Options& o, const std::string& text, const Json& j) {
  if (o.format == "json") {
    std::cout << j.dump(-1, ' ', false) << "\n";
  } else if (o.format == "text") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    throw Usage("--format " + o.format + " is not available for this command");
  }
}

cpo::Scheme scheme_of(const Options& o) {
  return o.scheme == "alternative" ? cpo::Scheme::alternative : cpo::Scheme::standard;
}

/// A named CPO key or an order-type expression such as "ω+1+ω*".
cpo::OrderWord word_of(const std::string& text) {
  try {
    return cpo::named_cpo(text).word();
  } catch (const cpo::UnknownCpo&) {
  }
  try {
    return cpo::parse_word(text);
  } catch (const std::exception&) {
    throw Usage("'" + text + "' is neither a CPO name nor an order-type word");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string label_or_none(const cpo::NamedCpo& c, const std::optional<cpo::Elem>& e) {
  return e ? c.label(*e) : "none";
}

// ---------------------------------------------------------------------------
// Stages

void run_stage(const Options& o) {
  if (o.n < 1) throw cpo::BadIndex("--n must be at least 1");
  const auto s = cpo::stage(o.n);
  std::vector<std::string> shown;
  for (const auto& e : s.elements) shown.push_back(e.empty() ? "λ" : e);
  emit(o, join(shown, " "), Json{{"n", o.n}, {"elements", s.elements}});
}

void run_funcs(const Options& o) {
  const auto fs = cpo::enumerate_monotone(o.m);
  std::vector<std::string> shown;
  for (const auto& f : fs) {
    std::string s;
    for (int b : f) s += static_cast<char>('0' + b);
    shown.push_back(s);
  }
  emit(o, join(shown, " "), Json{{"m", o.m}, {"count", fs.size()}, {"functions", fs}});
}

void run_ep(const Options& o) {
  const auto p = cpo::ep_pair(scheme_of(o), o.n);
  const auto show = [](const cpo::LabelMap& f) {
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < f.mapping.size(); ++k) parts.push_back(std::to_string(k) + "→" + std::to_string(f.mapping[k]));
    return join(parts, " ");
  };
  emit(o, "e: " + show(p.e) + "\np: " + show(p.p),
       Json{{"scheme", cpo::to_string(p.scheme)}, {"n", p.n}, {"e", p.e.mapping}, {"p", p.p.mapping}});
}

void run_verify_ep(const Options& o) {
  const auto r = cpo::verify_ep(scheme_of(o), o.n);
  std::ostringstream t;
  t << "e monotone: " << yes_no(r.e_monotone) << "\n"
    << "p monotone: " << yes_no(r.p_monotone) << "\n"
    << "p∘e = id: " << yes_no(r.retraction)
    << (r.retraction_witness ? " (fails at " + std::to_string(*r.retraction_witness) + ")" : "") << "\n"
    << "e∘p ⊆ id: " << yes_no(r.deflation)
    << (r.deflation_witness ? " (fails at " + std::to_string(*r.deflation_witness) + ")" : "");
  emit(o, t.str(), cpo::json::law_report(scheme_of(o), o.n, r));
}

void run_paths(const Options& o) {
  const auto paths = cpo::limit_paths(scheme_of(o), o.depth);
  std::ostringstream t;
  Json list = Json::array();
  for (const auto& p : paths) {
    std::vector<std::string> e;
    for (auto v : p.entries) e.push_back(std::to_string(v));
    t << join(e, ",") << " ↔ " << cpo::pretty_label(p.label_text()) << "\n";
    list.push_back(Json{{"entries", p.entries}, {"class", cpo::json::path_class(p.cls)}, {"label", p.label_text()}});
  }
  emit(o, t.str(), Json{{"scheme", cpo::to_string(scheme_of(o))}, {"depth", o.depth}, {"paths", list}});
}

void run_limit(const Options& o) {
  const auto w = cpo::limit_cpo(scheme_of(o));
  emit(o, cpo::to_string(w), Json{{"scheme", cpo::to_string(scheme_of(o))}, {"word", cpo::to_string(w)}});
}

void run_diagram(const Options& o) {
  if (!o.cpo.empty()) {
    std::cout << cpo::chain_dot(cpo::named_cpo(o.cpo), o.window);
    return;
  }
  if (o.table != 1 && o.table != 5) throw Usage("--table must be 1 or 5");
  std::cout << cpo::ep_diagram_dot(o.table == 1 ? cpo::Scheme::standard : cpo::Scheme::alternative, o.depth);
}

// ---------------------------------------------------------------------------
// Orders

void run_iso(const Options& o) {
  const auto a = word_of(o.a);
  const auto b = word_of(o.b);
  const bool same = cpo::iso(a, b);
  emit(o, std::string(same ? "isomorphic: " : "not isomorphic: ") + cpo::to_string(a) + " vs " + cpo::to_string(b),
       Json{{"a", cpo::to_string(a)}, {"b", cpo::to_string(b)}, {"isomorphic", same}});
}

void run_normalize(const Options& o) {
  const auto w = word_of(o.word);
  const auto nf = cpo::normalize(w);
  emit(o, cpo::to_string(nf), Json{{"input", cpo::to_string(w)}, {"normal", cpo::to_string(nf)}});
}

void run_compare(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  const auto r = cpo::compare(c.word(), c.parse(o.x), c.parse(o.y));
  const std::string s = r == cpo::Cmp::lt ? "LT" : r == cpo::Cmp::eq ? "EQ" : "GT";
  emit(o, s, Json{{"cpo", o.cpo}, {"x", c.label(c.parse(o.x))}, {"y", c.label(c.parse(o.y))}, {"result", s}});
}

void run_neighbors(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  const auto x = c.parse(o.x);
  const auto n = cpo::neighbors(c.word(), x);
  emit(o, "predecessor: " + label_or_none(c, n.predecessor) + "\nsuccessor: " + label_or_none(c, n.successor),
       Json{{"cpo", o.cpo},
            {"x", c.label(x)},
            {"predecessor", cpo::json::label_or_null(c, n.predecessor)},
            {"successor", cpo::json::label_or_null(c, n.successor)}});
}

void run_extremes(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  const auto e = cpo::extremes(c.word());
  emit(o, "bottom: " + label_or_none(c, e.bottom) + "\ntop: " + label_or_none(c, e.top),
       Json{{"cpo", o.cpo}, {"bottom", cpo::json::label_or_null(c, e.bottom)}, {"top", cpo::json::label_or_null(c, e.top)}});
}

void run_named(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  std::vector<std::vector<std::string>> rows;
  Json elems = Json::array();
  for (const auto& x : cpo::window(c.word(), o.window)) {
    const auto v = c.value(x);
    rows.push_back({cpo::pretty_label(c.label(x)), cpo::render(v)});
    elems.push_back(Json{{"label", c.label(x)}, {"value", cpo::json::carrier(v)}, {"position", cpo::json::elem(x)}});
  }
  emit(o, std::string(c.symbol()) + ": " + cpo::to_string(c.word()) + "\n" + cpo::columns(rows),
       Json{{"cpo", o.cpo}, {"symbol", c.symbol()}, {"word", cpo::to_string(c.word())}, {"elements", elems}});
}

// ---------------------------------------------------------------------------
// Function spaces

void run_funcspace(const Options& o) {
  const auto w = word_of(o.cpo.empty() ? o.word : o.cpo);
  const auto fs = cpo::scott_opens(w);
  const bool same = cpo::iso(w, fs.word());
  emit(o, "C(D,2): " + cpo::to_string(fs.word()) + (same ? " (≅ D)" : " (≇ D)"),
       Json{{"base", cpo::to_string(w)}, {"space", cpo::to_string(fs.word())}, {"isomorphic", same}});
}

void run_self_iso(const Options& o) {
  const auto w = word_of(o.cpo.empty() ? o.word : o.cpo);
  const auto v = cpo::self_iso(w);
  std::string text = (v.isomorphic ? "isomorphic: " : "not isomorphic: ") + cpo::to_string(v.base) + " vs " +
                     cpo::to_string(v.space);
  for (const auto& r : v.reasons) text += "\n  " + r;
  emit(o, text,
       Json{{"base", cpo::to_string(v.base)},
            {"space", cpo::to_string(v.space)},
            {"isomorphic", v.isomorphic},
            {"reasons", v.reasons}});
}

void run_grid(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  const auto g = cpo::value_grid(c, o.window);
  emit(o, cpo::grid_text(g), cpo::json::grid(c, g));
}

void run_canonical(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  try {
    const cpo::CanonicalIso phi(c.word());
    std::vector<std::vector<std::string>> rows;
    Json mapping = Json::array();
    for (const auto& x : cpo::window(c.word(), o.window)) {
      const auto s = phi(x);
      rows.push_back({cpo::pretty_label(c.label(x)), "↦", cpo::segment_name(c, s), cpo::describe(s)});
      mapping.push_back(Json{{"element", c.label(x)}, {"segment", cpo::json::segment(c, s)}});
    }
    emit(o, cpo::columns(rows), Json{{"cpo", o.cpo}, {"isomorphic", true}, {"mapping", mapping}});
  } catch (const cpo::NotIsomorphic& e) {
    emit(o, std::string("not isomorphic: ") + e.what(),
         Json{{"cpo", o.cpo}, {"isomorphic", false}, {"reason", e.what()}, {"mapping", Json::array()}});
  }
}

void run_candidates(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  std::ostringstream t;
  Json list = Json::array();
  for (const auto& m : cpo::candidate_mappings(c, o.window)) {
    t << m.name << ": " << (m.failure.empty() ? "no failure found" : m.failure) << "\n";
    list.push_back(Json{{"name", m.name},
                        {"defined", m.defined},
                        {"order_preserving", m.order_preserving},
                        {"failure", m.failure.empty() ? Json(nullptr) : Json(m.failure)}});
  }
  emit(o, t.str(), Json{{"cpo", o.cpo}, {"candidates", list}});
}

void run_fpt(const Options& o) {
  const auto c = cpo::named_cpo(o.cpo);
  const auto r = cpo::fpt(c, cpo::parse_mu(o.mu));
  if (const auto* p = std::get_if<cpo::FixedPointReport>(&r)) {
    const auto g = cpo::segment_name(c, p->g);
    const auto pre = c.label(p->preimage);
    emit(o, "g = " + g + ", preimage " + pre + ", value " + std::to_string(p->value),
         Json{{"g", g}, {"preimage", pre}, {"value", p->value}});
  } else {
    const auto& q = std::get<cpo::FptInapplicable>(r);
    emit(o, "not applicable: " + q.reason, Json{{"applicable", false}, {"reason", q.reason}});
  }
}

// ---------------------------------------------------------------------------
// Strings

cpo::SpecifiedString specified(const std::string& spec, std::uint64_t i) {
  return cpo::SpecifiedString::make(cpo::parse_spec(spec), i);
}

void run_realize(const Options& o) {
  const auto s = specified(o.spec, o.i);
  const auto r = cpo::realize(s);
  emit(o, cpo::render(r), Json{{"specified", cpo::json::specified(s)}, {"string", cpo::json::string(r)}});
}

void run_opp(const Options& o) {
  const auto x = cpo::parse_string(o.x);
  const auto r = cpo::opp(x);
  emit(o, cpo::render(r), Json{{"input", cpo::json::string(x)}, {"opp", cpo::json::string(r)}});
}

void run_opp_pair(const Options& o) {
  const auto x = cpo::parse_pair(o.x);
  const auto r = cpo::opp_pair(x);
  emit(o, cpo::render(r), Json{{"input", cpo::json::pair(x)}, {"opp", cpo::json::pair(r)}});
}

void run_lr(const Options& o) {
  const auto s = specified(o.spec, o.i);
  const auto r = cpo::lr(s);
  emit(o, cpo::render(r) + ": " + cpo::render(cpo::realize(s)) + " → " + cpo::render(cpo::realize(r)),
       Json{{"input", cpo::json::specified(s)},
            {"lr", cpo::json::specified(r)},
            {"realized_input", cpo::render(cpo::realize(s))},
            {"realized_lr", cpo::render(cpo::realize(r))}});
}

void run_lr_pair(const Options& o) {
  const std::pair p{specified(o.spec, o.i), specified(o.spec2, o.i2)};
  const auto r = cpo::lr_pair(p);
  emit(o, "(" + cpo::render(r.first) + ", " + cpo::render(r.second) + ")",
       Json{{"input", {cpo::json::specified(p.first), cpo::json::specified(p.second)}},
            {"lr", {cpo::json::specified(r.first), cpo::json::specified(r.second)}}});
}

void run_classify(const Options& o) {
  const auto x = cpo::parse_string(o.x);
  const auto c = cpo::classify(x);
  const auto idx = c.index ? std::to_string(*c.index) : "indeterminate";
  emit(o, "family " + cpo::to_string(c.family) + ", index " + idx,
       Json{{"input", cpo::json::string(x)},
            {"family", cpo::to_string(c.family)},
            {"index", c.index ? Json(*c.index) : Json("indeterminate")}});
}

void run_approx(const Options& o) {
  const auto s = cpo::finite_approx(cpo::parse_spec(o.spec), o.i, o.n);
  emit(o, s, Json{{"spec", o.spec}, {"i", o.i}, {"n", o.n}, {"string", s}});
}

void run_limit_check(const Options& o) {
  const auto r = cpo::limit_check(cpo::parse_spec(o.spec), o.i, o.j, o.depth);
  emit(o, std::string(r.stable ? "stable" : "unstable") + ", bit " + std::to_string(r.bit),
       Json{{"spec", o.spec}, {"i", o.i}, {"j", o.j}, {"depth", o.depth}, {"stable", r.stable}, {"bit", r.bit}});
}

// ---------------------------------------------------------------------------
// Adjunction, boundaries, replication

std::string condition_text(const std::string& name, const cpo::ConditionResult& c) {
  std::string s = name + ": " + (c.pass ? "pass" : "fail") + " (" + std::to_string(c.checked) + " checked)";
  if (!c.witness.empty()) {
    std::vector<std::string> w;
    for (const auto& x : c.witness) w.push_back(cpo::render(x));
    s += ", witness " + join(w, " / ");
  }
  return s;
}

void run_adjunction(const Options& o) {
  const auto r = cpo::check_adjunction(cpo::parse_cpo_name(o.cpo), o.window);
  std::string t = r.pairing.lower.symbol + " / " + r.pairing.upper.symbol + " in " +
                  std::string(cpo::symbol(r.pairing.ambient)) + ", window " + std::to_string(r.window) + "\n";
  t += condition_text("condition 1", r.condition1) + "\n";
  t += condition_text("condition 2", r.condition2) + "\n";
  t += condition_text("condition 3", r.condition3) + ", " + std::to_string(r.skipped3) + " skipped\n";
  t += std::string("adjunction: ") + (r.holds() ? "holds" : "fails");
  emit(o, t, cpo::json::adjunction(r));
}

void run_boundary(const Options& o) {
  const auto name = cpo::parse_cpo_name(o.cpo);
  const auto r = cpo::boundary_report(name, o.window);
  const auto c = cpo::named_cpo(name);
  std::ostringstream t;
  t << cpo::pretty_label(r.pair.boundary_label) << " = " << cpo::render(r.pair.boundary) << "\n"
    << "self-opp: " << yes_no(r.self_opp) << "\n"
    << "neighbors: " << cpo::pretty_label(label_or_none(c, r.neighbors.predecessor)) << ", "
    << cpo::pretty_label(label_or_none(c, r.neighbors.successor)) << "\n"
    << "in " << r.pair.lower.symbol << ": " << yes_no(r.in_lower) << ", in " << r.pair.upper.symbol << ": "
    << yes_no(r.in_upper) << "\n"
    << "sup of " << r.pair.lower.symbol << ": " << yes_no(r.sup_of_lower) << ", inf of " << r.pair.upper.symbol
    << ": " << yes_no(r.inf_of_upper);
  emit(o, t.str(), cpo::json::boundary(r));
}

void run_pair_cpo(const Options& o) {
  const auto p = cpo::build_pair_cpo(cpo::parse_cpo_name(o.cpo));
  emit(o,
       std::string(cpo::symbol(p.name)) + " = " + p.lower.symbol + " ∪ " + p.upper.symbol + ": " +
           cpo::to_string(cpo::named_cpo(p.name).word()) + "\nseam: " + p.glue + "\nboundary " +
           cpo::pretty_label(p.boundary_label) + " = " + cpo::render(p.boundary),
       cpo::json::pair_cpo(p));
}

void run_decompose(const Options& o) {
  const auto ds = cpo::decompositions(cpo::parse_cpo_name(o.cpo), o.window);
  std::ostringstream t;
  Json list = Json::array();
  for (const auto& d : ds) {
    std::vector<std::string> parts;
    for (auto s : d.parts) parts.push_back(cpo::to_string(s));
    t << join(parts, " + ");
    if (d.kind == cpo::Decomposition::Kind::natural) {
      t << " via " << d.iso_name;
    } else {
      t << ", no natural isomorphism: " << cpo::render(*d.conflict) << " claimed by " << cpo::render(d.claimants[0])
        << " and " << cpo::render(d.claimants[1]);
    }
    t << "\n";
    list.push_back(cpo::json::decomposition(d));
  }
  emit(o, t.str(), Json{{"cpo", o.cpo}, {"decompositions", list}});
}

void run_lcr_forward(const Options& o) {
  static const auto lambda_prime = cpo::named_cpo(cpo::CpoName::lambda_prime);
  const auto x = std::get<cpo::MonotypicString>(lambda_prime.value(lambda_prime.parse(o.x)));
  const auto r = cpo::lcr_forward(x);
  emit(o, cpo::render(r.image) + " (" + cpo::pretty_label(r.label) + ")" + (r.collision ? ", collision at m′" : ""),
       Json{{"input", cpo::render(x)}, {"image", cpo::json::pair(r.image)}, {"label", r.label}, {"collision", r.collision}});
}

void run_lcr_backward(const Options& o) {
  static const auto v = cpo::named_cpo(cpo::CpoName::v);
  const auto p = std::get<cpo::PairString>(v.value(v.parse(o.x)));
  const auto r = cpo::lcr_backward(p, cpo::parse_endpoint(o.endpoint));
  static const auto lambda_prime = cpo::named_cpo(cpo::CpoName::lambda_prime);
  const auto label = lambda_prime.label(*lambda_prime.find(r));
  emit(o, cpo::render(r) + " (" + cpo::pretty_label(label) + ")",
       Json{{"input", cpo::json::pair(p)}, {"endpoint", o.endpoint}, {"string", cpo::json::string(r)}, {"label", label}});
}

void run_replicate(const Options& o) {
  const auto hat = cpo::named_cpo(cpo::CpoName::lambda_hat_prime);
  const auto m = std::get<cpo::PairString>(hat.value(hat.parse(o.x.empty() ? "m" : o.x)));
  const auto r = cpo::replicate(m);
  emit(o,
       "Int: " + cpo::render(r.intent) + " (" + cpo::pretty_label(r.intent_label) + ")\nExt: " + cpo::render(r.extent) +
           " (" + cpo::pretty_label(r.extent_label) + ")\nmutual neighbors in Λ′: " + yes_no(r.mutual_neighbors),
       Json{{"source", cpo::json::pair(r.source)},
            {"intent", cpo::json::string(r.intent)},
            {"extent", cpo::json::string(r.extent)},
            {"intent_label", r.intent_label},
            {"extent_label", r.extent_label},
            {"mutual_neighbors", r.mutual_neighbors}});
}

void run_pipeline(const Options& o) {
  const auto r = cpo::pipeline(o.window);
  std::ostringstream t;
  for (const auto& e : r.edges) {
    t << cpo::symbol(e.from) << " → " << cpo::symbol(e.to) << " [" << e.name << "]: "
      << (e.verified ? "verified" : "FAILED") << ", " << e.detail << "\n";
  }
  t << "\n" << cpo::table8_text(r);
  emit(o, t.str(), cpo::json::pipeline(r));
}

void run_table8(const Options& o) {
  const auto r = cpo::pipeline(o.window);
  Json rows = Json::array();
  for (const auto& row : r.table) rows.push_back(cpo::json::table8_row(row));
  emit(o, cpo::table8_text(r), Json{{"table8", rows}});
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Countable CPOs, their function spaces, and the string transformations between them"};
  app.require_subcommand(1);

  const auto fmt = [&o](CLI::App* s, std::vector<std::string> allowed = {"text", "json"}) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  const auto cpo_opt = [&o](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--cpo", o.cpo, "Named CPO (phi, theta, lambda, lambda_prime, ...)");
    if (required) opt->required();
  };
  const auto scheme_opt = [&o](CLI::App* s) {
    s->add_option("--scheme", o.scheme, "Embedding/projection scheme")
        ->check(CLI::IsMember({"standard", "alternative"}));
  };
  const auto window_opt = [&o](CLI::App* s) {
    s->add_option("--window", o.window, "Largest block offset shown or checked")->check(CLI::Range(1, 100000));
  };
  const auto spec_opts = [&o](CLI::App* s) {
    s->add_option("--spec", o.spec, "Specification I, II, III or IV")->required();
    s->add_option("--i", o.i, "Index i >= 1")->required();
  };

  std::function<void()> action;
  const auto bind = [&action, &o](CLI::App* s, void (*f)(const Options&)) {
    s->callback([&action, &o, f] { action = [&o, f] { f(o); }; });
  };

  auto* s = app.add_subcommand("stage", "Elements of the finite stage S_n");
  s->add_option("--n", o.n, "Stage number")->required();
  fmt(s);
  bind(s, run_stage);

  s = app.add_subcommand("funcs", "Monotone maps from an m-element chain into 2, by brute force");
  s->add_option("--n,--m", o.m, "Chain size")->required();
  fmt(s);
  bind(s, run_funcs);

  s = app.add_subcommand("ep", "Embedding/projection pair between S_n and S_{n+1}");
  s->add_option("--n", o.n, "Stage number")->required();
  scheme_opt(s);
  fmt(s);
  bind(s, run_ep);

  s = app.add_subcommand("verify-ep", "Check the embedding/projection laws");
  s->add_option("--n", o.n, "Stage number")->required();
  scheme_opt(s);
  fmt(s);
  bind(s, run_verify_ep);

  s = app.add_subcommand("paths", "Projection-consistent label paths and their classes");
  s->add_option("--depth", o.depth, "Number of stages");
  scheme_opt(s);
  fmt(s);
  bind(s, run_paths);

  s = app.add_subcommand("limit", "Order type of the inverse limit");
  scheme_opt(s);
  fmt(s);
  bind(s, run_limit);

  s = app.add_subcommand("diagram", "DOT drawing of the stage diagram, or of a CPO's chain");
  s->add_option("--table", o.table, "1 for the standard pairs, 5 for the alternative ones");
  s->add_option("--depth", o.depth, "Last stage drawn")->default_val(6);
  cpo_opt(s, false);
  window_opt(s);
  fmt(s, {"dot"});
  bind(s, run_diagram);

  s = app.add_subcommand("iso", "Decide whether two orders are isomorphic");
  s->add_option("--a", o.a, "CPO name or order-type word")->required();
  s->add_option("--b", o.b, "CPO name or order-type word")->required();
  fmt(s);
  bind(s, run_iso);

  s = app.add_subcommand("normalize", "Normal form of an order-type word");
  s->add_option("--word", o.word, "Order-type word, e.g. 1+w+1+1+w*")->required();
  fmt(s);
  bind(s, run_normalize);

  s = app.add_subcommand("compare", "Compare two elements of a named CPO");
  cpo_opt(s);
  s->add_option("--x", o.x, "First element")->required();
  s->add_option("--y", o.y, "Second element")->required();
  fmt(s);
  bind(s, run_compare);

  s = app.add_subcommand("neighbors", "Immediate predecessor and successor of an element");
  cpo_opt(s);
  s->add_option("--x", o.x, "Element")->required();
  fmt(s);
  bind(s, run_neighbors);

  s = app.add_subcommand("extremes", "Least and greatest elements");
  cpo_opt(s);
  fmt(s);
  bind(s, run_extremes);

  s = app.add_subcommand("named", "Order type and windowed elements of a named CPO");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_named);

  s = app.add_subcommand("funcspace", "Order type of C(D,2)");
  cpo_opt(s, false);
  s->add_option("--word", o.word, "Order-type word instead of a named CPO");
  fmt(s);
  bind(s, run_funcspace);

  s = app.add_subcommand("self-iso", "Whether D is isomorphic to C(D,2), with the distinguishing features");
  cpo_opt(s, false);
  s->add_option("--word", o.word, "Order-type word instead of a named CPO");
  fmt(s);
  bind(s, run_self_iso);

  s = app.add_subcommand("grid", "Values of the functions in C(D,2) on a window of D");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_grid);

  s = app.add_subcommand("canonical", "The isomorphism D → C(D,2) on a window");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_canonical);

  s = app.add_subcommand("candidates", "The two natural maps into C(D,2) and why they fail");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_candidates);

  s = app.add_subcommand("fpt", "Fixed point of mu: 2 → 2 obtained from D ≅ C(D,2)");
  cpo_opt(s);
  s->add_option("--mu", o.mu, "const0, const1 or id")->check(CLI::IsMember({"const0", "const1", "id"}));
  fmt(s);
  bind(s, run_fpt);

  auto* str = app.add_subcommand("string", "Monotypic strings and their transformations");
  str->require_subcommand(1);
  s = str->add_subcommand("realize", "String defined by a specification and index");
  spec_opts(s);
  fmt(s);
  bind(s, run_realize);
  s = str->add_subcommand("opp", "Flip every bit and reverse the order type");
  s->add_option("--x", o.x, "String literal, e.g. ...0011 or 011...")->required();
  fmt(s);
  bind(s, run_opp);
  s = str->add_subcommand("opp-pair", "opp of a pair: (x, y) ↦ (y^opp, x^opp)");
  s->add_option("--x", o.x, "Pair literal, e.g. \"(...00011, 111...)\"")->required();
  fmt(s);
  bind(s, run_opp_pair);
  s = str->add_subcommand("lr", "LR-transformation of a specified string");
  spec_opts(s);
  fmt(s);
  bind(s, run_lr);
  s = str->add_subcommand("lr-pair", "Componentwise LR-transformation");
  spec_opts(s);
  s->add_option("--spec2", o.spec2, "Specification of the second component")->required();
  s->add_option("--i2", o.i2, "Index of the second component")->required();
  fmt(s);
  bind(s, run_lr_pair);
  s = str->add_subcommand("classify", "Family (and index, when determined) of a string");
  s->add_option("--x", o.x, "String literal")->required();
  fmt(s);
  bind(s, run_classify);
  s = str->add_subcommand("approx", "Finite approximation at stage n");
  spec_opts(s);
  s->add_option("--n", o.n, "Stage")->required();
  fmt(s);
  bind(s, run_approx);
  s = str->add_subcommand("limit-check", "Whether bit j stabilizes to the limit string's bit");
  spec_opts(s);
  s->add_option("--j", o.j, "Bit position")->required();
  s->add_option("--depth", o.depth, "Largest stage checked")->default_val(20);
  fmt(s);
  bind(s, run_limit_check);

  s = app.add_subcommand("adjunction", "The three opp conditions between the halves of a CPO");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_adjunction);

  s = app.add_subcommand("boundary", "Boundary element of lambda_hat_prime or v");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_boundary);

  s = app.add_subcommand("pair-cpo", "Halves, seam and boundary of lambda_hat_prime or v");
  cpo_opt(s);
  fmt(s);
  bind(s, run_pair_cpo);

  s = app.add_subcommand("decompose", "Type decompositions and their natural isomorphisms");
  cpo_opt(s);
  window_opt(s);
  fmt(s);
  bind(s, run_decompose);

  auto* lcr = app.add_subcommand("lcr", "Comma insertion/removal between Λ′ and V");
  lcr->require_subcommand(1);
  s = lcr->add_subcommand("forward", "Element of Λ′ to element of V");
  s->add_option("--x", o.x, "Element of Λ′ (label or string)")->required();
  fmt(s);
  bind(s, run_lcr_forward);
  s = lcr->add_subcommand("backward", "Element of V to element of Λ′");
  s->add_option("--x", o.x, "Element of V (label or pair)")->required();
  s->add_option("--endpoint", o.endpoint, "L or R")->check(CLI::IsMember({"L", "R"}));
  fmt(s);
  bind(s, run_lcr_backward);

  s = app.add_subcommand("replicate", "Copy the boundary m and project it into Λ′");
  s->add_option("--x", o.x, "Element of Λ̂′ (default m)");
  fmt(s);
  bind(s, run_replicate);

  s = app.add_subcommand("pipeline", "Verify Λ → Λ̂′ → Λ′ → V and print the property table");
  window_opt(s);
  fmt(s);
  bind(s, run_pipeline);

  s = app.add_subcommand("table8", "Property table of Λ, Λ′, Λ̂′ and V");
  window_opt(s);
  fmt(s);
  bind(s, run_table8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.format == "dot" && !app.got_subcommand("diagram")) throw Usage("--format dot is only for diagram");
    if (app.got_subcommand("diagram")) o.format = "dot";
    action();
  } catch (const cpo::NotBoundary& e) {
    emit(o, std::string("not boundary: ") + e.what(), Json{{"boundary", false}, {"reason", e.what()}});
    return 0;
  } catch (const cpo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
