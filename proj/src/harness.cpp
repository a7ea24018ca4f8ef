#include "wreathcert/harness.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "wreathcert/errors.hpp"
#include "wreathcert/rank_embedding.hpp"
#include "wreathcert/sym_embedding.hpp"
#include "wreathcert/unitary.hpp"
#include "wreathcert/weakly_sofic.hpp"

namespace wreathcert {

namespace {

const std::set<std::string> kConfigKeys{"G", "H", "targetClass", "window", "epsilon", "fieldPrime", "seeds", "sigma",
                                        "corruption", "corruptionRelative", "cap"};

template <class T>
T get_as(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("config key \"" + key + "\" has the wrong type: " + j.at(key).dump());
  }
}

GroupSpec group_spec_from_json(const Json& j, const std::string& which) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError(which + " needs an object with \"kind\"");
  GroupSpec s;
  const auto kind = get_as<std::string>(j, "kind");
  for (const auto& [key, v] : j.items())
    if (key != "kind" && key != "n" && key != "generator" && key != "file")
      throw ParseError(which + ": unknown key \"" + key + "\"");
  if (kind == "cyclic" || kind == "symmetric") {
    s.kind = kind == "cyclic" ? GroupKindSpec::cyclic : GroupKindSpec::symmetric;
    if (!j.contains("n")) throw ParseError(which + ": " + kind + " needs \"n\"");
    s.n = get_as<std::size_t>(j, "n");
    if (s.n == 0) throw ParseError(which + ": n must be positive");
    if (j.contains("generator")) {
      if (s.kind != GroupKindSpec::cyclic) throw ParseError(which + ": \"generator\" applies to cyclic groups only");
      s.generator = get_as<std::string>(j, "generator");
    }
  } else if (kind == "table") {
    s.kind = GroupKindSpec::table;
    if (!j.contains("file")) throw ParseError(which + ": table needs \"file\"");
    s.file = get_as<std::string>(j, "file");
  } else if (kind == "integers") {
    s.kind = GroupKindSpec::integers;
  } else {
    throw ParseError(which + ": unknown group kind \"" + kind + "\"");
  }
  if (s.kind != GroupKindSpec::cyclic && s.kind != GroupKindSpec::symmetric && j.contains("n"))
    throw ParseError(which + ": \"n\" does not apply to " + kind);
  if (s.kind != GroupKindSpec::table && j.contains("file"))
    throw ParseError(which + ": \"file\" applies to table groups only");
  return s;
}

Json group_spec_to_json(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKindSpec::cyclic: return Json{{"kind", "cyclic"}, {"n", s.n}, {"generator", s.generator}};
    case GroupKindSpec::symmetric: return Json{{"kind", "symmetric"}, {"n", s.n}};
    case GroupKindSpec::table: return Json{{"kind", "table"}, {"file", s.file}};
    case GroupKindSpec::integers: return Json{{"kind", "integers"}};
  }
  return {};
}

TargetClass target_from_name(const std::string& name) {
  for (auto t : {TargetClass::sofic, TargetClass::hyperlinear, TargetClass::linearsofic, TargetClass::weaklysofic})
    if (name == target_class_name(t)) return t;
  throw ParseError("unknown targetClass \"" + name + "\"");
}

Json names(const GroupPtr& g, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(g->name(x));
  return out;
}

template <class S>
Json margins_json(const std::vector<MarginEntry<S>>& ms) {
  Json out = Json::array();
  for (const auto& m : ms)
    out.push_back(Json{{"x", m.element.to_string()}, {"margin", to_json(m.margin)}, {"required", to_json(m.required)}});
  return out;
}

template <class S>
Json run_json(const PipelineReport<S>& r, std::uint64_t seed, std::size_t degree, const Rational& delta) {
  const auto& c = r.cert;
  const auto& p = c.params;
  Json cprime = Json::array();
  for (const auto& x : p.F)
    if (!x.is_identity()) cprime.push_back(Json{{"x", x.to_string()}, {"value", to_json(p.c_prime(x))}});

  Json run;
  run["seed"] = seed;
  run["sigmaDegree"] = degree;
  run["corruption"] = to_json(delta);
  run["params"] = Json{{"epsilon", to_json(p.epsilon)},
                       {"E", names(p.H, p.E)},
                       {"E_G", names(p.G, p.E_G)},
                       {"E_H", names(p.H, p.E_H)},
                       {"boundMult", to_json(p.bound_mult)},
                       {"boundInj", to_json(p.bound_inj)},
                       {"epsPrime", to_json(p.eps_prime)},
                       {"kappa", to_json(p.kappa)},
                       {"cPrime", std::move(cprime)}};
  run["hypotheses"] = Json{{"thetaDefect", to_json(c.theta_defect)},
                           {"thetaDefectWitness", c.theta_defect_witness},
                           {"thetaMultiplicative", c.theta_multiplicative},
                           {"thetaMinMargin", c.theta_min_margin ? to_json(*c.theta_min_margin) : Json()},
                           {"thetaMarginWitness", c.theta_margin_witness},
                           {"thetaInjective", c.theta_injective},
                           {"sigmaLevel", to_json(c.sigma_level)},
                           {"sigmaSofic", c.sigma_sofic},
                           {"goodSetSize", c.good.size},
                           {"outsideB1", c.good.outside_b1},
                           {"outsideB2", c.good.outside_b2},
                           {"goodSetBound", c.good_set_bound},
                           {"equivarianceFailures", c.equivariance_failures},
                           {"hold", c.hypotheses_hold}};
  run["theta"] = Json{{"defect", to_json(c.defect)},
                      {"defectWitness", c.defect_witness},
                      {"multiplicative", c.multiplicative},
                      {"margins", margins_json(c.margins)},
                      {"injective", c.injective},
                      {"almostHom", Json{{"threshold", to_json(c.lemma.threshold)},
                                         {"baseDefect", to_json(c.lemma.base_defect)},
                                         {"topDefect", to_json(c.lemma.top_defect)},
                                         {"splitting", to_json(c.lemma.splitting)},
                                         {"equivariance", to_json(c.lemma.equivariance)},
                                         {"conclusion", to_json(c.lemma.conclusion)},
                                         {"violated", c.lemma.violated}}},
                      {"verdict", verdict_name(c.verdict)}};
  run["psi"] = Json{{"defect", to_json(r.psi_defect)},
                    {"defectBound", to_json(r.psi_defect_bound)},
                    {"defectWitness", r.psi_defect_witness},
                    {"multiplicative", r.psi_multiplicative},
                    {"margins", margins_json(r.psi_margins)},
                    {"injective", r.psi_injective}};
  Json checks = Json::array();
  for (const auto& ch : r.checks)
    checks.push_back(Json{{"name", ch.name},
                          {"instances", ch.instances},
                          {"failures", ch.failures},
                          {"firstFailure", ch.first_failure}});
  run["checks"] = std::move(checks);
  Json figures = Json::object();
  for (const auto& [name, v] : r.figures) figures[name] = to_json(v);
  run["figures"] = std::move(figures);
  run["verdict"] = verdict_name(r.verdict);
  return run;
}

Json doubling_json(const DoublingReport& d, const GroupPtr& g) {
  Json ms = Json::array();
  for (const auto& m : d.margins)
    ms.push_back(Json{{"g", g->name(m.g)},
                      {"baseMargin", to_json(m.base_margin)},
                      {"margin", to_json(m.margin)},
                      {"atOne", to_json(m.at_one)},
                      {"awayFromOne", to_json(m.away_from_one)}});
  return Json{{"delta", to_json(d.delta)},     {"baseDefect", to_json(d.base_defect)},
              {"precondition", d.precondition}, {"caseSplit", d.case_split},
              {"marginsOk", d.margins_ok},      {"minMargin", to_json(d.min_margin)},
              {"margins", std::move(ms)}};
}

Verdict verdict_from_name(const std::string& s) {
  for (auto v : {Verdict::pass, Verdict::fail, Verdict::hypotheses_unmet})
    if (s == verdict_name(v)) return v;
  throw ParseError("unknown verdict \"" + s + "\"");
}

std::string show(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

const char* target_class_name(TargetClass t) {
  switch (t) {
    case TargetClass::sofic: return "sofic";
    case TargetClass::hyperlinear: return "hyperlinear";
    case TargetClass::linearsofic: return "linearsofic";
    case TargetClass::weaklysofic: return "weaklysofic";
  }
  return "?";
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be an object");
  for (const auto& [key, v] : j.items())
    if (!kConfigKeys.count(key)) throw ParseError("unknown config key \"" + key + "\"");
  for (const char* key : {"G", "H", "targetClass", "window", "epsilon"})
    if (!j.contains(key)) throw ParseError(std::string("config is missing \"") + key + "\"");

  ExperimentConfig c;
  c.G = group_spec_from_json(j.at("G"), "G");
  c.H = group_spec_from_json(j.at("H"), "H");
  c.target = target_from_name(get_as<std::string>(j, "targetClass"));
  c.window = get_as<std::vector<std::string>>(j, "window");
  if (c.window.empty()) throw ParseError("window must not be empty");
  c.epsilon = rational_from_json(j.at("epsilon"));
  if (c.epsilon <= 0) throw ParseError("epsilon must be positive");
  if (j.contains("fieldPrime")) c.field_prime = get_as<std::uint32_t>(j, "fieldPrime");
  if (j.contains("seeds")) c.seeds = get_as<std::vector<std::uint64_t>>(j, "seeds");
  if (c.seeds.empty()) throw ParseError("seeds must not be empty");
  if (j.contains("sigma")) {
    const auto& s = j.at("sigma");
    if (!s.is_object()) throw ParseError("sigma must be an object");
    for (const auto& [key, v] : s.items())
      if (key != "copies" && key != "shift") throw ParseError("sigma: unknown key \"" + key + "\"");
    if (s.contains("copies")) c.sigma_copies = get_as<std::size_t>(s, "copies");
    if (s.contains("shift")) c.sigma_shift = get_as<std::size_t>(s, "shift");
  }
  if (j.contains("corruption")) c.corruption = rational_from_json(j.at("corruption"));
  if (j.contains("corruptionRelative")) c.corruption_relative = rational_from_json(j.at("corruptionRelative"));
  if (j.contains("cap")) c.cap = get_as<std::uint64_t>(j, "cap");

  if (c.G.kind == GroupKindSpec::integers) throw ParseError("G must be finite");
  if (c.target == TargetClass::linearsofic && !c.field_prime) throw ParseError("linearsofic needs \"fieldPrime\"");
  if (c.target != TargetClass::linearsofic && c.field_prime)
    throw ParseError(std::string("\"fieldPrime\" does not apply to ") + target_class_name(c.target));
  if (c.target == TargetClass::weaklysofic && c.G.kind != GroupKindSpec::table)
    throw ParseError("weaklysofic needs G given as a table file with \"lengths\"");
  if (c.H.kind == GroupKindSpec::integers) {
    if (!c.sigma_shift) throw ParseError("H = integers needs sigma.shift");
    if (j.contains("sigma") && j.at("sigma").contains("copies")) throw ParseError("sigma.copies needs a finite H");
  } else if (c.sigma_shift) {
    throw ParseError("sigma.shift needs H = integers");
  }
  if (c.sigma_copies == 0 || (c.sigma_shift && *c.sigma_shift == 0)) throw ParseError("sigma degree must be positive");
  if (c.corruption < 0 || c.corruption_relative < 0) throw ParseError("corruption must be non-negative");
  if (c.corruption > 0 && c.corruption_relative > 0)
    throw ParseError("give at most one of \"corruption\" and \"corruptionRelative\"");
  if (c.cap == 0) throw ParseError("cap must be positive");
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["G"] = group_spec_to_json(c.G);
  j["H"] = group_spec_to_json(c.H);
  j["targetClass"] = target_class_name(c.target);
  j["window"] = c.window;
  j["epsilon"] = to_json(c.epsilon);
  if (c.field_prime) j["fieldPrime"] = *c.field_prime;
  j["seeds"] = c.seeds;
  if (c.sigma_shift)
    j["sigma"] = Json{{"shift", *c.sigma_shift}};
  else
    j["sigma"] = Json{{"copies", c.sigma_copies}};
  j["corruption"] = to_json(c.corruption);
  j["corruptionRelative"] = to_json(c.corruption_relative);
  j["cap"] = c.cap;
  return j;
}

namespace {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) { return config_from_json(read_json_file(path)); }

BuiltGroup build_group(const GroupSpec& spec, const std::filesystem::path& base_dir) {
  switch (spec.kind) {
    case GroupKindSpec::cyclic: return {Group::cyclic(spec.n, spec.generator), std::nullopt};
    case GroupKindSpec::symmetric: return {Group::symmetric(spec.n), std::nullopt};
    case GroupKindSpec::integers: return {Group::integers(), std::nullopt};
    case GroupKindSpec::table: break;
  }
  const auto path = std::filesystem::path(spec.file).is_absolute() ? std::filesystem::path(spec.file) : base_dir / spec.file;
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("names") || !j.contains("table"))
    throw ParseError(path.string() + ": table file needs \"names\" and \"table\"");
  BuiltGroup out;
  try {
    out.group = Group::from_table(j.at("table").get<std::vector<std::vector<std::uint32_t>>>(),
                                  j.at("names").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (j.contains("lengths")) {
    std::vector<Rational> ls;
    for (const auto& v : j.at("lengths")) ls.push_back(rational_from_json(v));
    if (ls.size() != out.group->order()) throw ParseError(path.string() + ": one length per element expected");
    out.lengths = std::move(ls);
  }
  return out;
}

WreathElem parse_wreath_literal(const GroupPtr& G, const GroupPtr& H, std::string_view text) {
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return at + 1; };
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= text.size() || text[i] != ch)
      throw ParseError(std::string("expected '") + ch + "' in \"" + std::string(text) + "\"", col(i));
    ++i;
  };
  // A name runs up to the next delimiter; element names never contain these.
  auto token = [&](std::string_view stops) {
    skip();
    const std::size_t start = i;
    while (i < text.size() && stops.find(text[i]) == std::string_view::npos) ++i;
    std::size_t end = i;
    while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    if (end == start) throw ParseError("missing element name in \"" + std::string(text) + "\"", col(start));
    return std::pair{text.substr(start, end - start), start};
  };
  auto element = [&](const GroupPtr& grp, std::pair<std::string_view, std::size_t> tok) {
    try {
      return grp->parse(tok.first);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), col(tok.second));
    }
  };

  expect('{');
  std::map<Elem, Elem> entries;
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    for (;;) {
      const auto key = token(":,{};");
      const Elem h = element(H, key);
      expect(':');
      const Elem g = element(G, token(":,{};"));
      if (!entries.emplace(h, g).second)
        throw ParseError("index " + std::string(key.first) + " appears twice", col(key.second));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect('}');
      break;
    }
  }
  expect(';');
  const auto top = token(":,{};");
  const Elem h = element(H, top);
  skip();
  if (i != text.size()) throw ParseError("trailing characters in \"" + std::string(text) + "\"", col(i));
  return WreathElem(SupportedTuple(G, H, entries), h);
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::hypotheses_unmet: return 3;
  }
  return 1;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& base_dir) {
  const auto g = build_group(config.G, base_dir);
  const auto h = build_group(config.H, base_dir);
  const GroupPtr& G = g.group;
  const GroupPtr& H = h.group;
  std::vector<WreathElem> F;
  for (std::size_t k = 0; k < config.window.size(); ++k) {
    try {
      F.push_back(parse_wreath_literal(G, H, config.window[k]));
    } catch (const ParseError& e) {
      throw ParseError("window[" + std::to_string(k) + "]: " + e.message(), e.column());
    }
  }

  std::optional<TableMetricGroup> k_metric;
  MarginFunction c = constant_margin(ratio(1, 2));
  if (config.target == TargetClass::linearsofic) c = constant_margin(ratio(1, 16));
  if (config.target == TargetClass::weaklysofic) {
    if (!g.lengths) throw ParseError("weaklysofic needs \"lengths\" in the table file of G");
    k_metric.emplace(G, *g.lengths);
    auto ell = k_metric->length_fn();
    c = [ell](Elem x) { return ell(x); };
  }

  const SoficMap base_sigma = H->is_finite() ? regular_rep(H, config.sigma_copies) : cyclic_shift_rep(*config.sigma_shift);
  Rational delta = config.corruption;
  if (config.corruption_relative > 0)
    delta = config.corruption_relative * derive_params(G, H, F, config.epsilon, c).eps_prime;

  Json doubling_report;
  std::optional<SoficMap> theta_sym;
  std::optional<UnitaryMap> theta_unitary;
  std::optional<LinearMap> theta_linear;
  std::optional<TableMap> theta_table;
  switch (config.target) {
    case TargetClass::sofic: theta_sym = regular_rep(G); break;
    case TargetClass::hyperlinear: theta_unitary = regular_unitary_rep(G); break;
    case TargetClass::linearsofic: {
      auto d = doubling(regular_linear_rep(G, *config.field_prime), G->elements(), Rational(0));
      doubling_report = doubling_json(d.report, G);
      theta_linear = std::move(d.map);
      break;
    }
    case TargetClass::weaklysofic: theta_table = identity_embedding(*k_metric); break;
  }

  Json runs = Json::array();
  bool any_fail = false, any_unmet = false;
  for (std::uint64_t seed : config.seeds) {
    const SoficMap sigma = delta > 0 ? corrupt(base_sigma, delta, seed) : base_sigma;
    const PipelineOptions opts{config.cap, seed};
    const std::size_t degree = sigma.target().degree();
    Json run;
    Verdict v = Verdict::fail;
    switch (config.target) {
      case TargetClass::sofic: {
        auto r = sofic_pipeline(*theta_sym, sigma, F, config.epsilon, opts);
        run = run_json(r, seed, degree, delta);
        v = r.verdict;
        break;
      }
      case TargetClass::hyperlinear: {
        auto r = hyperlinear_pipeline(*theta_unitary, sigma, F, config.epsilon, opts);
        run = run_json(r, seed, degree, delta);
        v = r.verdict;
        break;
      }
      case TargetClass::linearsofic: {
        auto r = linearsofic_pipeline(*theta_linear, sigma, F, config.epsilon, opts);
        run = run_json(r, seed, degree, delta);
        v = r.verdict;
        break;
      }
      case TargetClass::weaklysofic: {
        auto r = weaklysofic_pipeline(*theta_table, sigma, F, config.epsilon, c, opts);
        run = run_json(r, seed, degree, delta);
        v = r.verdict;
        break;
      }
    }
    any_fail = any_fail || v == Verdict::fail;
    any_unmet = any_unmet || v == Verdict::hypotheses_unmet;
    runs.push_back(std::move(run));
  }

  ExperimentResult out;
  out.verdict = any_fail ? Verdict::fail : any_unmet ? Verdict::hypotheses_unmet : Verdict::pass;
  out.report["config"] = config_to_json(config);
  out.report["G"] = G->description();
  out.report["H"] = H->description();
  out.report["F"] = Json::array();
  for (const auto& x : F) out.report["F"].push_back(x.to_string());
  if (!doubling_report.is_null()) out.report["doubling"] = std::move(doubling_report);
  out.report["runs"] = std::move(runs);
  out.report["verdict"] = verdict_name(out.verdict);
  return out;
}

std::string pretty_report(const Json& report) {
  try {
    std::ostringstream out;
    const auto& cfg = report.at("config");
    out << "class " << show(cfg.at("targetClass")) << "  G = " << show(report.at("G")) << "  H = " << show(report.at("H"))
        << "  eps = " << show(cfg.at("epsilon")) << "\n";
    out << "window:";
    for (const auto& x : report.at("F")) out << "  " << show(x);
    out << "\n";
    if (report.contains("doubling")) {
      const auto& d = report.at("doubling");
      out << "doubling: precondition " << d.at("precondition") << ", min margin " << show(d.at("minMargin"))
          << ", margins ok " << d.at("marginsOk") << "\n";
    }
    for (const auto& run : report.at("runs")) {
      const auto& p = run.at("params");
      const auto& hy = run.at("hypotheses");
      const auto& th = run.at("theta");
      const auto& psi = run.at("psi");
      out << "\nseed " << run.at("seed") << "  |B| = " << run.at("sigmaDegree") << "  corruption "
          << show(run.at("corruption")) << "  -> " << show(run.at("verdict")) << "\n";
      out << "  |E| = " << p.at("E").size() << "  eps' = " << show(p.at("epsPrime")) << "  kappa = " << show(p.at("kappa"))
          << "\n";
      out << "  hypotheses: theta defect " << show(hy.at("thetaDefect")) << ", theta min margin "
          << show(hy.at("thetaMinMargin")) << ", sigma level " << show(hy.at("sigmaLevel")) << ", |B_E| "
          << hy.at("goodSetSize") << (hy.at("hold").get<bool>() ? "  [hold]" : "  [UNMET]") << "\n";
      out << "  Theta: defect " << show(th.at("defect")) << (th.at("multiplicative").get<bool>() ? " ok" : " TOO LARGE")
          << ", injective " << th.at("injective") << "\n";
      out << "  Psi o Theta: defect " << show(psi.at("defect")) << " (bound " << show(psi.at("defectBound")) << ")"
          << ", injective " << psi.at("injective") << "\n";
      for (const auto& m : psi.at("margins"))
        out << "    " << show(m.at("x")) << ": " << show(m.at("margin")) << " >= " << show(m.at("required")) << "\n";
      for (const auto& ch : run.at("checks")) {
        out << "  [" << (ch.at("failures").get<std::size_t>() == 0 ? "ok" : "FAIL") << "] " << show(ch.at("name")) << " ("
            << ch.at("instances") << " instances";
        if (ch.at("failures").get<std::size_t>()) out << ", first failure: " << show(ch.at("firstFailure"));
        out << ")\n";
      }
      for (const auto& [name, v] : run.at("figures").items()) out << "  " << name << ": " << show(v) << "\n";
    }
    out << "\nverdict: " << verdict_name(verdict_from_name(report.at("verdict").get<std::string>())) << "\n";
    return out.str();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace wreathcert
