#include <doctest.h>

#include "wreathcert/errors.hpp"
#include "wreathcert/harness.hpp"
#include "wreathcert/jordan_table.hpp"
#include "wreathcert/selftest.hpp"

using namespace wreathcert;

namespace {

const std::filesystem::path kConfigs = std::filesystem::path(WREATHCERT_SOURCE_DIR) / "configs";

std::size_t column_of(const GroupPtr& g, const GroupPtr& h, std::string_view text) {
  try {
    parse_wreath_literal(g, h, text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

Json base_config() {
  return Json::parse(R"({"G": {"kind": "cyclic", "n": 2}, "H": {"kind": "cyclic", "n": 3, "generator": "t"},
                         "targetClass": "sofic", "window": ["{1:a}; t"], "epsilon": "3/10"})");
}

}  // namespace

TEST_CASE("wreath literals") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(3, "t");
  auto x = parse_wreath_literal(g, h, "{1:a, t^2:a}; t");
  CHECK(x == WreathElem(SupportedTuple(g, h, {{0, 1}, {2, 1}}), 1));
  CHECK(parse_wreath_literal(g, h, "  {}  ;  1 ").is_identity());
  CHECK(parse_wreath_literal(g, h, "{t:1}; 1").is_identity());
  CHECK(parse_wreath_literal(g, h, x.to_string()) == x);

  CHECK(column_of(g, h, "1:a}; t") == 1);
  CHECK(column_of(g, h, "{1:b}; t") == 4);
  CHECK(column_of(g, h, "{1:a, 1:a}; t") == 7);  // repeated index
  CHECK(column_of(g, h, "{1:a} t") == 7);
  CHECK(column_of(g, h, "{1:a}; t x") == 8);
  CHECK(column_of(g, h, "{1:a};") == 7);

  auto s3 = Group::symmetric(3);
  auto y = parse_wreath_literal(s3, h, "{t:(0 1 2)}; t^2");
  CHECK(parse_wreath_literal(s3, h, y.to_string()) == y);
  auto z = Group::integers();
  CHECK(parse_wreath_literal(g, z, "{-2:a, 3:a}; -1") == WreathElem(SupportedTuple(g, z, {{-2, 1}, {3, 1}}), -1));
}

TEST_CASE("json values") {
  CHECK(to_json(ratio(3, 10)) == "3/10");
  CHECK(rational_from_json(Json("3/10")) == ratio(3, 10));
  CHECK(rational_from_json(Json(2)) == 2);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK(to_json(std::complex<double>(1, -2)) == Json::array({1.0, -2.0}));
  CHECK(complex_from_json(Json::array({0.25, 3})) == std::complex<double>(0.25, 3));
  CHECK_THROWS_AS(complex_from_json(Json::array({1})), ParseError);
  Permutation p(std::vector<std::uint32_t>{2, 0, 1});
  CHECK(permutation_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(permutation_from_json(Json::array({0, 0})), ParseError);
  PrimeField f5(5);
  auto m = parse_fp_matrix(f5, "1 2; 3 4");
  CHECK(fp_matrix_from_json(f5, to_json(m)) == m);
  CHECK(fp_matrix_from_json(f5, Json::parse("[[-1, 7], [0, 5]]")) == parse_fp_matrix(f5, "4 2; 0 0"));
  CHECK_THROWS_AS(fp_matrix_from_json(f5, Json::parse("[[1, 2]]")), ParseError);

  auto h = Group::cyclic(3, "t");
  auto sigma = regular_rep(h, 2);
  auto back = sofic_map_from_json(h, sofic_map_to_json(sigma, h->elements()));
  for (Elem x : h->elements()) CHECK(back(x) == sigma(x));
  // Doubles keep full precision through text.
  const double third = 1.0 / 3.0;
  CHECK(Json::parse(to_json(third).dump()).get<double>() == third);
}

TEST_CASE("configs: parse, validate, round trip") {
  for (const char* name : {"sofic_z2_z3", "sofic_corrupted", "sofic_integers", "hyperlinear_z2_z2", "linearsofic_z3_z3",
                           "weaklysofic_q8", "malformed_window"}) {
    INFO(name);
    auto c = load_config(kConfigs / (std::string(name) + ".json"));
    CHECK(config_from_json(config_to_json(c)) == c);
    CHECK(config_to_json(config_from_json(config_to_json(c))) == config_to_json(c));
  }
  CHECK_NOTHROW(config_from_json(base_config()));

  auto rejects = [](const std::function<void(Json&)>& edit) {
    Json j = base_config();
    edit(j);
    CHECK_THROWS_AS(config_from_json(j), ParseError);
  };
  rejects([](Json& j) { j["fieldPrime"] = 3; });                    // only for linearsofic
  rejects([](Json& j) { j["targetClass"] = "linearsofic"; });       // needs a prime
  rejects([](Json& j) { j["targetClass"] = "weaklysofic"; });       // needs a length table
  rejects([](Json& j) { j["targetClass"] = "amenable"; });
  rejects([](Json& j) { j["colour"] = "blue"; });
  rejects([](Json& j) { j["epsilon"] = "0"; });
  rejects([](Json& j) { j["epsilon"] = "1/0"; });
  rejects([](Json& j) { j.erase("window"); });
  rejects([](Json& j) { j["window"] = Json::array(); });
  rejects([](Json& j) { j["G"] = Json{{"kind", "integers"}}; });
  rejects([](Json& j) { j["H"] = Json{{"kind", "integers"}}; });  // no shift given
  rejects([](Json& j) { j["sigma"] = Json{{"shift", 5}}; });        // H is finite
  rejects([](Json& j) { j["G"] = Json{{"kind", "symmetric"}, {"n", 3}, {"generator", "s"}}; });
  rejects([](Json& j) { j["corruption"] = "1/10"; j["corruptionRelative"] = "1/4"; });
  rejects([](Json& j) { j["seeds"] = Json::array(); });
  rejects([](Json& j) { j["cap"] = "big"; });
}

TEST_CASE("run_experiment") {
  SUBCASE("exact sofic config passes") {
    auto c = load_config(kConfigs / "sofic_z2_z3.json");
    auto r = run_experiment(c, kConfigs);
    CHECK(r.verdict == Verdict::pass);
    CHECK(exit_code(r.verdict) == 0);
    CHECK(r.report.at("runs").at(0).at("psi").at("defect") == "0");
    CHECK(pretty_report(r.report).find("verdict: PASS") != std::string::npos);
  }
  SUBCASE("weakly sofic Q8 config passes") {
    auto r = run_experiment(load_config(kConfigs / "weaklysofic_q8.json"), kConfigs);
    CHECK(r.verdict == Verdict::pass);
  }
  SUBCASE("linear and hyperlinear configs pass") {
    CHECK(run_experiment(load_config(kConfigs / "linearsofic_z3_z3.json"), kConfigs).verdict == Verdict::pass);
    CHECK(run_experiment(load_config(kConfigs / "hyperlinear_z2_z2.json"), kConfigs).verdict == Verdict::pass);
    CHECK(run_experiment(load_config(kConfigs / "sofic_integers.json"), kConfigs).verdict == Verdict::pass);
  }
  SUBCASE("reports are reproducible") {
    auto c = load_config(kConfigs / "hyperlinear_z2_z2.json");
    CHECK(run_experiment(c, kConfigs).report.dump() == run_experiment(c, kConfigs).report.dump());
    auto d = load_config(kConfigs / "sofic_corrupted.json");
    CHECK(run_experiment(d, kConfigs).report.dump() == run_experiment(d, kConfigs).report.dump());
  }
  SUBCASE("heavy corruption leaves the hypotheses unmet") {
    auto c = load_config(kConfigs / "sofic_corrupted.json");
    c.corruption_relative = 0;
    c.corruption = ratio(1, 4);
    auto r = run_experiment(c, kConfigs);
    CHECK(r.verdict == Verdict::hypotheses_unmet);
    CHECK(exit_code(r.verdict) == 3);
  }
  SUBCASE("a malformed window literal reports its location") {
    auto c = load_config(kConfigs / "malformed_window.json");
    try {
      run_experiment(c, kConfigs);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 2);
      CHECK(std::string(e.what()).find("window[1]") != std::string::npos);
    }
  }
  SUBCASE("a stored report is required to be well formed") {
    CHECK_THROWS_AS(pretty_report(Json::parse(R"({"runs": []})")), ParseError);
  }
}

TEST_CASE("jordan table") {
  auto t = jordan_table(5, 3);
  CHECK(t.all_min);
  for (const auto& r : t.rows) {
    CHECK(r.pairs >= 25);
    if (r.n == 1) CHECK(r.max_count == 1);
    if (r.p == 2 && r.n == 2 && r.k == 2) CHECK(r.min_count == 2);
  }
  CHECK(format_jordan_table(t).find("all = min{n,k}: true") != std::string::npos);
  CHECK_THROWS_AS(jordan_table(11, 3), DomainError);
  CHECK_THROWS_AS(jordan_table(5, 5), DomainError);
}

TEST_CASE("selftest") {
  auto suites = selftest();
  for (const auto& s : suites) {
    INFO(s.name << ": " << s.first_failure);
    CHECK(s.ok());
    CHECK(s.instances > 0);
  }
  CHECK(format_selftest(suites) == format_selftest(selftest()));

  SelftestOptions bad;
  bad.table_fixture = kConfigs / "q8_bad_lengths.json";
  auto red = selftest(bad);
  REQUIRE(red.size() == suites.size() + 1);
  CHECK_FALSE(red.back().ok());
  CHECK(red.back().first_failure.find("triangle") != std::string::npos);
  CHECK(format_selftest(red).find("1 red") != std::string::npos);
}
