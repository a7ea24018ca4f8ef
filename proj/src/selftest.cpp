#include "wreathcert/selftest.hpp"

#include <array>
#include <sstream>

#include "wreathcert/harness.hpp"
#include "wreathcert/jordan_table.hpp"
#include "wreathcert/length_laws.hpp"
#include "wreathcert/rng.hpp"
#include "wreathcert/samplers.hpp"
#include "wreathcert/weakly_sofic.hpp"

namespace wreathcert {

namespace {

NamedCheck suite(std::string name) {
  NamedCheck s;
  s.name = std::move(name);
  return s;
}

void group_axioms(NamedCheck& s, const GroupPtr& g) {
  const auto els = g->elements();
  for (Elem a : els) {
    s.record(g->mul(a, g->identity()) == a && g->mul(g->identity(), a) == a, g->description() + ": identity");
    s.record(g->mul(a, g->inv(a)) == g->identity(), g->description() + ": inverse of " + g->name(a));
    for (Elem b : els)
      for (Elem c : els)
        s.record(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)), g->description() + ": associativity");
  }
}

WreathElem random_wreath(std::mt19937_64& rng, const GroupPtr& g, const GroupPtr& h) {
  std::map<Elem, Elem> entries;
  for (Elem x : h->elements()) entries.emplace(x, static_cast<Elem>(uniform_below(rng, g->order())));
  return WreathElem(SupportedTuple(g, h, entries), static_cast<Elem>(uniform_below(rng, h->order())));
}

void record_laws(NamedCheck& s, const LawReport& r, const std::string& what) {
  s.instances += r.checked;
  if (!r.ok()) {
    if (s.failures == 0) s.first_failure = what + ": " + r.violations[0].axiom + " (" + r.violations[0].detail + ")";
    s.failures += r.violation_count;
  }
}

template <class S>
void record_pipeline(NamedCheck& s, const PipelineReport<S>& r, const std::string& what) {
  s.record(r.verdict == Verdict::pass, what + ": verdict " + verdict_name(r.verdict));
  for (const auto& c : r.checks) s.record(c.ok(), what + ": " + c.name + " (" + c.first_failure + ")");
}

std::vector<WreathElem> z2_z3_window(const GroupPtr& g, const GroupPtr& h) {
  return {WreathElem(SupportedTuple(g, h, {{0, 1}}), 0), WreathElem(SupportedTuple(g, h), 1),
          WreathElem(SupportedTuple(g, h, {{0, 1}, {2, 1}}), 1), WreathElem(SupportedTuple(g, h, {{1, 1}}), 2)};
}

NamedCheck groups_core(std::uint64_t seed) {
  auto s = suite("groups-core");
  group_axioms(s, Group::cyclic(6));
  group_axioms(s, Group::symmetric(3));
  group_axioms(s, Group::quaternion());
  auto g = Group::symmetric(3);
  auto h = Group::cyclic(3, "t");
  std::mt19937_64 rng = seeded_engine(seed, 1);
  const auto one = WreathElem::identity(g, h);
  for (int t = 0; t < 200; ++t) {
    auto x = random_wreath(rng, g, h), y = random_wreath(rng, g, h), z = random_wreath(rng, g, h);
    s.record(wreath_mul(wreath_mul(x, y), z) == wreath_mul(x, wreath_mul(y, z)), "wreath associativity");
    s.record(wreath_mul(x, x.inverse()) == one, "wreath inverse");
    s.record(parse_wreath_literal(g, h, x.to_string()) == x, "literal round trip of " + x.to_string());
  }
  return s;
}

NamedCheck metric_groups(std::uint64_t seed) {
  auto s = suite("metric-groups");
  std::mt19937_64 rng = seeded_engine(seed, 2);
  std::vector<std::array<Permutation, 3>> perms;
  for (int t = 0; t < 500; ++t)
    perms.push_back({random_permutation(rng, 4), random_permutation(rng, 4), random_permutation(rng, 4)});
  record_laws(s, length_law_check(SymGroup(4), hamming_length_fn(), std::span<const std::array<Permutation, 3>>(perms)),
              "Hamming on Sym(4)");

  WreathGroup<DirectSum<SymGroup>> w(DirectSum<SymGroup>(SymGroup(2), 3), 3);
  std::vector<std::array<SymWreathElem, 3>> triples;
  for (int t = 0; t < 500; ++t)
    triples.push_back({random_sym_wreath(rng, 2, 3), random_sym_wreath(rng, 2, 3), random_sym_wreath(rng, 2, 3)});
  record_laws(s,
              length_law_check(w, wreath_length_fn(phi_hamming_length_fn()),
                               std::span<const std::array<SymWreathElem, 3>>(triples)),
              "wreath length at |B| = 3");
  const auto q8 = quaternion_metric();
  std::vector<Rational> ls;
  for (Elem e : q8.group()->elements()) ls.push_back(q8.length(e));
  record_laws(s, TableMetricGroup::audit(q8.group(), ls), "Q8 table");
  return s;
}

NamedCheck approx_maps(std::uint64_t seed) {
  auto s = suite("approx-maps");
  auto g = Group::cyclic(5);
  auto rho = regular_rep(g);
  s.record(rho.mult_defect(g->elements(), hamming_length_fn()).value == 0, "regular rep defect");
  s.record(freeness(rho, g->elements()) == 1, "regular rep freeness");
  auto z = Group::integers();
  s.record(cyclic_shift_rep(7).mult_defect(z->window(-3, 3), hamming_length_fn()).value == 0, "shift rep defect");
  auto h = Group::cyclic(4);
  const Rational delta = ratio(1, 8);
  for (std::uint64_t k = 0; k < 20; ++k) {
    auto sigma = corrupt(regular_rep(h, 10), delta, seed + k);
    s.record(sofic_level(sigma, h->elements()) <= 3 * delta, "corruption level above 3 delta");
  }
  return s;
}

NamedCheck wreath_construction(std::uint64_t seed) {
  auto s = suite("wreath-construction");
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(2, "t");
  std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, 1}}), 0), WreathElem(SupportedTuple(g, h), 1),
                            WreathElem(SupportedTuple(g, h, {{0, 1}, {1, 1}}), 1)};
  const Rational eps = ratio(12, 25);
  const auto params = derive_params(g, h, F, eps, constant_margin(ratio(1, 2)));
  for (std::uint64_t k = 0; k < 5; ++k) {
    auto sigma = corrupt(regular_rep(h, 500), params.eps_prime / 4, seed + k);
    auto r = sofic_pipeline(regular_rep(g), sigma, F, eps);
    s.record(r.cert.hypotheses_hold, "corrupted sigma: hypotheses");
    s.record(r.cert.verdict == Verdict::pass, "corrupted sigma: Theta verdict");
    s.record(r.cert.good_set_bound, "corrupted sigma: |B \\ B_E| bound");
  }
  return s;
}

NamedCheck sym_embedding(std::uint64_t seed) {
  auto s = suite("sym-embedding");
  std::mt19937_64 rng = seeded_engine(seed, 5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t a = 1 + uniform_below(rng, 3), b = 1 + uniform_below(rng, 3);
    auto x = random_sym_wreath(rng, a, b);
    s.record(psi_sym(x, a).enumerated_hamming(1u << 12) == psi_hamming_formula(x), "product formula");
  }
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(3, "t");
  record_pipeline(s, sofic_pipeline(regular_rep(g), regular_rep(h), z2_z3_window(g, h), ratio(3, 10)), "Z/2 wr Z/3");
  return s;
}

NamedCheck unitary_embedding(std::uint64_t seed) {
  auto s = suite("unitary-embedding");
  std::mt19937_64 rng = seeded_engine(seed, 6);
  for (int t = 0; t < 40; ++t) {
    const std::size_t b = 1 + uniform_below(rng, 3);
    auto x = random_unitary_wreath(rng, 2, b);
    auto psi = psi_unitary(x, 2);
    auto m = psi.materialize(1u << 12);
    const double d = hs_norm(*m - CMatrix::Identity(m->rows(), m->cols()));
    s.record(std::abs(d * d - psi.norm_sq_formula()) <= tol::construction, "norm formula vs operator");
  }
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(2, "t");
  std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, 1}}), 0), WreathElem(SupportedTuple(g, h), 1)};
  record_pipeline(s, hyperlinear_pipeline(regular_unitary_rep(g), regular_rep(h), F, ratio(3, 10)), "Z/2 wr Z/2");
  return s;
}

NamedCheck rank_embedding(std::uint64_t seed) {
  auto s = suite("rank-embedding");
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    std::mt19937_64 rng = seeded_engine(seed, 70 + p);
    for (int t = 0; t < 20; ++t) {
      auto x = random_linear_wreath(f, rng, 2, 1 + uniform_below(rng, 3));
      auto r = psi_rank(x, f, 2, 1u << 10, kLinearDenseCap);
      s.record(r.explicit_value && *r.explicit_value == r.exact, "exact rank formula vs kernel");
      s.record(r.cycle_free_formula <= r.exact, "cycle-free formula is a lower bound");
    }
    for (int t = 0; t < 10; ++t) {
      auto a = random_invertible(f, 1 + uniform_below(rng, 3), rng);
      s.record(rkbar_length(f, a) == rkbar_length_bruteforce(f, a), "projective rank vs enumeration");
    }
  }
  auto g = Group::cyclic(3, "a");
  auto d = doubling(regular_linear_rep(g, 3), g->elements(), Rational(0));
  s.record(d.report.precondition && d.report.case_split && d.report.margins_ok, "doubling margins");
  auto h = Group::cyclic(3, "t");
  std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, 1}}), 0), WreathElem(SupportedTuple(g, h), 1)};
  record_pipeline(s, linearsofic_pipeline(d.map, regular_rep(h), F, ratio(3, 10)), "Z/3 wr Z/3 over F_3");
  return s;
}

NamedCheck weakly_sofic() {
  auto s = suite("weakly-sofic");
  auto k = quaternion_metric();
  auto g = k.group();
  auto h = Group::cyclic(2, "t");
  auto ell = k.length_fn();
  std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, g->parse("i")}}), 0), WreathElem(SupportedTuple(g, h), 1),
                            WreathElem(SupportedTuple(g, h, {{0, g->parse("k")}, {1, g->parse("-1")}}), 1)};
  record_pipeline(s, weaklysofic_pipeline(identity_embedding(k), regular_rep(h), F, ratio(1, 5), [ell](Elem x) { return ell(x); }),
                  "Q8 wr Z/2");
  return s;
}

NamedCheck jordan(std::uint64_t seed) {
  auto s = suite("jordan-table");
  const auto t = jordan_table(5, 3, 25, seed);
  for (const auto& r : t.rows)
    s.record(r.all_min, "p=" + std::to_string(r.p) + " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k));
  return s;
}

NamedCheck table_fixture(const std::filesystem::path& path) {
  auto s = suite("table fixture " + path.filename().string());
  GroupSpec spec;
  spec.kind = GroupKindSpec::table;
  spec.file = path.string();
  try {
    const auto built = build_group(spec);
    if (!built.lengths) {
      s.record(false, "no \"lengths\" in the table file");
      return s;
    }
    record_laws(s, TableMetricGroup::audit(built.group, *built.lengths), "length table");
  } catch (const std::exception& e) {
    s.record(false, e.what());
  }
  return s;
}

}  // namespace

std::vector<NamedCheck> selftest(const SelftestOptions& opts) {
  std::vector<NamedCheck> out;
  out.push_back(groups_core(opts.seed));
  out.push_back(metric_groups(opts.seed));
  out.push_back(approx_maps(opts.seed));
  out.push_back(wreath_construction(opts.seed));
  out.push_back(sym_embedding(opts.seed));
  out.push_back(unitary_embedding(opts.seed));
  out.push_back(rank_embedding(opts.seed));
  out.push_back(weakly_sofic());
  out.push_back(jordan(opts.seed));
  if (opts.table_fixture) out.push_back(table_fixture(*opts.table_fixture));
  return out;
}

std::string format_selftest(const std::vector<NamedCheck>& suites) {
  std::ostringstream out;
  std::size_t red = 0;
  for (const auto& s : suites) {
    out << (s.ok() ? "green  " : "RED    ") << s.name << "  (" << s.instances << " checks";
    if (!s.ok()) {
      out << ", " << s.failures << " failed; first: " << s.first_failure;
      ++red;
    }
    out << ")\n";
  }
  out << "selftest: " << (red ? std::to_string(red) + " red" : std::string("all green")) << "\n";
  return out.str();
}

}  // namespace wreathcert
