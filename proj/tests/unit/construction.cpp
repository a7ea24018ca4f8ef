#include <doctest.h>

#include "wreathcert/construction.hpp"
#include "wreathcert/sym_embedding.hpp"

using namespace wreathcert;

namespace {

WreathElem we(const GroupPtr& g, const GroupPtr& h, std::map<Elem, Elem> m, Elem top) {
  return WreathElem(SupportedTuple(g, h, m), top);
}

TargetMetrics<SymGroup, Rational> sofic_metrics() {
  return {hamming_length_fn(), hamming_length_fn(), phi_hamming_length_fn()};
}

}  // namespace

TEST_CASE("derive_params on the two-element example") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(2, "t");
  std::vector<WreathElem> F{we(g, h, {{0, 1}}, 0), we(g, h, {}, 1)};
  auto p = derive_params(g, h, F, parse_rational("0.48"), constant_margin(ratio(1, 2)));
  CHECK(p.E == std::vector<Elem>{0, 1});
  CHECK(p.E_G == std::vector<Elem>{1});
  CHECK(p.E_H == std::vector<Elem>{0, 1});
  CHECK(p.bound_mult == ratio(1, 400));
  CHECK(p.bound_inj == ratio(1, 128));
  CHECK(p.eps_prime == ratio(9, 4000));
  CHECK(p.kappa == 4 * 4 * ratio(9, 4000));
  CHECK(p.c_prime(we(g, h, {}, 1)) == ratio(1, 2));
  CHECK(p.c_prime(we(g, h, {{0, 1}}, 0)) == ratio(1, 4));
  CHECK_THROWS_AS(p.c_prime(we(g, h, {}, 0)), ContractError);
  // The inequalities the derived parameters promise.
  CHECK(p.eps_prime < p.epsilon / (48 * 4));
  CHECK(p.eps_prime < ratio(1, 2) / (16 * 4));
}

TEST_CASE("derive_params edge cases") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::integers();
  auto p = derive_params(g, h, {}, ratio(1, 2), constant_margin(ratio(1, 2)));
  CHECK(p.E == std::vector<Elem>{0});
  CHECK(p.E_G.empty());
  CHECK(p.bound_inj == ratio(1, 16));
  auto only_one = derive_params(g, h, {WreathElem::identity(g, h)}, ratio(1, 2), constant_margin(1));
  CHECK(only_one.E == std::vector<Elem>{0});
  CHECK_THROWS_AS(derive_params(g, h, {}, 0, constant_margin(1)), DomainError);
  std::vector<WreathElem> F{we(g, h, {{3, 1}}, 2)};
  CHECK_THROWS_AS(derive_params(g, h, F, ratio(1, 2), constant_margin(0)), DomainError);
  auto q = derive_params(g, h, F, ratio(1, 2), constant_margin(ratio(1, 2)));
  // F0 = {1, ({3:a},2), ({1:a},-2)}; E2 = {-2,0,2}; supports of E1 shifted by E2 cover 1..7 and -3..3.
  for (Elem x : {-2, 0, 2, 3, 1, 5, -1, -3, 7}) CHECK(std::count(q.E.begin(), q.E.end(), x) == 1);
  for (Elem a : q.E)
    for (Elem b : q.E) CHECK(std::count(q.E_H.begin(), q.E_H.end(), b - a) == 1);
}

TEST_CASE("compute_BE") {
  auto h = Group::cyclic(3, "t");
  auto rho = regular_rep(h, 4);
  CHECK(compute_BE(rho, {0, 1, 2}).size == 12);

  auto constant = SoficMap(h, SymGroup(5), [](Elem) { return Permutation(5); });
  auto s = compute_BE(constant, {1, 2});
  CHECK(s.size == 0);
  CHECK(s.outside_b1 == 5);

  auto z = Group::integers();
  auto shift = cyclic_shift_rep(300);
  std::vector<Elem> E{-2, -1, 0, 1, 2};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto bad = corrupt(shift, ratio(1, 100), seed);
    std::vector<Elem> eh;
    for (Elem a : E)
      for (Elem b : E)
        if (std::find(eh.begin(), eh.end(), b - a) == eh.end()) eh.push_back(b - a);
    Rational level = sofic_level(bad, eh);
    auto good = compute_BE(bad, E);
    CHECK(Rational(static_cast<unsigned long>(300 - good.size)) <= 4 * 25 * level * 300);
  }
}

TEST_CASE("theta_b and Theta") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(2, "t");
  ThetaBundle<SymGroup> bundle(regular_rep(g), regular_rep(h), {0, 1});
  SupportedTuple ga(g, h, {{0, 1}});
  auto fam = bundle.theta_b(0, ga);
  REQUIRE(fam.entries.size() == 1);
  CHECK(fam.entries.begin()->first == 0);
  CHECK(fam.entries.begin()->second == Permutation::from_cycles(2, "(0 1)"));
  CHECK(bundle.theta_b(0, SupportedTuple(g, h)).empty());

  auto id = bundle(WreathElem::identity(g, h));
  CHECK(bundle.target().equal(id, bundle.target().identity()));

  // Supports outside E map to the identity family.
  ThetaBundle<SymGroup> narrow(regular_rep(g), regular_rep(h), {0});
  auto x = narrow(we(g, h, {{1, 1}}, 1));
  CHECK(x.family.empty());
  CHECK(x.tau == Permutation::from_cycles(2, "(0 1)"));
  CHECK_THROWS_AS(narrow.theta_b(0, SupportedTuple(g, h, {{1, 1}})), ContractError);

  // b outside B_E gives the identity family.
  auto constant = SoficMap(h, SymGroup(2), [](Elem) { return Permutation(2); });
  ThetaBundle<SymGroup> collapsed(regular_rep(g), constant, {0, 1});
  CHECK(collapsed.good().size == 0);
  CHECK(collapsed.theta_b(1, ga).empty());
}

TEST_CASE("theta_b factors commute and Theta is equivariant") {
  auto g = Group::symmetric(3);
  auto h = Group::integers();
  std::vector<WreathElem> F{we(g, h, {{0, 1}}, 1), we(g, h, {{0, 2}, {1, 3}}, 0)};
  auto p = derive_params(g, h, F, ratio(1, 2), constant_margin(ratio(1, 2)));
  auto sigma = corrupt(cyclic_shift_rep(200), ratio(1, 50), 7);
  ThetaBundle<SymGroup> bundle(regular_rep(g), sigma, p.E);
  REQUIRE(bundle.good().size < 200);
  REQUIRE(bundle.good().size > 0);
  SupportedTuple t(g, h, {{-2, 1}, {0, 3}, {1, 4}, {2, 5}});
  for (std::uint32_t b = 0; b < 200; ++b)
    CHECK(bundle.inner().equal(bundle.theta_b(b, t), bundle.theta_b(b, t, true)));

  CHECK(equivariance_failures(bundle, p.lemma) == 0);
}

TEST_CASE("certify: exact inputs") {
  SUBCASE("Z/2 wr Z/3") {
    auto g = Group::cyclic(2, "a");
    auto h = Group::cyclic(3, "t");
    std::vector<WreathElem> F{we(g, h, {{0, 1}}, 0), we(g, h, {}, 1), we(g, h, {{1, 1}, {2, 1}}, 2)};
    auto p = derive_params(g, h, F, ratio(3, 10), constant_margin(ratio(1, 2)));
    auto cert = certify(regular_rep(g), regular_rep(h), p, sofic_metrics());
    CHECK(cert.hypotheses_hold);
    CHECK(cert.defect == 0);
    CHECK(cert.good.size == 3);
    CHECK(cert.lemma.conclusion == 0);
    CHECK(cert.lemma.hypotheses_hold());
    CHECK(cert.equivariance_failures == 0);
    CHECK(cert.verdict == Verdict::pass);
    for (const auto& m : cert.margins) CHECK(m.margin >= m.required);
  }
  SUBCASE("Z/2 wr Z with a shift window") {
    auto g = Group::cyclic(2, "a");
    auto h = Group::integers();
    std::vector<WreathElem> F{we(g, h, {{-1, 1}, {1, 1}}, 0), we(g, h, {{0, 1}}, 1)};
    auto p = derive_params(g, h, F, ratio(3, 10), constant_margin(ratio(1, 2)));
    auto cert = certify(regular_rep(g), cyclic_shift_rep(101), p, sofic_metrics());
    CHECK(cert.defect == 0);
    CHECK(cert.verdict == Verdict::pass);
  }
}

TEST_CASE("certify: unmet hypotheses are reported, not asserted") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(3, "t");
  std::vector<WreathElem> F{we(g, h, {{0, 1}}, 1)};
  auto p = derive_params(g, h, F, ratio(3, 10), constant_margin(ratio(1, 2)));
  auto constant = SoficMap(h, SymGroup(3), [](Elem) { return Permutation(3); });
  auto cert = certify(regular_rep(g), constant, p, sofic_metrics());
  CHECK_FALSE(cert.sigma_sofic);
  CHECK(cert.verdict == Verdict::hypotheses_unmet);
}

TEST_CASE("certify: corrupted sigma within eps'") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(2, "t");
  std::vector<WreathElem> F{we(g, h, {{0, 1}}, 0), we(g, h, {}, 1)};
  auto p = derive_params(g, h, F, parse_rational("0.48"), constant_margin(ratio(1, 2)));
  auto base = regular_rep(h, 2000);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto sigma = corrupt(base, p.eps_prime / 4, seed);
    auto cert = certify(regular_rep(g), sigma, p, sofic_metrics());
    CHECK(cert.hypotheses_hold);
    CHECK(cert.good.size < 4000);
    CHECK(cert.good_set_bound);
    CHECK(cert.defect > 0);
    CHECK(cert.verdict == Verdict::pass);
    CHECK(cert.lemma.hypotheses_hold());
    CHECK(cert.lemma.conclusion < p.epsilon);
  }
}
