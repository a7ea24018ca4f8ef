#include <doctest.h>

#include "wreathcert/weakly_sofic.hpp"

using namespace wreathcert;

TEST_CASE("quaternion length table") {
  auto k = quaternion_metric();
  auto q = k.group();
  auto ell = k.length_fn();
  CHECK(ell(q->parse("1")) == 0);
  CHECK(ell(q->parse("-1")) == ratio(1, 2));
  CHECK(ell(q->parse("i")) == ratio(3, 4));
  CHECK(ell(q->parse("-j")) == ratio(3, 4));
  CHECK(ell(q->parse("k")) == 1);
  CHECK(TableMetricGroup::audit(q, {0, ratio(1, 2), ratio(3, 4), ratio(3, 4), ratio(3, 4), ratio(3, 4), 1, 1}).ok());
}

TEST_CASE("capped sum length") {
  auto k = quaternion_metric();
  auto q = k.group();
  auto ell = capped_sum_length_fn(k.length_fn());
  const Elem minus = q->parse("-1"), i = q->parse("i");
  CHECK(ell(SparseFamily<Elem>{}) == 0);
  CHECK(ell(SparseFamily<Elem>{{{3, minus}}}) == ratio(1, 2));  // restricts to ell
  CHECK(ell(SparseFamily<Elem>{{{0, minus}, {1, minus}}}) == 1);
  CHECK(ell(SparseFamily<Elem>{{{0, minus}, {1, i}}}) == 1);  // capped

  DirectSum<TableMetricGroup> sum(k, 3);
  std::vector<std::array<SparseFamily<Elem>, 3>> triples;
  for (Elem a : q->elements())
    for (Elem b : q->elements())
      triples.push_back({SparseFamily<Elem>{{{0, a}, {2, b}}}, SparseFamily<Elem>{{{1, b}}},
                         SparseFamily<Elem>{{{0, b}, {1, a}, {2, a}}}});
  auto laws = length_law_check(sum, ell, std::span<const std::array<SparseFamily<Elem>, 3>>(triples));
  CHECK(laws.ok());
}

TEST_CASE("weakly sofic pipeline") {
  auto k = quaternion_metric();
  auto g = k.group();
  auto theta = identity_embedding(k);
  auto ell = k.length_fn();
  MarginFunction c = [ell](Elem x) { return ell(x); };

  SUBCASE("Q8 wr Z/2") {
    auto h = Group::cyclic(2, "t");
    std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, g->parse("i")}}), 0),
                              WreathElem(SupportedTuple(g, h, {{1, g->parse("-1")}}), 0),
                              WreathElem(SupportedTuple(g, h), 1),
                              WreathElem(SupportedTuple(g, h, {{0, g->parse("k")}, {1, g->parse("j")}}), 1)};
    auto r = weaklysofic_pipeline(theta, regular_rep(h), F, ratio(1, 5), c);
    CHECK(r.cert.hypotheses_hold);
    CHECK(r.psi_defect == 0);
    CHECK(r.verdict == Verdict::pass);
    for (const auto& m : r.psi_margins) CHECK(m.margin >= m.required);
    for (const auto& chk : r.checks) {
      INFO(chk.name << ": " << chk.first_failure);
      CHECK(chk.ok());
      CHECK(chk.instances > 0);
    }
  }
  SUBCASE("Q8 wr Z/3") {
    auto h = Group::cyclic(3, "t");
    std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, g->parse("-1")}}), 0),
                              WreathElem(SupportedTuple(g, h, {{2, g->parse("-k")}}), 0),
                              WreathElem(SupportedTuple(g, h), 2)};
    auto r = weaklysofic_pipeline(theta, regular_rep(h), F, ratio(1, 5), c);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.psi_margins.size() == 3);
    // Every block of Theta(x) carries one -1: ell~ = ell(-1) = 1/2 against c' = ell(-1)/2.
    CHECK(r.psi_margins[0].required == ratio(1, 4));
    CHECK(r.psi_margins[0].margin == ratio(1, 2));
  }
}
