#include <doctest.h>

#include "wreathcert/almost_hom.hpp"
#include "wreathcert/approx_map.hpp"
#include "wreathcert/rng.hpp"
#include "wreathcert/sofic_approx.hpp"

using namespace wreathcert;

TEST_CASE("regular representations are exact and free") {
  auto z2 = Group::cyclic(2);
  auto rho = regular_rep(z2);
  CHECK(rho(0).is_identity());
  CHECK(rho(1) == Permutation::from_cycles(2, "(0 1)"));
  CHECK(rho.inj_margins({0, 1}, hamming_length_fn()).margins.at(0).second == 1);

  auto z6 = Group::cyclic(6);
  auto r6 = regular_rep(z6);
  CHECK(r6.mult_defect(z6->elements(), hamming_length_fn()).value == 0);
  for (auto [g, m] : r6.inj_margins(z6->elements(), hamming_length_fn()).margins) CHECK(m == 1);
  CHECK(is_free(r6, z6->elements(), ratio(1, 1000)));

  auto s3 = Group::symmetric(3);
  auto r3 = regular_rep(s3, 3);
  CHECK(r3.target().degree() == 18);
  CHECK(r3.mult_defect(s3->elements(), hamming_length_fn()).value == 0);
  CHECK(sofic_level(r3, s3->elements()) == 0);

  CHECK_THROWS_AS(regular_rep(Group::integers()), DomainError);
}

TEST_CASE("cyclic shift representation") {
  auto s5 = cyclic_shift_rep(5);
  CHECK(s5(2) == Permutation(std::vector<std::uint32_t>{2, 3, 4, 0, 1}));
  CHECK(s5.mult_defect({-1, 0, 1}, hamming_length_fn()).value == 0);
  CHECK(hamming_length(s5(5)) == 0);
  CHECK(hamming_length(s5(-7)) == 1);
  auto s7 = cyclic_shift_rep(7);
  CHECK(s7.inj_margins({3}, hamming_length_fn()).margins.at(0).second == 1);
  std::vector<Elem> window;
  for (Elem k = -6; k <= 6; ++k) window.push_back(k);
  CHECK(is_free(s7, window, ratio(1, 100)));
  window.push_back(7);
  CHECK_FALSE(is_free(s7, window, ratio(1, 2)));

  auto z3 = Group::cyclic(3, "t");
  auto on_z3 = cyclic_shift_rep(6, z3);
  CHECK(on_z3.mult_defect(z3->elements(), hamming_length_fn()).value == 0);
  CHECK_THROWS_AS(cyclic_shift_rep(4, z3), DomainError);
}

TEST_CASE("partial maps and the identity contract") {
  auto z3 = Group::cyclic(3);
  std::map<Elem, Permutation> table{{0, Permutation(3)}, {1, Permutation::from_cycles(3, "(0 1 2)")}};
  auto partial = SoficMap::from_table(z3, SymGroup(3), table);
  CHECK(partial(1) == table.at(1));
  CHECK_THROWS_AS(partial(2), ContractError);
  CHECK_THROWS_AS(partial.mult_defect({1}, hamming_length_fn()), ContractError);

  std::map<Elem, Permutation> bad{{0, Permutation::from_cycles(3, "(0 1)")}};
  CHECK_THROWS_AS(SoficMap::from_table(z3, SymGroup(3), bad), DomainError);

  auto trivial = SoficMap(z3, SymGroup(4), [](Elem) { return Permutation(4); });
  CHECK(trivial.inj_margins({0, 1, 2}, hamming_length_fn()).min() == Rational(0));
  CHECK_FALSE(is_free(trivial, {1}, ratio(1, 2)));
}

TEST_CASE("corruption") {
  auto z8 = Group::cyclic(8);
  auto rho = regular_rep(z8);
  auto same = corrupt(rho, 0, 3);
  for (Elem g : z8->elements()) CHECK(same(g) == rho(g));

  auto z40 = Group::cyclic(40);
  auto r40 = regular_rep(z40);
  const Rational delta = ratio(1, 8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto bad = corrupt(r40, delta, seed);
    auto d = bad.mult_defect(z40->elements(), hamming_length_fn()).value;
    CHECK(d > 0);
    CHECK(d <= 3 * delta);
    for (Elem g : z40->elements())
      CHECK(hamming_distance(bad(g), r40(g)) <= delta);
    CHECK(bad(0).is_identity());
  }
  auto a = corrupt(r40, delta, 9), b = corrupt(r40, delta, 9), c = corrupt(r40, delta, 10);
  bool differs = false;
  for (Elem g : z40->elements()) {
    CHECK(a(g) == b(g));
    differs = differs || a(g) != c(g);
  }
  CHECK(differs);
  // Query order does not matter.
  auto d1 = corrupt(r40, delta, 4);
  auto d2 = corrupt(r40, delta, 4);
  Permutation late = d2(17);
  for (Elem g = 0; g < 17; ++g) (void)d1(g);
  CHECK(d1(17) == late);

  auto r8 = regular_rep(z8);
  auto mild = corrupt(r8, ratio(1, 10), 1);
  CHECK(mild.mult_defect(z8->elements(), hamming_length_fn()).value <= ratio(3, 10));
  CHECK_THROWS_AS(corrupt(r8, 1, 0), DomainError);
}

TEST_CASE("mult defect is monotone in F") {
  auto z12 = Group::cyclic(12);
  auto bad = corrupt(regular_rep(z12, 5), ratio(1, 6), 2);
  std::vector<Elem> small{0, 1, 2}, large{0, 1, 2, 5, 7, 11};
  auto ell = hamming_length_fn();
  auto ds = bad.mult_defect(small, ell), dl = bad.mult_defect(large, ell);
  CHECK(ds.value <= dl.value);
  REQUIRE(dl.witness);
  auto [g, h] = *dl.witness;
  CHECK(distance(bad.target(), ell, bad(z12->mul(g, h)), bad(g) * bad(h)) == dl.value);
}

TEST_CASE("almost-homomorphism criterion") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(3, "t");
  std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, 1}}), 0),
                            WreathElem(SupportedTuple(g, h), 1)};
  auto sets = lemma_sets(g, h, F);
  CHECK(sets.F0.size() == 4);  // 1, x, y, y^-1 (x is an involution)
  CHECK(sets.E2 == std::vector<Elem>{0, 1, 2});
  CHECK(sets.E1.size() == 4);  // empty tuple and the three shifts of {1:a}

  SymGroup k(6);
  auto ell = hamming_length_fn();
  SUBCASE("constant map") {
    auto one = [](const WreathElem&) { return Permutation(6); };
    auto r = almosthomom_check(one, g, h, F, ratio(1, 10), k, ell);
    CHECK(r.hypotheses_hold());
    CHECK(r.conclusion == 0);
  }
  SUBCASE("a true homomorphism through the regular action of G wr H") {
    // G wr Z/3 acts on G^3 x Z/3 as (g, h)(v, x) = (g alpha_h v, h x); encode v as bits.
    auto act = [g, h](const WreathElem& w) {
      std::vector<std::uint32_t> img(24);
      for (std::uint32_t v = 0; v < 8; ++v)
        for (std::uint32_t x = 0; x < 3; ++x) {
          std::map<Elem, Elem> m;
          for (Elem i = 0; i < 3; ++i) m[i] = (v >> i) & 1;
          WreathElem p(SupportedTuple(g, h, m), x);
          WreathElem q = wreath_mul(w, p);
          std::uint32_t v2 = 0;
          for (Elem i = 0; i < 3; ++i) v2 |= static_cast<std::uint32_t>(q.tuple().at(i)) << i;
          img[v * 3 + x] = v2 * 3 + static_cast<std::uint32_t>(q.top());
        }
      return Permutation(img);
    };
    auto r = almosthomom_check(act, g, h, F, ratio(1, 10), SymGroup(24), ell);
    CHECK(r.base_defect == 0);
    CHECK(r.top_defect == 0);
    CHECK(r.splitting == 0);
    CHECK(r.equivariance == 0);
    CHECK(r.conclusion == 0);
  }
  SUBCASE("a map violating the splitting hypothesis is flagged") {
    auto mixed = [](const WreathElem& w) {
      if (!w.tuple().empty() && w.top() != 0) {
        auto rng = seeded_engine(42, static_cast<std::uint64_t>(w.top()));
        std::vector<std::uint32_t> img{0, 1, 2, 3, 4, 5};
        for (std::size_t i = 6; i > 1; --i) std::swap(img[i - 1], img[uniform_below(rng, i)]);
        if (Permutation(img).is_identity()) std::swap(img[0], img[1]);
        return Permutation(img);
      }
      return Permutation(6);
    };
    auto r = almosthomom_check(mixed, g, h, F, ratio(1, 10), k, ell);
    CHECK(r.base_defect == 0);
    CHECK(r.top_defect == 0);
    CHECK(r.splitting > 0);
    CHECK(std::find(r.violated.begin(), r.violated.end(), "splitting") != r.violated.end());
    CHECK_FALSE(r.hypotheses_hold());
  }
}
