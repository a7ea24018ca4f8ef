#include <doctest.h>

#include <random>

#include "wreathcert/samplers.hpp"

using namespace wreathcert;

TEST_CASE("phi_sym") {
  CHECK(phi_sym({}, 3, 2, 100).is_identity());
  PermFamily f;
  f.entries.emplace(0, Permutation::from_cycles(2, "(0 1)"));
  auto p = phi_sym(f, 2, 2, 100);
  // Coordinate 0 is the low digit: every tuple has its first coordinate flipped.
  CHECK(p == Permutation(std::vector<std::uint32_t>{1, 0, 3, 2}));
  CHECK(p.fixed_points() == 0);

  PermFamily mixed;
  mixed.entries.emplace(0, Permutation(2));
  mixed.entries.emplace(1, Permutation(3));
  CHECK_THROWS_AS(phi_sym(mixed, 2, 2, 100), DomainError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto fam = random_perm_family(rng, 3, 3);
    CHECK(hamming_length(phi_sym(fam, 3, 3, 1000)) == phi_hamming(fam));
  }
}

TEST_CASE("psi_sym is a homomorphism and matches the product formula") {
  DirectSum<SymGroup> inner(SymGroup(2), 2);
  WreathGroup<DirectSum<SymGroup>> w(inner, 2);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto x = random_sym_wreath(rng, 2, 2), y = random_sym_wreath(rng, 2, 2);
    auto px = psi_sym(x, 2).materialize(100);
    auto py = psi_sym(y, 2).materialize(100);
    auto pxy = psi_sym(w.mul(x, y), 2).materialize(100);
    REQUIRE(px);
    CHECK(px->degree() == 8);
    CHECK(*pxy == *px * *py);
    CHECK(hamming_length(*px) == psi_hamming_formula(x));
    CHECK(psi_hamming_formula(x) >= wreath_length(x, max_length_fn(hamming_length_fn())));
  }
  CHECK(psi_hamming_formula(w.identity()) == 0);
  CHECK(psi_sym(w.identity(), 2).materialize(100)->is_identity());
}

TEST_CASE("product formula example with 18-point enumeration") {
  SymWreathElem x{{}, Permutation(2)};
  PermFamily f;
  f.entries.emplace(0, Permutation::from_cycles(3, "(0 1 2)"));
  x.family.entries.emplace(0, f);
  CHECK(psi_hamming_formula(x) == ratio(1, 2));
  auto big = psi_sym(x, 3);
  CHECK(*big.carrier_size() == 18);
  CHECK(*big.enumerated_hamming(100) == ratio(1, 2));
  CHECK_FALSE(big.materialize(10));
}

TEST_CASE("Psi is injective on distinct small inputs") {
  DirectSum<SymGroup> inner(SymGroup(2), 2);
  WreathGroup<DirectSum<SymGroup>> w(inner, 2);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto x = random_sym_wreath(rng, 2, 2), y = random_sym_wreath(rng, 2, 2);
    if (w.equal(x, y)) continue;
    CHECK(*psi_sym(x, 2).materialize(100) != *psi_sym(y, 2).materialize(100));
  }
}

TEST_CASE("sofic pipeline") {
  SUBCASE("Z/2 wr Z/3, exact") {
    auto g = Group::cyclic(2, "a");
    auto h = Group::cyclic(3, "t");
    std::vector<WreathElem> F{
        WreathElem(SupportedTuple(g, h, {{0, 1}}), 0), WreathElem(SupportedTuple(g, h), 1),
        WreathElem(SupportedTuple(g, h, {{1, 1}, {2, 1}}), 2)};
    auto r = sofic_pipeline(regular_rep(g), regular_rep(h), F, ratio(3, 10), {.cap = 1u << 12});
    CHECK(r.psi_defect == 0);
    CHECK(r.verdict == Verdict::pass);
    for (const auto& m : r.psi_margins) {
      CHECK(m.required == (m.element.top() != 0 ? ratio(1, 2) : ratio(1, 4)));
      CHECK(m.margin >= m.required);
    }
    CHECK(r.checks.at(0).instances > 0);  // |A|^|B| |B| = 24 is materialized
  }
  SUBCASE("Z/3 wr Z via shifts of 50 points") {
    auto g = Group::cyclic(3, "a");
    auto h = Group::integers();
    std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, 1}, {2, 2}}), 0),
                              WreathElem(SupportedTuple(g, h, {{-1, 2}}), 1)};
    auto r = sofic_pipeline(regular_rep(g), cyclic_shift_rep(50), F, ratio(3, 10));
    CHECK(r.psi_defect == 0);
    CHECK(r.verdict == Verdict::pass);
  }
}
