#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wreathcert/length_laws.hpp"
#include "wreathcert/samplers.hpp"

using namespace wreathcert;

namespace {

CMatrix diag(std::initializer_list<Complex> d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  Eigen::Index i = 0;
  for (auto z : d) m(i, i) = z, ++i;
  return m;
}

}  // namespace

TEST_CASE("Hilbert-Schmidt lengths") {
  const Complex i(0, 1);
  CHECK(hsbar_length(diag({i, i, i})) == doctest::Approx(0).epsilon(1e-12));
  CHECK(hsbar_length(diag({1, -1})) == doctest::Approx(std::numbers::sqrt2));
  CHECK(hsbar_length(diag({1, i})) == doctest::Approx(std::sqrt(2 - std::numbers::sqrt2)));
  CHECK(hs_length(diag({-1, -1})) == doctest::Approx(2));
  CHECK(hs_length(diag({1, 1})) == 0);
  CHECK_THROWS_AS(hs_length(diag({1, 2})), DomainError);
  CHECK(hsbar_distance(diag({i, -i}), diag({1, -1})) == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("random unitaries are unitary and seed-determined") {
  std::mt19937_64 a(7), b(7);
  for (std::size_t n : {1u, 2u, 5u}) {
    auto u = random_unitary(n, a);
    CHECK(unitarity_defect(u) < 1e-12);
    CHECK(u.isApprox(random_unitary(n, b)));
  }
}

TEST_CASE("HS length laws on random unitaries") {
  std::mt19937_64 rng(3);
  UnitaryGroup g(3);
  std::vector<std::array<CMatrix, 3>> triples;
  for (int k = 0; k < 40; ++k)
    triples.push_back({random_unitary(3, rng), random_unitary(3, rng), random_unitary(3, rng)});
  triples.push_back({g.identity(), diag({1, -1, 1}), random_unitary(3, rng)});
  CHECK(length_law_check(g, half_hs_length_fn(), triples, 1e-9).ok());
  CHECK(length_law_check(g, scaled_hsbar_length_fn(), triples, 1e-9).ok());
}

TEST_CASE("tensor product trace and norm") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    auto f = random_unitary_family(rng, 2, 3);
    auto m = tensor_phi(f, 2, 3, 64);
    CHECK(m.rows() == 8);
    CHECK(std::abs(normalized_trace(m) - tensor_trace(f)) < 1e-10);
    const double d = hs_norm(m - CMatrix::Identity(8, 8));
    CHECK(d * d == doctest::Approx(phi_hs_squared(f)));
  }
  UnitaryFamily f;
  f.entries.emplace(0, diag({1, -1}));
  CHECK(tensor_phi(f, 2, 2, 4).isApprox(diag({1, 1, -1, -1})));
  f.entries.clear();
  f.entries.emplace(1, diag({1, -1}));
  CHECK(tensor_phi(f, 2, 2, 4).isApprox(diag({1, -1, 1, -1})));
  CHECK_THROWS_AS(tensor_phi(f, 2, 3, 4), DomainError);
}

TEST_CASE("block operator") {
  SUBCASE("a |B|-cycle has trace 0 and squared distance 2") {
    std::vector<std::uint32_t> img{1, 2, 3, 0};
    BlockUnitary p({{}, Permutation(img)}, 2);
    CHECK(std::abs(p.trace()) == 0);
    CHECK(p.norm_sq_formula() == doctest::Approx(2));
    auto m = p.materialize(1u << 10);
    REQUIRE(m);
    const double d = hs_norm(*m - CMatrix::Identity(m->rows(), m->cols()));
    CHECK(d * d == doctest::Approx(2));
  }
  SUBCASE("homomorphism and formula agreement on random elements") {
    std::mt19937_64 rng(5);
    WreathGroup<DirectSum<UnitaryGroup>> w(DirectSum<UnitaryGroup>(UnitaryGroup(2), 3), 3);
    for (int k = 0; k < 8; ++k) {
      auto x = random_unitary_wreath(rng, 2, 3), y = random_unitary_wreath(rng, 2, 3);
      auto mx = *psi_unitary(x, 2).materialize(1u << 10);
      auto my = *psi_unitary(y, 2).materialize(1u << 10);
      auto mxy = *psi_unitary(w.mul(x, y), 2).materialize(1u << 10);
      CHECK(unitarity_defect(mx) < 1e-10);
      CHECK((mx * my - mxy).cwiseAbs().maxCoeff() < 1e-10);
      const double d = hs_norm(mx - CMatrix::Identity(mx.rows(), mx.cols()));
      CHECK(d * d == doctest::Approx(psi_unitary(x, 2).norm_sq_formula()));
      CHECK(std::abs(normalized_trace(mx) - psi_unitary(x, 2).trace()) < 1e-10);
    }
  }
}

TEST_CASE("regular unitary representation") {
  auto g = Group::cyclic(4, "a");
  auto rho = regular_unitary_rep(g);
  CHECK(rho.mult_defect(std::vector<Elem>{0, 1, 2, 3}, half_hs_length_fn()).value < 1e-12);
  for (Elem x = 1; x < 4; ++x) CHECK(std::abs(normalized_trace(rho(x))) == 0);
}

TEST_CASE("hyperlinear pipeline") {
  SUBCASE("Z/2 wr Z/2, exact") {
    auto g = Group::cyclic(2, "a");
    auto h = Group::cyclic(2, "t");
    std::vector<WreathElem> F{WreathElem(SupportedTuple(g, h, {{0, 1}}), 0),
                              WreathElem(SupportedTuple(g, h), 1),
                              WreathElem(SupportedTuple(g, h, {{0, 1}, {1, 1}}), 1)};
    auto r = hyperlinear_pipeline(regular_unitary_rep(g), regular_rep(h), F, ratio(3, 10),
                                  {.cap = 1u << 10});
    CHECK(r.psi_defect < 1e-9);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.psi_injective);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.first_failure);
      CHECK(c.ok());
    }
    CHECK(r.figures.size() == 2);
  }
}
