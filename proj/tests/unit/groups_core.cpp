#include <doctest.h>

#include <random>

#include "wreathcert/errors.hpp"
#include "wreathcert/group.hpp"
#include "wreathcert/wreath.hpp"

using namespace wreathcert;

namespace {

SupportedTuple tup(const GroupPtr& g, const GroupPtr& h, std::map<Elem, Elem> m) {
  return SupportedTuple(g, h, m);
}

// Enumerates every element of G wr H supported on the first `window` elements of a finite H.
std::vector<WreathElem> all_elements(const GroupPtr& g, const GroupPtr& h) {
  std::vector<WreathElem> out;
  const auto hs = h->elements();
  const std::size_t n = g->order();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < hs.size(); ++i) combos *= n;
  for (std::size_t code = 0; code < combos; ++code) {
    std::map<Elem, Elem> m;
    std::size_t c = code;
    for (Elem x : hs) {
      m[x] = static_cast<Elem>(c % n);
      c /= n;
    }
    for (Elem top : hs) out.emplace_back(tup(g, h, m), top);
  }
  return out;
}

}  // namespace

TEST_CASE("group constructors satisfy the axioms") {
  auto z6 = Group::cyclic(6);
  CHECK(z6->order() == 6);
  CHECK(z6->mul(z6->parse("a^4"), z6->parse("a^3")) == z6->parse("a"));
  CHECK(z6->inv(z6->parse("a^2")) == z6->parse("a^4"));
  CHECK(z6->name(1) == "a");

  auto s3 = Group::symmetric(3);
  CHECK(s3->order() == 6);
  auto s4 = Group::symmetric(4);
  CHECK(s4->order() == 24);
  for (auto grp : {s3, Group::quaternion()})
    for (Elem a : grp->elements()) {
      CHECK(grp->mul(a, grp->inv(a)) == grp->identity());
      for (Elem b : grp->elements())
        for (Elem c : grp->elements())
          CHECK(grp->mul(grp->mul(a, b), c) == grp->mul(a, grp->mul(b, c)));
    }

  auto q8 = Group::quaternion();
  CHECK(q8->mul(q8->parse("i"), q8->parse("j")) == q8->parse("k"));
  CHECK(q8->mul(q8->parse("j"), q8->parse("i")) == q8->parse("-k"));
  CHECK(q8->mul(q8->parse("i"), q8->parse("i")) == q8->parse("-1"));

  auto z = Group::integers();
  CHECK(z->mul(3, -5) == -2);
  CHECK(z->inv(7) == -7);
  CHECK(z->parse("-12") == -12);
  CHECK_THROWS_AS(z->order(), DomainError);
  CHECK(z->window(-2, 2).size() == 5);
}

TEST_CASE("multiplication tables are validated") {
  CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 1}}, {"1", "x"}), DomainError);
  CHECK_THROWS_AS(Group::from_table({{0, 1}, {1, 0}, {0, 1}}, {"1", "x", "y"}), DomainError);
  auto g = Group::from_table({{0, 1}, {1, 0}}, {"e", "x"});
  CHECK(g->mul(1, 1) == 0);
  CHECK_THROWS_AS(g->parse("y"), ParseError);
}

TEST_CASE("alpha_shift") {
  auto g = Group::cyclic(2);
  auto hz = Group::integers();
  SUBCASE("identity shift") {
    auto t = tup(g, hz, {{0, 1}, {4, 1}});
    CHECK(alpha_shift(0, t) == t);
  }
  SUBCASE("integers") {
    CHECK(alpha_shift(3, tup(g, hz, {{0, 1}})) == tup(g, hz, {{3, 1}}));
  }
  SUBCASE("Z/2 index") {
    auto gb = Group::cyclic(3, "a");  // a and b = a^2 are distinct non-identity values
    auto h2 = Group::cyclic(2, "t");
    auto t = tup(gb, h2, {{0, 1}, {1, 2}});
    CHECK(alpha_shift(1, t) == tup(gb, h2, {{0, 2}, {1, 1}}));
  }
  SUBCASE("action law and supports") {
    auto h = Group::cyclic(5, "t");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::map<Elem, Elem> m;
      for (Elem x = 0; x < 5; ++x) m[x] = static_cast<Elem>(rng() % 2);
      auto t = tup(g, h, m);
      Elem h1 = static_cast<Elem>(rng() % 5), h2 = static_cast<Elem>(rng() % 5);
      CHECK(alpha_shift(h->mul(h1, h2), t) == alpha_shift(h1, alpha_shift(h2, t)));
      std::set<Elem> moved;
      for (Elem x : t.support()) moved.insert(h->mul(h1, x));
      CHECK(alpha_shift(h1, t).support() == moved);
    }
  }
  SUBCASE("mismatched ambients") {
    auto t = tup(g, Group::cyclic(3, "t"), {{1, 1}});
    CHECK_THROWS_AS(alpha_shift(7, t), DomainError);
  }
}

TEST_CASE("wreath multiplication") {
  auto g = Group::cyclic(2, "a");
  auto h = Group::cyclic(2, "t");
  WreathElem x(tup(g, h, {{0, 1}}), 0);
  WreathElem top(tup(g, h, {}), 1);
  CHECK(wreath_mul(x, x) == WreathElem::identity(g, h));
  CHECK(wreath_mul(top, x) == WreathElem(tup(g, h, {{1, 1}}), 1));
  CHECK(wreath_mul(x, x.inverse()).is_identity());
  CHECK(proj_G(x) == tup(g, h, {{0, 1}}));
  CHECK(proj_H(top) == 1);
  CHECK(x.to_string() == "{1:a}; 1");

  auto other = Group::cyclic(2, "t");
  WreathElem y(tup(g, other, {}), 1);
  CHECK_THROWS_AS(wreath_mul(x, y), DomainError);
}

TEST_CASE("wreath product laws, exhaustive on Z/2 wr Z/3 and sampled on Sym(3) wr Z/2") {
  auto g = Group::cyclic(2);
  auto h = Group::cyclic(3, "t");
  auto all = all_elements(g, h);
  REQUIRE(all.size() == 24);
  for (const auto& x : all) {
    CHECK(wreath_mul(x, x.inverse()).is_identity());
    CHECK(wreath_mul(x.inverse(), x).is_identity());
    for (const auto& y : all) {
      CHECK(proj_H(wreath_mul(x, y)) == h->mul(proj_H(x), proj_H(y)));
      for (const auto& z : all)
        REQUIRE(wreath_mul(wreath_mul(x, y), z) == wreath_mul(x, wreath_mul(y, z)));
    }
  }
  auto s3 = Group::symmetric(3);
  auto h2 = Group::cyclic(2, "t");
  auto big = all_elements(s3, h2);
  REQUIRE(big.size() == 72);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = big[rng() % big.size()];
    const auto& b = big[rng() % big.size()];
    const auto& c = big[rng() % big.size()];
    CHECK(wreath_mul(wreath_mul(a, b), c) == wreath_mul(a, wreath_mul(b, c)));
  }
}
