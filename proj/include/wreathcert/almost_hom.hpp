#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wreathcert/approx_map.hpp"
#include "wreathcert/wreath.hpp"

namespace wreathcert {

/// F0 = F u {1} u F^-1, E1 = {alpha_h(g) : h in proj_H(F0), g in proj_G(F0)}, E2 = proj_H(F0).
/// All lists are duplicate-free and deterministically ordered.
struct LemmaSets {
  std::vector<WreathElem> F0;
  std::vector<SupportedTuple> E1;
  std::vector<Elem> E2;
};

LemmaSets lemma_sets(const GroupPtr& g, const GroupPtr& h, const std::vector<WreathElem>& F);

template <class S>
struct AlmostHomReport {
  S threshold{};               // eps / 6
  S base_defect{};             // Theta on the direct sum, over E1 x E1
  S top_defect{};              // Theta on H, over E2 x E2
  S splitting{};               // d(Theta(g,h), Theta(g,1) Theta(1,h))
  S equivariance{};            // d(Theta(1,h) Theta(g,1), Theta(alpha_h g, 1) Theta(1,h))
  S conclusion{};              // mult defect over F0
  std::vector<std::string> violated;  // bullets not below eps/6
  std::string conclusion_witness;

  bool hypotheses_hold() const { return violated.empty(); }
};

/// Evaluates the four hypotheses of the almost-homomorphism criterion for a map
/// Theta: G wr H -> K and its conclusion on F0. The splitting bullet is evaluated on
/// (E1 u E1 E1) x (E2 u E2 E2): the triangle-inequality argument applies it to the
/// product (g alpha_h(g'), h h') as well as to the factors.
template <class Map, GroupOps K, class S>
AlmostHomReport<S> almosthomom_check(const Map& theta, const GroupPtr& g, const GroupPtr& h,
                                     const std::vector<WreathElem>& F, const S& eps, const K& k,
                                     const LengthFunction<typename K::value_type, S>& ell) {
  const auto sets = lemma_sets(g, h, F);
  const Elem one_h = h->identity();
  auto base = [&](const SupportedTuple& t) { return theta(WreathElem(t, one_h)); };
  auto top = [&](Elem x) { return theta(WreathElem(SupportedTuple(g, h), x)); };
  auto d = [&](const auto& x, const auto& y) { return distance(k, ell, x, y); };

  AlmostHomReport<S> r;
  r.threshold = S(eps / scalar_ratio<S>(6, 1));
  r.base_defect = r.top_defect = r.splitting = r.equivariance = scalar_ratio<S>(0, 1);
  auto raise = [](S& slot, const S& v) {
    if (v > slot) slot = v;
  };

  // E1 u E1 E1 and E2 u E2 E2 with their images, each evaluated once.
  std::vector<SupportedTuple> e1e1 = sets.E1;
  for (const auto& a : sets.E1)
    for (const auto& b : sets.E1) {
      auto ab = a * b;
      if (std::find(e1e1.begin(), e1e1.end(), ab) == e1e1.end()) e1e1.push_back(ab);
    }
  std::vector<Elem> e2e2 = sets.E2;
  for (Elem x : sets.E2)
    for (Elem y : sets.E2) {
      Elem xy = h->mul(x, y);
      if (std::find(e2e2.begin(), e2e2.end(), xy) == e2e2.end()) e2e2.push_back(xy);
    }
  std::vector<typename K::value_type> base_img, top_img;
  for (const auto& a : e1e1) base_img.push_back(base(a));
  for (Elem x : e2e2) top_img.push_back(top(x));
  auto at1 = [&](const SupportedTuple& t) -> const auto& {
    return base_img[static_cast<std::size_t>(std::find(e1e1.begin(), e1e1.end(), t) - e1e1.begin())];
  };
  auto at2 = [&](Elem x) -> const auto& {
    return top_img[static_cast<std::size_t>(std::find(e2e2.begin(), e2e2.end(), x) - e2e2.begin())];
  };

  for (std::size_t i = 0; i < sets.E1.size(); ++i)
    for (std::size_t j = 0; j < sets.E1.size(); ++j)
      raise(r.base_defect, d(at1(sets.E1[i] * sets.E1[j]), k.mul(base_img[i], base_img[j])));
  for (std::size_t i = 0; i < sets.E2.size(); ++i)
    for (std::size_t j = 0; j < sets.E2.size(); ++j)
      raise(r.top_defect, d(at2(h->mul(sets.E2[i], sets.E2[j])), k.mul(top_img[i], top_img[j])));

  for (std::size_t i = 0; i < e1e1.size(); ++i)
    for (std::size_t j = 0; j < e2e2.size(); ++j)
      raise(r.splitting, d(theta(WreathElem(e1e1[i], e2e2[j])), k.mul(base_img[i], top_img[j])));

  for (std::size_t i = 0; i < sets.E1.size(); ++i)
    for (std::size_t j = 0; j < sets.E2.size(); ++j)
      raise(r.equivariance, d(k.mul(top_img[j], base_img[i]),
                              k.mul(base(alpha_shift(sets.E2[j], sets.E1[i])), top_img[j])));

  auto defect = measure_mult_defect(theta, sets.F0, wreath_mul, k, ell);
  r.conclusion = defect.value;
  if (defect.witness)
    r.conclusion_witness = defect.witness->first.to_string() + " * " + defect.witness->second.to_string();

  if (!(r.base_defect < r.threshold)) r.violated.push_back("direct-sum multiplicativity");
  if (!(r.top_defect < r.threshold)) r.violated.push_back("top-group multiplicativity");
  if (!(r.splitting < r.threshold)) r.violated.push_back("splitting");
  if (!(r.equivariance < r.threshold)) r.violated.push_back("equivariance");
  return r;
}

}  // namespace wreathcert
