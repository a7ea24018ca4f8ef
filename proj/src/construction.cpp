#include "wreathcert/construction.hpp"

#include <algorithm>
#include <set>

namespace wreathcert {

Rational ApproxParams::c_prime(const WreathElem& x) const {
  if (x.is_identity()) throw ContractError("c' is undefined at the identity");
  if (proj_H(x) != H->identity()) return ratio(1, 2);
  Rational best = 0;
  for (const auto& [pos, g] : proj_G(x).entries()) best = std::max(best, Rational(c(g) / 2));
  return best;
}

ApproxParams derive_params(const GroupPtr& G, const GroupPtr& H, const std::vector<WreathElem>& F,
                           const Rational& eps, MarginFunction c) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  if (!c) throw DomainError("missing injectivity requirement c");
  ApproxParams p;
  p.G = G;
  p.H = H;
  p.epsilon = eps;
  p.F = F;
  p.c = std::move(c);
  p.lemma = lemma_sets(G, H, F);

  std::set<Elem> e(p.lemma.E2.begin(), p.lemma.E2.end());
  std::set<Elem> eg;
  for (const auto& g : p.lemma.E1) {
    for (Elem x : g.support())
      for (Elem h : p.lemma.E2) e.insert(H->mul(h, x));
    for (const auto& [x, v] : g.entries()) eg.insert(v);
  }
  p.E.assign(e.begin(), e.end());
  p.E_G.assign(eg.begin(), eg.end());
  std::set<Elem> eh;
  for (Elem a : p.E)
    for (Elem b : p.E) eh.insert(H->mul(H->inv(a), b));
  p.E_H.assign(eh.begin(), eh.end());

  Rational cmin = 1;
  for (Elem g : p.E_G) {
    Rational cg = p.c(g);
    if (cg <= 0) throw DomainError("c must be positive, fails at " + G->name(g));
    cmin = std::min(cmin, cg);
  }
  const Rational e2 = static_cast<unsigned long>(p.E.size() * p.E.size());
  p.bound_mult = eps / (48 * e2);
  p.bound_inj = cmin / (16 * e2);
  p.eps_prime = ratio(9, 10) * std::min(p.bound_mult, p.bound_inj);
  p.kappa = 4 * e2 * p.eps_prime;
  return p;
}

GoodSet compute_BE(const SoficMap& sigma, const std::vector<Elem>& E) {
  const std::size_t n = sigma.target().degree();
  const auto& H = *sigma.domain();
  std::vector<Permutation> inv;
  inv.reserve(E.size());
  for (Elem h : E) inv.push_back(sigma(h).inverse());
  // inv_prod[i][j] = sigma(h_i h_j)^-1
  std::vector<std::vector<Permutation>> inv_prod(E.size());
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j)
      inv_prod[i].push_back(sigma(H.mul(E[i], E[j])).inverse());

  GoodSet s;
  s.member.assign(n, false);
  std::vector<std::uint32_t> seen;
  for (std::uint32_t b = 0; b < n; ++b) {
    seen.clear();
    for (const auto& p : inv) seen.push_back(p(b));
    std::sort(seen.begin(), seen.end());
    const bool in_b1 = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    bool in_b2 = true;
    for (std::size_t i = 0; i < E.size() && in_b2; ++i)
      for (std::size_t j = 0; j < E.size() && in_b2; ++j)
        in_b2 = inv_prod[i][j](b) == inv[j](inv[i](b));
    if (!in_b1) ++s.outside_b1;
    if (!in_b2) ++s.outside_b2;
    if (in_b1 && in_b2) {
      s.member[b] = true;
      ++s.size;
    }
  }
  return s;
}

}  // namespace wreathcert
