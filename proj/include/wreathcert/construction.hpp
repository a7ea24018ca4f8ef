#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreathcert/almost_hom.hpp"
#include "wreathcert/approx_map.hpp"
#include "wreathcert/sofic_approx.hpp"
#include "wreathcert/wreath.hpp"

namespace wreathcert {

/// Injectivity requirement c: G \ {1} -> (0, inf).
using MarginFunction = std::function<Rational(Elem)>;

inline MarginFunction constant_margin(Rational c) {
  return [c](Elem) { return c; };
}

/// Sets and constants derived from a window F and a target defect eps.
struct ApproxParams {
  GroupPtr G, H;
  Rational epsilon;
  std::vector<WreathElem> F;
  LemmaSets lemma;            // F0, E1, E2
  std::vector<Elem> E;        // E2 u  U_{g in E1, h in E2} h supp(g)
  std::vector<Elem> E_G;      // non-identity components of E1
  std::vector<Elem> E_H;      // E^-1 E
  Rational bound_mult;        // eps / (48 |E|^2)
  Rational bound_inj;         // min{c(g), 1 : g in E_G} / (16 |E|^2)
  Rational eps_prime;         // 9/10 of the smaller bound
  Rational kappa;             // 4 |E|^2 eps_prime
  MarginFunction c;

  /// 1/2 when h != 1, else max over the support of c(g_x)/2. Contract error on the identity.
  Rational c_prime(const WreathElem& x) const;
};

/// Throws DomainError when eps <= 0 or c is not positive on E_G.
ApproxParams derive_params(const GroupPtr& G, const GroupPtr& H, const std::vector<WreathElem>& F,
                           const Rational& eps, MarginFunction c);

/// B_E = B1 n B2 for sigma and E.
struct GoodSet {
  std::vector<bool> member;  // indexed by b
  std::size_t size = 0;      // |B_E|
  std::size_t outside_b1 = 0;
  std::size_t outside_b2 = 0;
};

GoodSet compute_BE(const SoficMap& sigma, const std::vector<Elem>& E);

/// theta, sigma and E bundled into the map Theta: G wr H -> (+_B K) wr_B Sym(B).
template <GroupOps K>
class ThetaBundle {
 public:
  using k_value = typename K::value_type;
  using Family = SparseFamily<k_value>;             // element of +_B K
  using Inner = DirectSum<K>;
  using Target = WreathGroup<Inner>;
  using value_type = WreathMetricElem<Family>;

  ThetaBundle(ApproxMap<K> theta, SoficMap sigma, std::vector<Elem> E)
      : theta_(std::move(theta)), sigma_(std::move(sigma)), E_(std::move(E)),
        good_(compute_BE(sigma_, E_)), inner_(theta_.target(), sigma_.target().degree()),
        target_(inner_, sigma_.target().degree()) {
    for (Elem h : E_) sigma_inv_.emplace(h, sigma_(h).inverse());
  }

  const ApproxMap<K>& theta() const noexcept { return theta_; }
  const SoficMap& sigma() const noexcept { return sigma_; }
  const std::vector<Elem>& E() const noexcept { return E_; }
  const GoodSet& good() const noexcept { return good_; }
  std::size_t degree() const noexcept { return sigma_.target().degree(); }
  const Inner& inner() const noexcept { return inner_; }
  const Target& target() const noexcept { return target_; }

  bool in_E(Elem h) const { return sigma_inv_.count(h) != 0; }

  /// theta_b^{(h)}(g): theta(g) in slot sigma(h)^-1 b when b in B_E, identity otherwise.
  Family theta_b_factor(std::uint32_t b, Elem h, Elem g) const {
    auto it = sigma_inv_.find(h);
    if (it == sigma_inv_.end()) throw ContractError("theta_b factor requested outside E");
    if (!good_.member.at(b)) return {};
    return inner_.single(it->second(b), theta_(g));
  }

  /// theta_b(g) = prod_{h in supp g} theta_b^{(h)}(g_h), multiplied in support order
  /// (or reversed order; the slots are disjoint on B_E so both agree).
  Family theta_b(std::uint32_t b, const SupportedTuple& g, bool reversed = false) const {
    for (Elem h : g.support())
      if (!in_E(h)) throw ContractError("theta_b applied to a tuple supported outside E");
    Family acc = inner_.identity();
    if (!good_.member.at(b)) return acc;
    const auto& entries = g.entries();
    if (!reversed) {
      for (const auto& [h, v] : entries) acc = inner_.mul(acc, theta_b_factor(b, h, v));
    } else {
      for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        acc = inner_.mul(acc, theta_b_factor(b, it->first, it->second));
    }
    return acc;
  }

  /// (theta_b(g))_{b in B}; the identity family when supp(g) is not inside E.
  SparseFamily<Family> theta_B(const SupportedTuple& g) const {
    SparseFamily<Family> out;
    for (Elem h : g.support())
      if (!in_E(h)) return out;
    if (g.empty()) return out;
    for (std::uint32_t b = 0; b < degree(); ++b) {
      if (!good_.member[b]) continue;
      Family f = theta_b(b, g);
      if (!f.empty()) out.entries.emplace(b, std::move(f));
    }
    return out;
  }

  /// Theta(g, h) = (theta_B(g), sigma(h)).
  value_type operator()(const WreathElem& x) const {
    return {theta_B(proj_G(x)), sigma_(proj_H(x))};
  }

 private:
  ApproxMap<K> theta_;
  SoficMap sigma_;
  std::vector<Elem> E_;
  GoodSet good_;
  Inner inner_;
  Target target_;
  std::map<Elem, Permutation> sigma_inv_;
};

/// Number of (g, h, b) with h in E2, g in E1, b in B_E n sigma(h)^-1 B_E where
/// theta_{sigma(h) b}(alpha_h g) != theta_b(g); the construction makes this 0.
template <GroupOps K>
std::size_t equivariance_failures(const ThetaBundle<K>& bundle, const LemmaSets& sets) {
  std::size_t failures = 0;
  const auto& good = bundle.good().member;
  for (Elem h : sets.E2) {
    if (!bundle.in_E(h)) continue;
    const Permutation s = bundle.sigma()(h);
    for (const auto& g : sets.E1) {
      const auto shifted = alpha_shift(h, g);
      for (std::uint32_t b = 0; b < bundle.degree(); ++b) {
        if (!good[b] || !good[s(b)]) continue;
        if (!bundle.inner().equal(bundle.theta_b(s(b), shifted), bundle.theta_b(b, g))) ++failures;
      }
    }
  }
  return failures;
}

enum class Verdict { pass, fail, hypotheses_unmet };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::hypotheses_unmet: return "HYPOTHESES UNMET";
  }
  return "?";
}

template <class S>
struct MarginEntry {
  WreathElem element;
  S margin;
  Rational required;
};

template <class S>
struct Certificate {
  ApproxParams params;

  // Hypotheses on the inputs.
  S theta_defect{};
  std::string theta_defect_witness;
  bool theta_multiplicative = false;
  std::optional<S> theta_min_margin;
  std::string theta_margin_witness;
  bool theta_injective = false;
  Rational sigma_level;
  bool sigma_sofic = false;
  std::size_t carrier = 0;
  GoodSet good;
  bool good_set_bound = false;  // |B \ B_E| <= 4 |E|^2 sigma_level |B|
  std::size_t equivariance_failures = 0;
  bool hypotheses_hold = false;

  // Conclusions.
  S defect{};  // over F under d~ built from ell'
  std::string defect_witness;
  bool multiplicative = false;
  std::vector<MarginEntry<S>> margins;  // under d~_max
  bool injective = false;
  AlmostHomReport<S> lemma;

  Verdict verdict = Verdict::fail;
};

/// Lengths used to certify a construction with target K.
template <GroupOps K, class S>
struct TargetMetrics {
  LengthFunction<typename K::value_type, S> ell;      // d for multiplicativity of theta
  LengthFunction<typename K::value_type, S> ell_inj;  // d for injectivity of theta; feeds ell_max
  LengthFunction<SparseFamily<typename K::value_type>, S> ell_prime;  // restricts to ell
};

/// Builds Theta and checks the metric-approximation proposition: hypotheses first,
/// then (a) multiplicativity under d~ and (b) injectivity under d~_max.
template <GroupOps K, class S>
Certificate<S> certify(const ApproxMap<K>& theta, const SoficMap& sigma,
                       const ApproxParams& params, const TargetMetrics<K, S>& metrics,
                       std::optional<ThetaBundle<K>>* bundle_out = nullptr) {
  Certificate<S> cert;
  cert.params = params;
  const auto& G = params.G;
  const auto& H = params.H;
  const S eps = from_rational<S>(params.epsilon);
  const S eps_prime = from_rational<S>(params.eps_prime);

  std::vector<Elem> eg{G->identity()};
  eg.insert(eg.end(), params.E_G.begin(), params.E_G.end());
  auto td = theta.mult_defect(eg, metrics.ell);
  cert.theta_defect = td.value;
  if (td.witness) cert.theta_defect_witness = G->name(td.witness->first) + " * " + G->name(td.witness->second);
  cert.theta_multiplicative = td.value < eps_prime;

  auto tm = theta.inj_margins(eg, metrics.ell_inj);
  cert.theta_injective = true;
  for (const auto& [g, m] : tm.margins)
    if (m + slack_for(m) < from_rational<S>(params.c(g))) {
      cert.theta_injective = false;
      if (cert.theta_margin_witness.empty()) cert.theta_margin_witness = G->name(g);
    }
  cert.theta_min_margin = tm.min();
  if (cert.theta_margin_witness.empty() && tm.argmin) cert.theta_margin_witness = G->name(*tm.argmin);

  cert.sigma_level = sofic_level(sigma, params.E_H);
  cert.sigma_sofic = cert.sigma_level < params.eps_prime;

  ThetaBundle<K> bundle(theta, sigma, params.E);
  cert.carrier = bundle.degree();
  cert.good = bundle.good();
  const Rational e2 = static_cast<unsigned long>(params.E.size() * params.E.size());
  cert.good_set_bound = Rational(static_cast<unsigned long>(cert.carrier - cert.good.size)) <=
                        4 * e2 * cert.sigma_level * static_cast<unsigned long>(cert.carrier);
  cert.equivariance_failures = equivariance_failures(bundle, params.lemma);
  cert.hypotheses_hold = cert.theta_multiplicative && cert.theta_injective && cert.sigma_sofic;

  const auto& target = bundle.target();
  const auto ell_tilde = wreath_length_fn(metrics.ell_prime);
  auto map = [&bundle](const WreathElem& x) { return bundle(x); };
  auto defect = measure_mult_defect(map, params.F, wreath_mul, target, ell_tilde);
  cert.defect = defect.value;
  if (defect.witness)
    cert.defect_witness = defect.witness->first.to_string() + " * " + defect.witness->second.to_string();
  cert.multiplicative = cert.defect < eps;

  const auto ell_max = wreath_length_fn(max_length_fn(metrics.ell_inj));
  cert.injective = true;
  for (const auto& x : params.F) {
    if (x.is_identity()) continue;
    MarginEntry<S> m{x, ell_max(bundle(x)), params.c_prime(x)};
    if (m.margin + slack_for(m.margin) < from_rational<S>(m.required)) cert.injective = false;
    cert.margins.push_back(std::move(m));
  }

  cert.lemma = almosthomom_check(map, G, H, params.F, eps, target, ell_tilde);

  if (!cert.hypotheses_hold)
    cert.verdict = Verdict::hypotheses_unmet;
  else
    cert.verdict = cert.multiplicative && cert.injective ? Verdict::pass : Verdict::fail;
  if (bundle_out) bundle_out->emplace(std::move(bundle));
  return cert;
}

}  // namespace wreathcert
