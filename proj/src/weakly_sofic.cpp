#include "wreathcert/weakly_sofic.hpp"

#include <array>

#include "wreathcert/length_laws.hpp"

namespace wreathcert {

LengthFunction<SparseFamily<Elem>, Rational> capped_sum_length_fn(LengthFunction<Elem, Rational> ell) {
  std::string nm = "min(1, sum " + ell.name + ")";
  return {std::move(nm), Rational(1), [ell = std::move(ell)](const SparseFamily<Elem>& v) {
            Rational s = 0;
            for (const auto& [b, k] : v.entries) s += ell(k);
            return s < 1 ? s : Rational(1);
          }};
}

TableMap identity_embedding(const TableMetricGroup& k) {
  return TableMap(k.group(), k, [](Elem g) { return g; });
}

TableMetricGroup quaternion_metric() {
  auto q = Group::quaternion();
  std::vector<Rational> lengths(8);
  for (Elem e : q->elements()) {
    const std::string n = q->name(e);
    const char unit = n.back();
    lengths[static_cast<std::size_t>(e)] = n == "1"    ? Rational(0)
                                           : n == "-1" ? ratio(1, 2)
                                           : unit == 'k' ? Rational(1)
                                                         : ratio(3, 4);
  }
  return TableMetricGroup(q, std::move(lengths));
}

PipelineReport<Rational> weaklysofic_pipeline(const TableMap& theta, const SoficMap& sigma,
                                              const std::vector<WreathElem>& F, const Rational& eps,
                                              MarginFunction c, const PipelineOptions& opts) {
  (void)opts;
  const auto ell = theta.target().length_fn();
  auto params = derive_params(theta.domain(), sigma.domain(), F, eps, std::move(c));
  TargetMetrics<TableMetricGroup, Rational> metrics{ell, ell, capped_sum_length_fn(ell)};
  std::optional<ThetaBundle<TableMetricGroup>> bundle;
  PipelineReport<Rational> r;
  r.target_class = "weaklysofic";
  r.cert = certify(theta, sigma, params, metrics, &bundle);
  const auto& target = bundle->target();
  const auto ell_tilde = wreath_length_fn(metrics.ell_prime);
  const auto ell_max = wreath_length_fn(max_length_fn(ell));

  // Theta is the approximation; Psi is the identity.
  r.psi_defect = r.cert.defect;
  r.psi_defect_witness = r.cert.defect_witness;
  r.psi_defect_bound = eps;
  r.psi_multiplicative = r.cert.multiplicative;

  auto& dominance = r.check("ell~ dominates ell~_max");
  r.psi_injective = true;
  for (const auto& x : F) {
    if (x.is_identity()) continue;
    const auto tx = (*bundle)(x);
    MarginEntry<Rational> m{x, ell_tilde(tx), params.c_prime(x)};
    dominance.record(m.margin >= ell_max(tx), x.to_string());
    if (m.margin < m.required) r.psi_injective = false;
    r.psi_margins.push_back(std::move(m));
  }

  std::vector<std::array<ThetaBundle<TableMetricGroup>::value_type, 3>> triples;
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < F.size(); ++j)
      triples.push_back({(*bundle)(F[i]), (*bundle)(F[j]), (*bundle)(F[(i + j + 1) % F.size()])});
  const auto laws = length_law_check(target, ell_tilde, std::span<const std::array<ThetaBundle<TableMetricGroup>::value_type, 3>>(triples));
  auto& axioms = r.check("ell~ satisfies the length axioms on images");
  axioms.instances = laws.checked;
  axioms.failures = laws.violation_count;
  if (!laws.violations.empty()) axioms.first_failure = laws.violations[0].axiom + ": " + laws.violations[0].detail;
  r.finish();
  return r;
}

}  // namespace wreathcert
