#include "wreathcert/sym_embedding.hpp"

#include <limits>

namespace wreathcert {

std::optional<std::uint64_t> tuple_count(std::size_t a, std::size_t b) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < b; ++i) {
    if (a != 0 && n > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
    n *= a;
  }
  return n;
}

namespace {

void check_alphabet(const PermFamily& pi, std::size_t a, std::size_t b) {
  for (const auto& [beta, p] : pi.entries) {
    if (beta >= b) throw DomainError("family index outside B");
    if (p.degree() != a) throw DomainError("family entries act on different sets");
  }
}

std::uint64_t apply_phi(const PermFamily& pi, std::uint64_t tuple, std::size_t a) {
  // Only non-identity coordinates change; decode them by their place value.
  std::uint64_t out = tuple;
  std::uint64_t place = 1;
  std::uint32_t next = 0;
  for (const auto& [beta, p] : pi.entries) {
    for (; next < beta; ++next) place *= a;
    const std::uint64_t digit = (tuple / place) % a;
    out = out - digit * place + static_cast<std::uint64_t>(p(static_cast<std::uint32_t>(digit))) * place;
  }
  return out;
}

}  // namespace

Permutation phi_sym(const PermFamily& pi, std::size_t a, std::size_t b, std::uint64_t cap) {
  check_alphabet(pi, a, b);
  auto n = tuple_count(a, b);
  if (!n || *n > cap) throw DomainError("A^B exceeds the materialization cap");
  std::vector<std::uint32_t> img(*n);
  for (std::uint64_t t = 0; t < *n; ++t) img[t] = static_cast<std::uint32_t>(apply_phi(pi, t, a));
  return Permutation(std::move(img));
}

Rational phi_hamming(const PermFamily& pi) {
  Rational fixed = 1;
  for (const auto& [beta, p] : pi.entries) fixed *= 1 - hamming_length(p);
  return 1 - fixed;
}

LengthFunction<PermFamily, Rational> phi_hamming_length_fn() {
  return {"hamming o Phi", Rational(1), [](const PermFamily& pi) { return phi_hamming(pi); }};
}

BigPermutation::BigPermutation(SymWreathElem x, std::size_t a) : x_(std::move(x)), a_(a) {
  if (a == 0) throw DomainError("empty alphabet");
  for (const auto& [b, fam] : x_.family.entries) {
    if (b >= x_.tau.degree()) throw DomainError("family index outside B");
    check_alphabet(fam, a_, x_.tau.degree());
  }
}

std::optional<std::uint64_t> BigPermutation::carrier_size() const {
  auto n = tuple_count(a_, index_size());
  if (!n || *n > std::numeric_limits<std::uint64_t>::max() / index_size()) return std::nullopt;
  return *n * index_size();
}

std::pair<std::uint64_t, std::uint32_t> BigPermutation::operator()(std::uint64_t tuple,
                                                                   std::uint32_t b) const {
  const std::uint32_t tb = x_.tau(b);
  const PermFamily* fam = x_.family.find(tb);
  return {fam ? apply_phi(*fam, tuple, a_) : tuple, tb};
}

std::optional<Permutation> BigPermutation::materialize(std::uint64_t cap) const {
  auto size = carrier_size();
  if (!size || *size > cap || *size > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  const std::uint64_t tuples = *size / index_size();
  std::vector<std::uint32_t> img(*size);
  for (std::uint32_t b = 0; b < index_size(); ++b)
    for (std::uint64_t t = 0; t < tuples; ++t) {
      auto [t2, b2] = (*this)(t, b);
      img[t + tuples * b] = static_cast<std::uint32_t>(t2 + tuples * b2);
    }
  return Permutation(std::move(img));  // validates bijectivity
}

std::optional<Rational> BigPermutation::enumerated_hamming(std::uint64_t cap) const {
  auto size = carrier_size();
  if (!size || *size > cap) return std::nullopt;
  const std::uint64_t tuples = *size / index_size();
  std::uint64_t moved = 0;
  for (std::uint32_t b = 0; b < index_size(); ++b)
    for (std::uint64_t t = 0; t < tuples; ++t) {
      auto [t2, b2] = (*this)(t, b);
      if (t2 != t || b2 != b) ++moved;
    }
  Rational r(mpz_class(std::to_string(moved), 10), mpz_class(std::to_string(*size), 10));
  r.canonicalize();
  return r;
}

BigPermutation psi_sym(const SymWreathElem& x, std::size_t a) { return BigPermutation(x, a); }

Rational psi_hamming_formula(const SymWreathElem& x) {
  return wreath_length(x, phi_hamming_length_fn());
}

}  // namespace wreathcert

namespace wreathcert {

PipelineReport<Rational> sofic_pipeline(const SoficMap& theta, const SoficMap& sigma,
                                        const std::vector<WreathElem>& F, const Rational& eps,
                                        const PipelineOptions& opts) {
  auto params = derive_params(theta.domain(), sigma.domain(), F, eps, constant_margin(ratio(1, 2)));
  TargetMetrics<SymGroup, Rational> metrics{hamming_length_fn(), hamming_length_fn(),
                                            phi_hamming_length_fn()};
  std::optional<ThetaBundle<SymGroup>> bundle;
  PipelineReport<Rational> r;
  r.target_class = "sofic";
  r.cert = certify(theta, sigma, params, metrics, &bundle);
  const auto& target = bundle->target();
  const std::size_t a = theta.target().degree();
  const auto max_fn = wreath_length_fn(max_length_fn(hamming_length_fn()));

  auto& materialized = r.check("Hamming length of materialized Psi equals the product formula");
  auto& dominance = r.check("product formula dominates the max-length variant");

  r.psi_defect = 0;
  r.psi_defect_bound = eps;
  for (const auto& x : F)
    for (const auto& y : F) {
      const auto tx = (*bundle)(x), ty = (*bundle)(y), txy = (*bundle)(wreath_mul(x, y));
      const auto z = target.mul(target.inv(target.mul(tx, ty)), txy);
      Rational d = psi_hamming_formula(z);
      if (d > r.psi_defect) {
        r.psi_defect = d;
        r.psi_defect_witness = x.to_string() + " * " + y.to_string();
      }
      auto pxy = psi_sym(txy, a).materialize(opts.cap);
      auto px = psi_sym(tx, a).materialize(opts.cap);
      auto py = psi_sym(ty, a).materialize(opts.cap);
      if (pxy && px && py)
        materialized.record(hamming_distance(*pxy, *px * *py) == d,
                            x.to_string() + " * " + y.to_string());
    }
  r.psi_multiplicative = r.psi_defect < eps;

  r.psi_injective = true;
  for (const auto& x : F) {
    if (x.is_identity()) continue;
    const auto tx = (*bundle)(x);
    MarginEntry<Rational> m{x, psi_hamming_formula(tx), params.c_prime(x)};
    dominance.record(m.margin >= max_fn(tx), x.to_string());
    if (auto oracle = psi_sym(tx, a).enumerated_hamming(opts.cap))
      materialized.record(*oracle == m.margin, x.to_string());
    if (m.margin < m.required) r.psi_injective = false;
    r.psi_margins.push_back(std::move(m));
  }
  r.finish();
  return r;
}

}  // namespace wreathcert
