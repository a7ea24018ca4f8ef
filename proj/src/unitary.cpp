#include "wreathcert/unitary.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "wreathcert/rng.hpp"
#include "wreathcert/sym_embedding.hpp"

namespace wreathcert {

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0) return INFINITY;
  return hs_norm(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
}

Complex normalized_trace(const CMatrix& a) { return a.trace() / static_cast<double>(a.rows()); }

double hs_norm(const CMatrix& a) {
  return std::sqrt(a.squaredNorm() / static_cast<double>(a.rows()));
}

namespace {

void require_unitary(const CMatrix& u) {
  if (unitarity_defect(u) > tol::construction) throw DomainError("matrix is not unitary");
}

}  // namespace

double hs_length(const CMatrix& u) {
  require_unitary(u);
  return hs_norm(u - CMatrix::Identity(u.rows(), u.cols()));
}

double hsbar_length(const CMatrix& u) {
  require_unitary(u);
  // ||U - lambda id|| at the minimizing phase lambda = tr U / |tr U|; avoids the sqrt of a
  // cancellation in 2 - 2|tr U| near the scalars.
  const Complex t = normalized_trace(u);
  if (std::abs(t) == 0.0) return std::numbers::sqrt2;
  return hs_norm(u - (t / std::abs(t)) * CMatrix::Identity(u.rows(), u.cols()));
}

double hsbar_distance(const CMatrix& u, const CMatrix& v) { return hsbar_length(v.adjoint() * u); }

CMatrix tensor_phi(const UnitaryFamily& v, std::size_t n, std::size_t b, std::uint64_t cap) {
  auto dim = tuple_count(n, b);
  if (!dim || *dim > cap) throw DomainError("tensor product exceeds the dimension cap");
  for (const auto& [beta, m] : v.entries)
    if (beta >= b || static_cast<std::size_t>(m.rows()) != n)
      throw DomainError("tensor factor of the wrong size or index");
  CMatrix acc = CMatrix::Identity(1, 1);
  const CMatrix id = CMatrix::Identity(n, n);
  for (std::uint32_t beta = 0; beta < b; ++beta) {
    const CMatrix* f = v.find(beta);
    CMatrix next = Eigen::kroneckerProduct(acc, f ? *f : id).eval();
    acc = std::move(next);
  }
  return acc;
}

Complex tensor_trace(const UnitaryFamily& v) {
  Complex t = 1.0;
  for (const auto& [beta, m] : v.entries) t *= normalized_trace(m);
  return t;
}

double phi_hs_squared(const UnitaryFamily& v) { return 2.0 - 2.0 * tensor_trace(v).real(); }

LengthFunction<UnitaryFamily, double> half_phi_hs_length_fn() {
  return {"HS o Phi / 2", 1.0,
          [](const UnitaryFamily& v) { return 0.5 * std::sqrt(std::max(0.0, phi_hs_squared(v))); }};
}

LengthFunction<CMatrix, double> half_hs_length_fn() {
  return {"HS / 2", 1.0, [](const CMatrix& u) { return 0.5 * hs_length(u); }};
}

LengthFunction<CMatrix, double> scaled_hsbar_length_fn() {
  return {"HSbar / sqrt2", 1.0,
          [](const CMatrix& u) { return hsbar_length(u) / std::numbers::sqrt2; }};
}

BlockUnitary::BlockUnitary(UnitaryWreathElem x, std::size_t n) : x_(std::move(x)), n_(n) {
  for (const auto& [b, fam] : x_.family.entries) {
    if (b >= index_size()) throw DomainError("family index outside B");
    for (const auto& [beta, m] : fam.entries)
      if (beta >= index_size() || static_cast<std::size_t>(m.rows()) != n_)
        throw DomainError("block entry of the wrong size or index");
  }
}

std::optional<std::uint64_t> BlockUnitary::dimension() const {
  auto d = tuple_count(n_, index_size());
  if (!d) return std::nullopt;
  return *d * index_size();
}

Complex BlockUnitary::trace() const {
  Complex sum = 0.0;
  for (std::uint32_t b = 0; b < index_size(); ++b) {
    if (x_.tau(b) != b) continue;
    const UnitaryFamily* f = x_.family.find(b);
    sum += f ? tensor_trace(*f) : Complex(1.0);
  }
  return sum / static_cast<double>(index_size());
}

double BlockUnitary::norm_sq_formula() const {
  double sum = 0.0;
  for (const auto& [b, fam] : x_.family.entries)
    if (x_.tau(b) == b) sum += phi_hs_squared(fam);
  return 2.0 * hamming_length(x_.tau).get_d() + sum / static_cast<double>(index_size());
}

std::optional<CMatrix> BlockUnitary::materialize(std::uint64_t cap) const {
  auto dim = dimension();
  if (!dim || *dim > cap) return std::nullopt;
  const auto block = static_cast<Eigen::Index>(*dim / index_size());
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(*dim), static_cast<Eigen::Index>(*dim));
  const Permutation tinv = x_.tau.inverse();
  for (std::uint32_t b = 0; b < index_size(); ++b) {
    const UnitaryFamily* f = x_.family.find(b);
    const auto row = static_cast<Eigen::Index>(b) * block;
    const auto col = static_cast<Eigen::Index>(tinv(b)) * block;
    if (f)
      m.block(row, col, block, block) = tensor_phi(*f, n_, index_size(), cap);
    else
      m.block(row, col, block, block).setIdentity();
  }
  return m;
}

BlockUnitary psi_unitary(const UnitaryWreathElem& x, std::size_t n) { return BlockUnitary(x, n); }

CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  CMatrix u = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = std::polar(1.0, two_pi * uniform_unit(rng));
  for (std::size_t r = 0; r < 2 * n * n; ++r) {
    if (n < 2) break;
    const auto i = static_cast<Eigen::Index>(uniform_below(rng, n));
    auto j = static_cast<Eigen::Index>(uniform_below(rng, n - 1));
    if (j >= i) ++j;
    const double angle = two_pi * uniform_unit(rng);
    const Complex phase = std::polar(1.0, two_pi * uniform_unit(rng));
    const double c = std::cos(angle), s = std::sin(angle);
    // Rows i, j <- [c, -s e^{i phi}; s e^{-i phi}, c] applied on the left.
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
      const Complex a = u(i, k), b = u(j, k);
      u(i, k) = c * a - s * phase * b;
      u(j, k) = s * std::conj(phase) * a + c * b;
    }
  }
  return u;
}

UnitaryMap regular_unitary_rep(const GroupPtr& group) {
  auto perms = regular_rep(group);
  const std::size_t n = group->order();
  return UnitaryMap(group, UnitaryGroup(n), [perms, n](Elem g) {
    const Permutation p = perms(g);
    CMatrix m = CMatrix::Zero(n, n);
    for (std::uint32_t x = 0; x < n; ++x) m(p(x), x) = 1.0;
    return m;
  });
}

PipelineReport<double> hyperlinear_pipeline(const UnitaryMap& theta, const SoficMap& sigma,
                                            const std::vector<WreathElem>& F, const Rational& eps,
                                            const PipelineOptions& opts) {
  auto params = derive_params(theta.domain(), sigma.domain(), F, eps, constant_margin(ratio(1, 2)));
  TargetMetrics<UnitaryGroup, double> metrics{half_hs_length_fn(), scaled_hsbar_length_fn(),
                                              half_phi_hs_length_fn()};
  std::optional<ThetaBundle<UnitaryGroup>> bundle;
  PipelineReport<double> r;
  r.target_class = "hyperlinear";
  r.cert = certify(theta, sigma, params, metrics, &bundle);
  const auto& target = bundle->target();
  const std::size_t n = theta.target().dim();
  const auto ell_tilde = wreath_length_fn(half_phi_hs_length_fn());
  const auto ell_max_base = scaled_hsbar_length_fn();
  const auto ell_max = wreath_length_fn(max_length_fn(ell_max_base));
  const double e = eps.get_d();

  auto& step3 = r.check("||Psi - id||^2 <= 8 d~");
  auto& step3_defect = r.check("HS defect <= 2 sqrt(2) (d~ defect)^(1/2)");
  auto& materialized = r.check("norm-trace formula matches the materialized operator");
  auto& trace_bound = r.check("|tr Phi(V)| <= 1 - ell_max(V)^2");
  auto& step4 = r.check("||Psi - id||^2 >= d~_max^2");

  r.psi_defect = 0.0;
  r.psi_defect_bound = 2.0 * std::sqrt(2.0 * e);
  r.figures.emplace_back("2 sqrt(2 eps)", 2.0 * std::sqrt(2.0 * e));
  r.figures.emplace_back("2 sqrt(eps)", 2.0 * std::sqrt(e));
  for (const auto& x : F)
    for (const auto& y : F) {
      const auto tx = (*bundle)(x), ty = (*bundle)(y), txy = (*bundle)(wreath_mul(x, y));
      const auto z = target.mul(target.inv(target.mul(tx, ty)), txy);
      const double nsq = psi_unitary(z, n).norm_sq_formula();
      const double dz = ell_tilde(z);
      const std::string at = x.to_string() + " * " + y.to_string();
      step3.record(nsq <= 8.0 * dz + tol::bound, at);
      const double d = std::sqrt(std::max(0.0, nsq));
      if (d > r.psi_defect) {
        r.psi_defect = d;
        r.psi_defect_witness = at;
      }
      auto mxy = psi_unitary(txy, n).materialize(opts.cap);
      auto mx = psi_unitary(tx, n).materialize(opts.cap);
      auto my = psi_unitary(ty, n).materialize(opts.cap);
      if (mxy && mx && my)
        materialized.record(std::abs(hs_norm(*mxy - *mx * *my) - d) <= tol::construction, at);
    }
  step3_defect.record(r.psi_defect <= 2.0 * std::numbers::sqrt2 * std::sqrt(r.cert.defect) + tol::bound);
  r.psi_multiplicative = r.psi_defect < r.psi_defect_bound;

  r.psi_injective = true;
  for (const auto& x : F) {
    if (x.is_identity()) continue;
    const auto tx = (*bundle)(x);
    const auto block = psi_unitary(tx, n);
    const double nsq = block.norm_sq_formula();
    const std::string at = x.to_string();
    for (const auto& [b, fam] : tx.family.entries) {
      if (tx.tau(b) != b) continue;
      const double lm = max_length(fam, ell_max_base);
      trace_bound.record(std::abs(tensor_trace(fam)) <= 1.0 - lm * lm + tol::bound, at);
    }
    const double dmax = ell_max(tx);
    step4.record(nsq + tol::bound >= dmax * dmax, at);
    if (auto m = block.materialize(opts.cap)) {
      const CMatrix id = CMatrix::Identity(m->rows(), m->cols());
      materialized.record(std::abs(hs_norm(*m - id) * hs_norm(*m - id) - nsq) <= tol::construction, at);
      materialized.record(std::abs(normalized_trace(*m) - block.trace()) <= tol::construction, at);
    }
    MarginEntry<double> entry{x, std::sqrt(std::max(0.0, nsq)), params.c_prime(x)};
    if (entry.margin + tol::construction < entry.required.get_d()) r.psi_injective = false;
    r.psi_margins.push_back(std::move(entry));
  }
  r.finish();
  return r;
}

}  // namespace wreathcert
