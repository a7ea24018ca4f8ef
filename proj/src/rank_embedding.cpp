#include "wreathcert/rank_embedding.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "wreathcert/sym_embedding.hpp"

namespace wreathcert {

LinearGroup::LinearGroup(std::uint32_t p, std::size_t n) : f_(p), n_(n) {
  if (n == 0) throw DomainError("GL_0");
}

namespace {

template <class Key>
class Memo {
 public:
  template <class Fn>
  Rational get(const Key& k, Fn&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    }
    Rational v = compute();
    std::lock_guard lock(mutex_);
    return cache_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Rational> cache_;
};

/// n^k, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> capped_power(std::size_t n, std::size_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / n) return std::nullopt;
    r *= n;
  }
  return r <= cap ? std::optional(r) : std::nullopt;
}

FpMatrix support_tensor(const PrimeField& f, const LinearFamily& x, std::size_t n, std::uint64_t cap) {
  if (!capped_power(n, x.entries.size(), cap)) throw DomainError("tensor support exceeds the dimension cap");
  FpMatrix acc = identity_matrix(f, 1);
  for (const auto& [beta, m] : x.entries) {
    if (m.rows != n || !m.square()) throw DomainError("tensor factor of the wrong size");
    acc = kron(f, acc, m);
  }
  return acc;
}

}  // namespace

LengthFunction<FpMatrix, Rational> rk_length_fn(const PrimeField& f) {
  return {"rk", Rational(1), [f](const FpMatrix& a) { return rk_length(f, a); }};
}

LengthFunction<FpMatrix, Rational> rkbar_length_fn(const PrimeField& f) {
  auto memo = std::make_shared<Memo<FpMatrix>>();
  return {"rkbar", Rational(1),
          [f, memo](const FpMatrix& a) { return memo->get(a, [&] { return rkbar_length(f, a); }); }};
}

LengthFunction<LinearFamily, Rational> phi_rk_length_fn(const PrimeField& f, std::size_t n, std::uint64_t cap) {
  using Key = std::map<std::uint32_t, FpMatrix>;
  auto memo = std::make_shared<Memo<Key>>();
  return {"rk o Phi", Rational(1), [f, n, cap, memo](const LinearFamily& x) {
            if (x.entries.empty()) return Rational(0);
            return memo->get(x.entries, [&] { return rk_length(f, support_tensor(f, x, n, cap)); });
          }};
}

FpMatrix tensor_phi(const PrimeField& f, const LinearFamily& x, std::size_t n, std::size_t b, std::uint64_t cap) {
  if (!capped_power(n, b, cap)) throw DomainError("tensor product exceeds the dimension cap");
  FpMatrix acc = identity_matrix(f, 1);
  const FpMatrix id = identity_matrix(f, n);
  for (std::uint32_t beta = 0; beta < b; ++beta) {
    const FpMatrix* m = x.find(beta);
    if (m && m->rows != n) throw DomainError("tensor factor of the wrong size");
    acc = kron(f, acc, m ? *m : id);
  }
  for (const auto& [beta, m] : x.entries)
    if (beta >= b) throw DomainError("tensor factor index outside B");
  return acc;
}

std::size_t cyc0(const Permutation& tau) { return tau.nontrivial_cycle_count(); }

std::optional<FpMatrix> psi_linear_matrix(const LinearWreathElem& x, const PrimeField& f, std::size_t n,
                                          std::uint64_t cap) {
  const std::size_t b = x.tau.degree();
  auto block = capped_power(n, b, cap);
  if (!block || *block > cap / b) return std::nullopt;
  const std::size_t N = *block;
  FpMatrix m(N * b, N * b, 0);
  const Permutation tinv = x.tau.inverse();
  for (std::uint32_t row = 0; row < b; ++row) {
    const LinearFamily* fam = x.family.find(row);
    const FpMatrix phi = fam ? tensor_phi(f, *fam, n, b, cap) : identity_matrix(f, N);
    const std::size_t col = tinv(row);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(row * N + i, col * N + j) = phi(i, j);
  }
  return m;
}

PsiRank psi_rank(const LinearWreathElem& x, const PrimeField& f, std::size_t n, std::uint64_t cap,
                 std::uint64_t dense_cap) {
  const std::size_t b = x.tau.degree();
  if (b == 0) throw DomainError("Psi over an empty index set");
  const DirectSum<LinearGroup> inner(LinearGroup(f.characteristic(), n), b);
  const auto ell_phi = phi_rk_length_fn(f, n, cap);
  const Rational nb(static_cast<unsigned long>(b));

  Rational fixed_sum = 0;
  for (const auto& [i, fam] : x.family.entries)
    if (x.tau(i) == i) fixed_sum += ell_phi(fam);

  // Kernel on a cycle (c0 c1 ... c_{k-1}) with c_{i+1} = tau(c_i): xi_{c_{i+1}} = Phi(A_{c_{i+1}}) xi_{c_i},
  // so xi_{c0} is fixed by Phi(P) with P = A_{c0} A_{c_{k-1}} ... A_{c1}.
  Rational deficit = 0;
  for (const auto& cyc : x.tau.cycles()) {
    LinearFamily p;
    for (std::size_t i = cyc.size(); i-- > 0;) {
      const std::uint32_t c = cyc[(i + 1) % cyc.size()];
      if (const LinearFamily* a = x.family.find(c)) p = inner.mul(p, *a);
    }
    deficit += 1 - ell_phi(p);
  }
  const Rational fixed_points(static_cast<unsigned long>(x.tau.fixed_points()));
  // Fixed points contribute 1 - ell_rk(Phi(A_b)) each.
  PsiRank r;
  r.exact = 1 - (deficit + fixed_points - fixed_sum) / nb;
  const Rational hamm = hamming_length(x.tau);
  r.cycle_free_formula = hamm - Rational(static_cast<unsigned long>(cyc0(x.tau))) / nb + fixed_sum / nb;
  r.lower_bound = hamm / 2 + fixed_sum / nb;
  if (auto m = psi_linear_matrix(x, f, n, dense_cap))
    r.explicit_value = ratio(static_cast<std::int64_t>(rank(f, minus_scalar(f, *m, 1u))), static_cast<std::int64_t>(m->rows));
  return r;
}

LinearMap regular_linear_rep(const GroupPtr& group, std::uint32_t p) {
  if (!group || !group->is_finite()) throw DomainError("regular representation needs a finite group");
  const std::size_t n = group->order();
  return LinearMap(group, LinearGroup(p, n), [group, n](Elem g) {
    FpMatrix m(n, n, 0);
    for (std::size_t x = 0; x < n; ++x) m(static_cast<std::size_t>(group->mul(g, static_cast<Elem>(x))), x) = 1;
    return m;
  });
}

Doubled doubling(const LinearMap& theta0, const std::vector<Elem>& F, const Rational& delta) {
  const auto& base = theta0.target();
  const PrimeField& f = base.field();
  const std::size_t m = base.dim();
  const LinearGroup doubled(f.characteristic(), 2 * m);
  LinearMap map(theta0.domain(), doubled, [theta0, f, m](Elem g) {
    FpMatrix d = identity_matrix(f, 2 * m);
    const FpMatrix t = theta0(g);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d(i, j) = t(i, j);
    return d;
  });

  DoublingReport r;
  r.delta = delta;
  r.base_defect = theta0.mult_defect(F, rk_length_fn(f)).value;
  const Elem one = theta0.domain()->identity();
  const Rational base_floor = Rational(1, 4) - 2 * delta;
  const Rational floor = Rational(1, 8) - delta;
  bool base_ok = true;
  r.case_split = true;
  r.margins_ok = true;
  r.min_margin = 1;
  const FpPoly x_minus_one{f.neg(1), 1};
  for (Elem g : F) {
    if (g == one) continue;
    DoublingMargin e;
    e.g = g;
    e.base_margin = rk_length(f, theta0(g));
    const FpMatrix d = map(g);
    const Rational dim(static_cast<unsigned long>(2 * m));
    // rank(theta(g) - id) is full when 1 is not an eigenvalue, so the minimum over
    // eigenvalues is min(at_one, away_from_one).
    e.at_one = rk_length(f, d);
    e.away_from_one = 1;
    for (const auto& ef : eigen_factors(f, d))
      if (ef.factor != x_minus_one)
        e.away_from_one = std::min(e.away_from_one, Rational(Rational(static_cast<unsigned long>(ef.rank)) / dim));
    e.margin = rkbar_length(f, d);
    if (e.margin != std::min(e.at_one, e.away_from_one)) r.case_split = false;
    if (e.at_one != e.base_margin / 2 || e.away_from_one < Rational(1, 2)) r.case_split = false;
    if (e.base_margin < base_floor) base_ok = false;
    if (e.margin < floor) r.margins_ok = false;
    r.min_margin = std::min(r.min_margin, e.margin);
    r.margins.push_back(std::move(e));
  }
  r.precondition = r.base_defect <= delta && base_ok;
  return {std::move(map), std::move(r)};
}

PipelineReport<Rational> linearsofic_pipeline(const LinearMap& theta, const SoficMap& sigma,
                                              const std::vector<WreathElem>& F, const Rational& eps,
                                              const PipelineOptions& opts) {
  const PrimeField& f = theta.target().field();
  const std::size_t n = theta.target().dim();
  auto params = derive_params(theta.domain(), sigma.domain(), F, eps, constant_margin(ratio(1, 16)));
  TargetMetrics<LinearGroup, Rational> metrics{rk_length_fn(f), rkbar_length_fn(f), phi_rk_length_fn(f, n, opts.cap)};
  std::optional<ThetaBundle<LinearGroup>> bundle;
  PipelineReport<Rational> r;
  r.target_class = "linearsofic";
  r.cert = certify(theta, sigma, params, metrics, &bundle);
  const auto& target = bundle->target();
  const auto ell_tilde = wreath_length_fn(metrics.ell_prime);
  const auto ell_max = wreath_length_fn(max_length_fn(metrics.ell_inj));
  const std::uint64_t dense = std::min<std::uint64_t>(opts.cap, kLinearDenseCap);

  auto& materialized = r.check("rank formula matches the materialized operator");
  auto& lower = r.check("cycle-free formula <= exact rank length");
  auto& step3 = r.check("ell_rk(Psi) <= ell~");
  auto& step4 = r.check("ell_rk(Psi) >= ell_Hamm/2 + fixed sum >= ell~_max / 2");
  auto& elementary = r.check("ell_Hamm(tau) >= 2 cyc0(tau) / |B|");

  std::size_t agree = 0, total = 0;
  auto audit = [&](const LinearWreathElem& z, const PsiRank& pr, const std::string& at) {
    if (pr.explicit_value) materialized.record(*pr.explicit_value == pr.exact, at);
    lower.record(pr.cycle_free_formula <= pr.exact, at);
    const Rational nb(static_cast<unsigned long>(z.tau.degree()));
    elementary.record(hamming_length(z.tau) >= 2 * Rational(static_cast<unsigned long>(cyc0(z.tau))) / nb, at);
    ++total;
    if (pr.cycle_free_formula == pr.exact) ++agree;
  };

  r.psi_defect = 0;
  r.psi_defect_bound = eps;
  for (const auto& x : F)
    for (const auto& y : F) {
      const auto tx = (*bundle)(x), ty = (*bundle)(y), txy = (*bundle)(wreath_mul(x, y));
      const auto z = target.mul(target.inv(target.mul(tx, ty)), txy);
      const std::string at = x.to_string() + " * " + y.to_string();
      const PsiRank pr = psi_rank(z, f, n, opts.cap, dense);
      audit(z, pr, at);
      step3.record(pr.exact <= ell_tilde(z), at);
      if (pr.exact > r.psi_defect) {
        r.psi_defect = pr.exact;
        r.psi_defect_witness = at;
      }
      auto mxy = psi_linear_matrix(txy, f, n, dense);
      auto mx = psi_linear_matrix(tx, f, n, dense);
      auto my = psi_linear_matrix(ty, f, n, dense);
      if (mxy && mx && my) materialized.record(drk(f, *mxy, matmul(f, *mx, *my)) == pr.exact, at);
    }
  r.psi_multiplicative = r.psi_defect < eps;

  r.psi_injective = true;
  for (const auto& x : F) {
    if (x.is_identity()) continue;
    const auto tx = (*bundle)(x);
    const PsiRank pr = psi_rank(tx, f, n, opts.cap, dense);
    audit(tx, pr, x.to_string());
    step4.record(pr.exact >= pr.lower_bound && pr.lower_bound >= ell_max(tx) / 2, x.to_string());
    MarginEntry<Rational> m{x, pr.exact, params.c_prime(x) / 2};
    if (m.margin < m.required) r.psi_injective = false;
    r.psi_margins.push_back(std::move(m));
  }
  r.figures.emplace_back("cycle-free formula exact on", total ? ratio(static_cast<std::int64_t>(agree), static_cast<std::int64_t>(total)) : Rational(1));
  r.finish();
  return r;
}

}  // namespace wreathcert
