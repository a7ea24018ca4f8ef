#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wreathcert/approx_map.hpp"
#include "wreathcert/field_matrix.hpp"
#include "wreathcert/metric_group.hpp"
#include "wreathcert/pipeline.hpp"
#include "wreathcert/sofic_approx.hpp"

namespace wreathcert {

/// GL_n(F_p). Values are not re-checked for invertibility on every product.
class LinearGroup {
 public:
  using value_type = FpMatrix;

  LinearGroup(std::uint32_t p, std::size_t n);

  const PrimeField& field() const noexcept { return f_; }
  std::size_t dim() const noexcept { return n_; }
  FpMatrix identity() const { return identity_matrix(f_, n_); }
  FpMatrix mul(const FpMatrix& a, const FpMatrix& b) const { return matmul(f_, a, b); }
  FpMatrix inv(const FpMatrix& a) const { return inverse(f_, a); }
  bool equal(const FpMatrix& a, const FpMatrix& b) const { return a == b; }

 private:
  PrimeField f_;
  std::size_t n_;
};

using LinearMap = ApproxMap<LinearGroup>;
using LinearFamily = SparseFamily<FpMatrix>;          // element of +_B GL_n
using LinearWreathElem = WreathMetricElem<LinearFamily>;

/// ell_rk(A) = (1/n) rank(A - id).
LengthFunction<FpMatrix, Rational> rk_length_fn(const PrimeField& f);
/// ell_rkbar, memoized per matrix.
LengthFunction<FpMatrix, Rational> rkbar_length_fn(const PrimeField& f);

/// ell_rk(Phi(X)) for X in +_B GL_n. Factors equal to id tensor in as identities, which
/// scale both rank and dimension, so only the support is multiplied out. Throws
/// DomainError when n^|support| exceeds `cap`. Memoized per family.
LengthFunction<LinearFamily, Rational> phi_rk_length_fn(const PrimeField& f, std::size_t n, std::uint64_t cap);

/// Kronecker product over beta = 0 .. b-1 (beta = 0 outermost), identity where absent.
FpMatrix tensor_phi(const PrimeField& f, const LinearFamily& x, std::size_t n, std::size_t b, std::uint64_t cap);

/// Cycles of tau of length at least two.
std::size_t cyc0(const Permutation& tau);

/// Rank data of Psi((A_b), tau) acting on (+_B (F^n)^(x)B) by (xi_b) -> (Phi(A_b) xi_{tau^-1 b}).
struct PsiRank {
  /// Exact: 1 - (1/|B|) sum over cycles c of tau of (1 - ell_rk(Phi(P_c))), where P_c is
  /// the product of the families around c (for a fixed point, A_b itself).
  Rational exact;
  /// ell_Hamm(tau) - cyc0(tau)/|B| + (1/|B|) sum_{tau b = b} ell_rk(Phi(A_b)): treats every
  /// cycle as contributing a full copy of (F^n)^(x)B to the kernel, which holds iff each
  /// P_c acts trivially. Always <= exact.
  Rational cycle_free_formula;
  /// ell_Hamm(tau)/2 + (1/|B|) sum_{tau b = b} ell_rk(Phi(A_b)); the injectivity lower bound.
  Rational lower_bound;
  /// (1/dim) rank(Psi - id) from the materialized matrix, when within the cap.
  std::optional<Rational> explicit_value;
};

PsiRank psi_rank(const LinearWreathElem& x, const PrimeField& f, std::size_t n, std::uint64_t cap,
                 std::uint64_t dense_cap);

/// The block matrix of Psi; nullopt when n^|B| |B| exceeds `cap`.
std::optional<FpMatrix> psi_linear_matrix(const LinearWreathElem& x, const PrimeField& f, std::size_t n,
                                          std::uint64_t cap);

/// Left-regular permutation matrices over F_p.
LinearMap regular_linear_rep(const GroupPtr& group, std::uint32_t p);

/// One entry of the doubling check.
struct DoublingMargin {
  Elem g = 0;
  Rational base_margin;      // ell_rk(theta0(g))
  Rational margin;           // ell_rkbar(diag(theta0(g), id))
  Rational at_one;           // (1/2m) rank(theta(g) - id), the lambda = 1 branch
  Rational away_from_one;    // min over eigenvalues lambda != 1, or 1 when there are none
};

struct DoublingReport {
  Rational delta;
  Rational base_defect;      // multiplicative defect of theta0 on F under d_rk
  bool precondition = false; // base_defect <= delta and base margins >= 1/4 - 2 delta
  bool case_split = false;   // lambda = 1 branch is half the base margin, others >= 1/2
  bool margins_ok = false;   // every margin >= 1/8 - delta (asserted only under the precondition)
  Rational min_margin;
  std::vector<DoublingMargin> margins;
};

struct Doubled {
  LinearMap map;
  DoublingReport report;
};

/// theta(g) = diag(theta0(g), id) into GL_2m, with the projective-rank margin analysis.
Doubled doubling(const LinearMap& theta0, const std::vector<Elem>& F, const Rational& delta);

/// Largest matrix dimension the linear pipeline eliminates densely for cross-checks.
inline constexpr std::uint64_t kLinearDenseCap = 512;

/// Theta with c = 1/16 under ell_rkbar, composed with Psi into GL over F_p. Certifies the
/// d_rk defect against eps and injectivity against c'/2 using the exact rank; the cycle-free
/// formula is reported alongside and checked to be a lower bound.
PipelineReport<Rational> linearsofic_pipeline(const LinearMap& theta, const SoficMap& sigma,
                                              const std::vector<WreathElem>& F, const Rational& eps,
                                              const PipelineOptions& opts = {});

}  // namespace wreathcert
