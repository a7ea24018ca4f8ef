#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>

#include "wreathcert/metric_group.hpp"
#include "wreathcert/pipeline.hpp"
#include "wreathcert/sofic_approx.hpp"

namespace wreathcert {

using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

namespace tol {
inline constexpr double construction = 1e-9;  // unitarity and formula agreement
inline constexpr double bound = 1e-8;         // slack on the favorable side of inequalities
}  // namespace tol

/// ||U* U - id|| in the normalized Hilbert-Schmidt norm.
double unitarity_defect(const CMatrix& u);

/// U(n) with exact-up-to-rounding products; equality within 1e-9 * n.
class UnitaryGroup {
 public:
  using value_type = CMatrix;
  explicit UnitaryGroup(std::size_t n) : n_(n) {
    if (n == 0) throw DomainError("U(0)");
  }
  std::size_t dim() const noexcept { return n_; }
  CMatrix identity() const { return CMatrix::Identity(n_, n_); }
  CMatrix mul(const CMatrix& a, const CMatrix& b) const { return a * b; }
  CMatrix inv(const CMatrix& a) const { return a.adjoint(); }
  bool equal(const CMatrix& a, const CMatrix& b) const {
    return a.rows() == b.rows() && (a - b).cwiseAbs().maxCoeff() <= tol::construction * n_;
  }

 private:
  std::size_t n_;
};

/// tr(A) / n.
Complex normalized_trace(const CMatrix& a);
/// tr(A* A)^{1/2} with the normalized trace.
double hs_norm(const CMatrix& a);
/// ||U - id||_2, in [0, 2]. Throws DomainError for non-unitary input.
double hs_length(const CMatrix& u);
/// sqrt(2 - 2 |tr U|), the distance from U to the scalars; in [0, sqrt 2].
double hsbar_length(const CMatrix& u);
/// hsbar_length(V^-1 U).
double hsbar_distance(const CMatrix& u, const CMatrix& v);

using UnitaryFamily = SparseFamily<CMatrix>;
using UnitaryWreathElem = WreathMetricElem<UnitaryFamily>;

/// Kronecker product over beta = 0 .. b-1 (beta = 0 outermost); identity where absent.
/// Throws DomainError when n^b exceeds `cap`.
CMatrix tensor_phi(const UnitaryFamily& v, std::size_t n, std::size_t b, std::uint64_t cap);
/// tr Phi(V) = prod tr V_beta, without forming the product.
Complex tensor_trace(const UnitaryFamily& v);
/// ||Phi(V) - id||^2 = 2 - 2 Re tr Phi(V).
double phi_hs_squared(const UnitaryFamily& v);

/// ell'(V) = 1/2 ell_HS(Phi(V)).
LengthFunction<UnitaryFamily, double> half_phi_hs_length_fn();
/// 1/2 ell_HS on U(n): the restriction of ell' to one copy.
LengthFunction<CMatrix, double> half_hs_length_fn();
/// ell_HSbar / sqrt 2, bounded by 1; ell_max is built from it.
LengthFunction<CMatrix, double> scaled_hsbar_length_fn();

/// Psi((U_b), tau): block (b, tau^-1 b) is Phi(U_b).
class BlockUnitary {
 public:
  BlockUnitary(UnitaryWreathElem x, std::size_t n);

  std::size_t index_size() const noexcept { return x_.tau.degree(); }
  std::optional<std::uint64_t> dimension() const;  // n^|B| |B|

  /// (1/|B|) sum_{tau b = b} tr Phi(U_b).
  Complex trace() const;
  /// 2 ell_Hamm(tau) + (1/|B|) sum_{tau b = b} ||Phi(U_b) - id||^2.
  double norm_sq_formula() const;
  std::optional<CMatrix> materialize(std::uint64_t cap) const;

 private:
  UnitaryWreathElem x_;
  std::size_t n_;
};

BlockUnitary psi_unitary(const UnitaryWreathElem& x, std::size_t n);

/// Seeded product of Givens rotations and diagonal phases.
CMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

using UnitaryMap = ApproxMap<UnitaryGroup>;

/// Left-regular permutation matrices: tr rho(g) = 0 for g != 1.
UnitaryMap regular_unitary_rep(const GroupPtr& group);

/// Theta with c = 1/2 (measured against ell_HSbar / sqrt 2), composed with the block
/// operator Psi. Asserts the Step-3 bound ||Psi - id||^2 <= 8 d~, the Step-4 chain, and
/// certifies the HS defect against 2 sqrt(2 eps); 2 sqrt(eps) is reported alongside.
PipelineReport<double> hyperlinear_pipeline(const UnitaryMap& theta, const SoficMap& sigma,
                                            const std::vector<WreathElem>& F, const Rational& eps,
                                            const PipelineOptions& opts = {});

}  // namespace wreathcert
