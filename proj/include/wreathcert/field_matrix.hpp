#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wreathcert/finite_field.hpp"
#include "wreathcert/rational.hpp"

namespace wreathcert {

/// Dense row-major matrix with entries in F.
template <class F>
struct FieldMatrix {
  using value_type = typename F::value_type;

  std::size_t rows = 0, cols = 0;
  std::vector<value_type> a;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c, value_type fill) : rows(r), cols(c), a(r * c, fill) {}

  value_type& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool square() const noexcept { return rows == cols; }
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
  friend auto operator<=>(const FieldMatrix& x, const FieldMatrix& y) {
    if (auto c = x.rows <=> y.rows; c != 0) return c;
    if (auto c = x.cols <=> y.cols; c != 0) return c;
    return x.a <=> y.a;
  }
};

using FpMatrix = FieldMatrix<PrimeField>;

template <class F>
FieldMatrix<F> identity_matrix(const F& f, std::size_t n) {
  FieldMatrix<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
FieldMatrix<F> matmul(const F& f, const FieldMatrix<F>& x, const FieldMatrix<F>& y) {
  if (x.cols != y.rows) throw DomainError("matrix shapes do not compose");
  FieldMatrix<F> r(x.rows, y.cols, f.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (f.is_zero(x(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) = f.add(r(i, j), f.mul(x(i, k), y(k, j)));
    }
  return r;
}

template <class F>
FieldMatrix<F> matsub(const F& f, const FieldMatrix<F>& x, const FieldMatrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DomainError("matrix shapes differ");
  FieldMatrix<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
  return r;
}

/// x - lambda id.
template <class F>
FieldMatrix<F> minus_scalar(const F& f, FieldMatrix<F> x, const typename F::value_type& lambda) {
  if (!x.square()) throw DomainError("matrix is not square");
  for (std::size_t i = 0; i < x.rows; ++i) x(i, i) = f.sub(x(i, i), lambda);
  return x;
}

/// Kronecker product; block (i, j) is x(i, j) y.
template <class F>
FieldMatrix<F> kron(const F& f, const FieldMatrix<F>& x, const FieldMatrix<F>& y) {
  FieldMatrix<F> r(x.rows * y.rows, x.cols * y.cols, f.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      if (f.is_zero(x(i, j))) continue;
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l) r(i * y.rows + k, j * y.cols + l) = f.mul(x(i, j), y(k, l));
    }
  return r;
}

/// Rank by Gaussian elimination; the one elimination routine shared by prime and
/// extension fields.
template <class F>
std::size_t rank(const F& f, FieldMatrix<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

/// Inverse by Gauss-Jordan elimination; throws DomainError for singular input.
template <class F>
FieldMatrix<F> inverse(const F& f, FieldMatrix<F> m) {
  if (!m.square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows;
  FieldMatrix<F> r = identity_matrix(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(piv, j), m(c, j));
      std::swap(r(piv, j), r(c, j));
    }
    const auto inv = f.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = f.mul(m(c, j), inv);
      r(c, j) = f.mul(r(c, j), inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        r(i, j) = f.sub(r(i, j), f.mul(factor, r(c, j)));
      }
    }
  }
  return r;
}

/// Entrywise image of a prime-field matrix in an extension field.
FieldMatrix<ExtField> embed(const ExtField& e, const FpMatrix& m);

/// The Jordan block J(alpha, n): alpha on the diagonal, 1 above it.
template <class F>
FieldMatrix<F> jordan_block(const F& f, const typename F::value_type& alpha, std::size_t n) {
  FieldMatrix<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = alpha;
    if (i + 1 < n) m(i, i + 1) = f.one();
  }
  return m;
}

/// J_lambda(A) = n - rank(A - lambda id), the number of Jordan blocks for lambda.
template <class F>
std::size_t jordan_count(const F& f, const FieldMatrix<F>& a, const typename F::value_type& lambda) {
  return a.rows - rank(f, minus_scalar(f, a, lambda));
}

/// Parses "a b; c d" (rows separated by ';') into a square matrix mod p.
FpMatrix parse_fp_matrix(const PrimeField& f, const std::string& text);
std::string to_string(const FpMatrix& m);

/// (1/n) rank(A - B).
Rational drk(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);
/// (1/n) rank(A - id).
Rational rk_length(const PrimeField& f, const FpMatrix& a);

/// det(x id - A) by fraction-free (Bareiss) elimination over F_p[x].
FpPoly char_poly(const PrimeField& f, const FpMatrix& a);

/// One irreducible factor of the characteristic polynomial with the common rank of
/// A - lambda id over any of its roots lambda (computed in F_p[x]/(factor)).
struct EigenFactor {
  FpPoly factor;
  int multiplicity = 0;
  std::size_t rank = 0;
};

/// Eigenvalue data for an invertible A; throws DomainError for singular A.
std::vector<EigenFactor> eigen_factors(const PrimeField& f, const FpMatrix& a);

/// min over lambda != 0 in the algebraic closure of (1/n) rank(A - lambda id).
/// Throws DomainError for singular A.
Rational rkbar_length(const PrimeField& f, const FpMatrix& a);

/// The same minimum by enumerating every nonzero lambda of F_{p^d} for d = 1..n, with
/// each F_{p^d} built from a modulus found by sieving out all products. n <= 4.
Rational rkbar_length_bruteforce(const PrimeField& f, const FpMatrix& a);

/// First monic irreducible of degree d in enumeration order, found by sieving products
/// of lower-degree monic polynomials (independent of `factor`). p^d <= 2^20.
FpPoly sieve_irreducible(const PolyRing& ring, int d);

/// J_{alpha beta}(J(alpha, n) (x) J(beta, k)) in F; the tensor-Jordan theorem says min(n, k).
template <class F>
std::size_t tensor_jordan_count(const F& f, const typename F::value_type& alpha,
                                const typename F::value_type& beta, std::size_t n, std::size_t k) {
  if (f.is_zero(alpha) || f.is_zero(beta)) throw DomainError("Jordan eigenvalues must be nonzero");
  return jordan_count(f, kron(f, jordan_block(f, alpha, n), jordan_block(f, beta, k)), f.mul(alpha, beta));
}

template <class F>
bool jordan_tensor_check(const F& f, const typename F::value_type& alpha, const typename F::value_type& beta,
                         std::size_t n, std::size_t k) {
  return tensor_jordan_count(f, alpha, beta, n, k) == std::min(n, k);
}

/// Outcome of the tensor lower bound on one pair.
struct TensorBoundCheck {
  Rational rkbar_a, rkbar_b, rkbar_ab;
  bool projective_bound = false;  // rkbar(A (x) B) >= max(rkbar A, rkbar B)
  bool jordan_bound = false;      // J_lambda(A (x) B) <= min(k max J(A), n max J(B)) for all lambda
  std::string detail;             // first failing instance
  bool ok() const noexcept { return projective_bound && jordan_bound; }
};

TensorBoundCheck tensor_lower_bound_check(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);

/// Uniform invertible n x n matrix by rejection.
FpMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng);

}  // namespace wreathcert
