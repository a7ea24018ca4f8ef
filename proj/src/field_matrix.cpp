#include "wreathcert/field_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "wreathcert/rng.hpp"

namespace wreathcert {

FieldMatrix<ExtField> embed(const ExtField& e, const FpMatrix& m) {
  FieldMatrix<ExtField> r(m.rows, m.cols, e.zero());
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = e.from_prime(m.a[i]);
  return r;
}

FpMatrix parse_fp_matrix(const PrimeField& f, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream in(row);
    std::vector<std::uint32_t> r;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used, 10);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("bad matrix entry '" + tok + "'");
      r.push_back(f.from_int(v));
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("empty matrix");
  FpMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ParseError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string to_string(const FpMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s;
}

Rational drk(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  if (!a.square() || a.rows != b.rows || a.cols != b.cols) throw DomainError("drk of matrices of different sizes");
  return ratio(static_cast<long>(rank(f, matsub(f, a, b))), static_cast<long>(a.rows));
}

Rational rk_length(const PrimeField& f, const FpMatrix& a) { return drk(f, a, identity_matrix(f, a.rows)); }

FpPoly char_poly(const PrimeField& f, const FpMatrix& a) {
  if (!a.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows;
  const PolyRing ring(f.characteristic());
  std::vector<FpPoly> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpPoly e = ring.constant(f.neg(a(i, j)));
      if (i == j) e = ring.add(e, ring.x());
      m[i * n + j] = std::move(e);
    }
  auto at = [&](std::size_t i, std::size_t j) -> FpPoly& { return m[i * n + j]; };
  FpPoly prev = ring.constant(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, k).empty()) ++piv;
    if (piv == n) return {};  // unreachable: det(x id - A) is monic
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = ring.exact_div(ring.sub(ring.mul(at(k, k), at(i, j)), ring.mul(at(i, k), at(k, j))), prev);
      at(i, k).clear();
    }
    prev = at(k, k);
  }
  FpPoly det = n ? at(n - 1, n - 1) : ring.constant(1);
  return negate ? ring.scale(det, f.neg(1)) : det;
}

std::vector<EigenFactor> eigen_factors(const PrimeField& f, const FpMatrix& a) {
  const FpPoly chi = char_poly(f, a);
  if (chi.empty() || chi[0] == 0) throw DomainError("matrix is singular");
  const PolyRing ring(f.characteristic());
  std::vector<EigenFactor> out;
  for (const auto& [g, mult] : factor(ring, chi)) {
    EigenFactor e{g, mult, 0};
    if (g.size() == 2) {
      e.rank = rank(f, minus_scalar(f, a, f.neg(g[0])));
    } else {
      const ExtField ext(f.characteristic(), g);
      e.rank = rank(ext, minus_scalar(ext, embed(ext, a), ext.generator()));
    }
    out.push_back(std::move(e));
  }
  return out;
}

Rational rkbar_length(const PrimeField& f, const FpMatrix& a) {
  std::size_t best = a.rows;
  for (const auto& e : eigen_factors(f, a)) best = std::min(best, e.rank);
  return ratio(static_cast<long>(best), static_cast<long>(a.rows));
}

FpPoly sieve_irreducible(const PolyRing& ring, int d) {
  if (d < 1) throw DomainError("irreducible of degree < 1");
  const std::uint64_t p = ring.characteristic();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= p;
    if (count > (1u << 20)) throw DomainError("sieve range exceeds 2^20 polynomials");
  }
  if (d == 1) return ring.monic_of_degree(1, 0);
  auto index_of = [p](const FpPoly& m) {
    std::uint64_t idx = 0;
    for (std::size_t k = m.size() - 1; k-- > 0;) idx = idx * p + m[k];
    return idx;
  };
  std::vector<bool> composite(count, false);
  for (int da = 1; 2 * da <= d; ++da) {
    std::uint64_t na = 1, nb = 1;
    for (int i = 0; i < da; ++i) na *= p;
    for (int i = 0; i < d - da; ++i) nb *= p;
    for (std::uint64_t i = 0; i < na; ++i)
      for (std::uint64_t j = 0; j < nb; ++j)
        composite[index_of(ring.mul(ring.monic_of_degree(da, i), ring.monic_of_degree(d - da, j)))] = true;
  }
  for (std::uint64_t i = 0; i < count; ++i)
    if (!composite[i]) return ring.monic_of_degree(d, i);
  throw DomainError("no irreducible found");  // unreachable
}

Rational rkbar_length_bruteforce(const PrimeField& f, const FpMatrix& a) {
  const std::size_t n = a.rows;
  if (!a.square() || n == 0 || n > 4) throw DomainError("brute-force rkbar needs 1 <= n <= 4");
  if (rank(f, a) != n) throw DomainError("matrix is singular");
  const PolyRing ring(f.characteristic());
  std::size_t best = n;
  for (int d = 1; d <= static_cast<int>(n); ++d) {
    const ExtField ext(f.characteristic(), sieve_irreducible(ring, d));
    const auto m = embed(ext, a);
    for (std::uint64_t i = 1; i < ext.order(); ++i) best = std::min(best, rank(ext, minus_scalar(ext, m, ext.element(i))));
  }
  return ratio(static_cast<long>(best), static_cast<long>(n));
}

TensorBoundCheck tensor_lower_bound_check(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  TensorBoundCheck r;
  const auto fa = eigen_factors(f, a), fb = eigen_factors(f, b);
  const auto ab = kron(f, a, b);
  const auto fab = eigen_factors(f, ab);
  auto min_rank = [](const std::vector<EigenFactor>& fs, std::size_t n) {
    std::size_t m = n;
    for (const auto& e : fs) m = std::min(m, e.rank);
    return m;
  };
  const std::size_t n = a.rows, k = b.rows;
  r.rkbar_a = ratio(static_cast<long>(min_rank(fa, n)), static_cast<long>(n));
  r.rkbar_b = ratio(static_cast<long>(min_rank(fb, k)), static_cast<long>(k));
  r.rkbar_ab = ratio(static_cast<long>(min_rank(fab, n * k)), static_cast<long>(n * k));
  r.projective_bound = r.rkbar_ab >= std::max(r.rkbar_a, r.rkbar_b);
  if (!r.projective_bound) r.detail = "rkbar(A (x) B) = " + format_rational(r.rkbar_ab) + " below a factor's";
  const std::size_t max_ja = n - min_rank(fa, n), max_jb = k - min_rank(fb, k);
  const std::size_t limit = std::min(k * max_ja, n * max_jb);
  r.jordan_bound = true;
  const PolyRing ring(f.characteristic());
  for (const auto& e : fab) {
    const std::size_t j = n * k - e.rank;
    if (j > limit) {
      r.jordan_bound = false;
      if (r.detail.empty())
        r.detail = "J at roots of " + ring.to_string(e.factor) + " is " + std::to_string(j) + " > " + std::to_string(limit);
    }
  }
  return r;
}

FpMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    FpMatrix m(n, n, 0);
    for (auto& v : m.a) v = static_cast<std::uint32_t>(uniform_below(rng, f.characteristic()));
    if (rank(f, m) == n) return m;
  }
}

}  // namespace wreathcert
