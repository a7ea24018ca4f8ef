#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wreathcert/errors.hpp"

namespace wreathcert {

/// Prime p with p < 2^31 (products fit in 64 bits). Primality is checked.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return 1; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(std::int64_t v) const;
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }
  value_type add(value_type a, value_type b) const noexcept { return static_cast<value_type>((std::uint64_t{a} + b) % p_); }
  value_type sub(value_type a, value_type b) const noexcept { return static_cast<value_type>((std::uint64_t{a} + p_ - b) % p_); }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept { return static_cast<value_type>(std::uint64_t{a} * b % p_); }
  value_type pow(value_type a, std::uint64_t e) const noexcept;
  /// Throws DomainError for 0.
  value_type inv(value_type a) const;
  /// The i-th element in the enumeration 0, 1, ..., p-1.
  value_type element(std::uint64_t i) const;
  std::string name(value_type a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// Polynomial over F_p, coefficients lowest degree first, no trailing zeros (0 is empty).
using FpPoly = std::vector<std::uint32_t>;

/// Arithmetic in F_p[x].
class PolyRing {
 public:
  explicit PolyRing(std::uint32_t p) : f_(p) {}

  const PrimeField& field() const noexcept { return f_; }
  std::uint32_t characteristic() const noexcept { return f_.characteristic(); }

  static int degree(const FpPoly& a) noexcept { return static_cast<int>(a.size()) - 1; }
  static void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  FpPoly constant(std::uint32_t c) const;
  FpPoly x() const { return FpPoly{0, 1}; }

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, std::uint32_t c) const;
  /// Quotient and remainder; throws DomainError when b = 0.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const;
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  /// a / b, throws ContractError when the division is not exact.
  FpPoly exact_div(const FpPoly& a, const FpPoly& b) const;
  FpPoly monic(const FpPoly& a) const;
  /// Monic gcd (0 when both are 0).
  FpPoly gcd(const FpPoly& a, const FpPoly& b) const;
  FpPoly derivative(const FpPoly& a) const;
  FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& m) const;
  std::uint32_t eval(const FpPoly& a, std::uint32_t v) const;
  /// The i-th monic polynomial of degree d in base-p digit order.
  FpPoly monic_of_degree(int d, std::uint64_t i) const;
  std::string to_string(const FpPoly& a) const;

 private:
  PrimeField f_;
};

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// Square-free decomposition, then distinct-degree splitting, then Cantor-Zassenhaus
/// (trace map in characteristic 2). Deterministic: the random splitting elements are seeded.
std::vector<std::pair<FpPoly, int>> factor(const PolyRing& ring, const FpPoly& f);
bool is_irreducible(const PolyRing& ring, const FpPoly& f);

/// F_p[x]/(f) for a monic irreducible f of degree m >= 1. Elements are reduced
/// polynomials (degree < m, trimmed).
class ExtField {
 public:
  using value_type = FpPoly;

  /// Throws DomainError when f is not monic irreducible.
  ExtField(std::uint32_t p, FpPoly modulus);

  std::uint32_t characteristic() const noexcept { return ring_.characteristic(); }
  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(PolyRing::degree(mod_)); }
  std::uint64_t order() const;
  const FpPoly& modulus() const noexcept { return mod_; }
  const PolyRing& ring() const noexcept { return ring_; }

  value_type zero() const { return {}; }
  value_type one() const { return {1}; }
  value_type from_int(std::int64_t v) const;
  value_type from_prime(std::uint32_t v) const { return ring_.constant(v); }
  /// The residue class of x; a root of the modulus.
  value_type generator() const { return ring_.mod(ring_.x(), mod_); }
  bool is_zero(const value_type& a) const noexcept { return a.empty(); }
  bool equal(const value_type& a, const value_type& b) const noexcept { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return ring_.add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return ring_.sub(a, b); }
  value_type neg(const value_type& a) const { return ring_.sub({}, a); }
  value_type mul(const value_type& a, const value_type& b) const { return ring_.mod(ring_.mul(a, b), mod_); }
  value_type inv(const value_type& a) const;
  /// The i-th element, reading i in base p as the coefficient vector.
  value_type element(std::uint64_t i) const;
  std::string name(const value_type& a) const;

 private:
  PolyRing ring_;
  FpPoly mod_;
};

}  // namespace wreathcert
