#include "wreathcert/finite_field.hpp"

#include <algorithm>
#include <map>

#include "wreathcert/rng.hpp"

namespace wreathcert {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw DomainError("field characteristic out of range");
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d)
    if (p % d == 0) throw DomainError(std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  auto r = v % static_cast<std::int64_t>(p_);
  return static_cast<value_type>(r < 0 ? r + p_ : r);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  value_type r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::element(std::uint64_t i) const {
  if (i >= p_) throw DomainError("field element index out of range");
  return static_cast<value_type>(i);
}

FpPoly PolyRing::constant(std::uint32_t c) const {
  c %= characteristic();
  return c ? FpPoly{c} : FpPoly{};
}

FpPoly PolyRing::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FpPoly PolyRing::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FpPoly PolyRing::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = characteristic();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  FpPoly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

FpPoly PolyRing::scale(const FpPoly& a, std::uint32_t c) const {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f_.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> PolyRing::divmod(const FpPoly& a, const FpPoly& b) const {
  if (b.empty()) throw DomainError("polynomial division by zero");
  FpPoly r = a;
  if (r.size() < b.size()) return {{}, r};
  FpPoly q(r.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = f_.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint32_t c = f_.mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = f_.sub(r[k + j], f_.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

FpPoly PolyRing::exact_div(const FpPoly& a, const FpPoly& b) const {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw ContractError("inexact polynomial division");
  return q;
}

FpPoly PolyRing::monic(const FpPoly& a) const {
  if (a.empty()) return a;
  return scale(a, f_.inv(a.back()));
}

FpPoly PolyRing::gcd(const FpPoly& a, const FpPoly& b) const {
  FpPoly x = a, y = b;
  while (!y.empty()) {
    FpPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FpPoly PolyRing::derivative(const FpPoly& a) const {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f_.mul(a[i], f_.from_int(static_cast<std::int64_t>(i)));
  trim(r);
  return r;
}

FpPoly PolyRing::powmod(const FpPoly& a, std::uint64_t e, const FpPoly& m) const {
  FpPoly r = mod(constant(1), m), b = mod(a, m);
  while (e) {
    if (e & 1) r = mod(mul(r, b), m);
    b = mod(mul(b, b), m);
    e >>= 1;
  }
  return r;
}

std::uint32_t PolyRing::eval(const FpPoly& a, std::uint32_t v) const {
  std::uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f_.add(f_.mul(r, v), a[i]);
  return r;
}

FpPoly PolyRing::monic_of_degree(int d, std::uint64_t i) const {
  FpPoly r(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k < d; ++k) {
    r[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(i % characteristic());
    i /= characteristic();
  }
  r.back() = 1;
  return r;
}

std::string PolyRing::to_string(const FpPoly& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!a[i]) continue;
    if (!s.empty()) s += " + ";
    if (a[i] != 1 || i == 0) s += std::to_string(a[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

namespace {

bool is_one(const FpPoly& a) { return a.size() == 1 && a[0] == 1; }

/// f = sum a_{kp} x^{kp}  ->  sum a_{kp} x^k (Frobenius fixes F_p).
FpPoly pth_root(const PolyRing& ring, const FpPoly& f) {
  const std::size_t p = ring.characteristic();
  FpPoly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  PolyRing::trim(r);
  return r;
}

void square_free(const PolyRing& ring, const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (PolyRing::degree(f) < 1) return;
  const int p = static_cast<int>(ring.characteristic());
  const FpPoly d = ring.derivative(f);
  if (d.empty()) {
    square_free(ring, pth_root(ring, f), mult * p, out);
    return;
  }
  FpPoly c = ring.gcd(f, d);
  FpPoly w = ring.exact_div(f, c);
  int i = 1;
  while (!is_one(w)) {
    FpPoly y = ring.gcd(w, c);
    FpPoly z = ring.exact_div(w, y);
    if (PolyRing::degree(z) > 0) out.emplace_back(ring.monic(z), i * mult);
    ++i;
    w = std::move(y);
    c = ring.exact_div(c, w);
  }
  if (PolyRing::degree(c) > 0) square_free(ring, pth_root(ring, ring.monic(c)), mult * p, out);
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const PolyRing& ring, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const std::uint32_t p = ring.characteristic();
  FpPoly h = ring.mod(ring.x(), f);
  for (int i = 1; 2 * i <= PolyRing::degree(f); ++i) {
    h = ring.powmod(h, p, f);
    FpPoly g = ring.gcd(f, ring.sub(h, ring.x()));
    if (!is_one(g)) {
      out.emplace_back(g, i);
      f = ring.exact_div(f, g);
      h = ring.mod(h, f);
    }
  }
  if (PolyRing::degree(f) > 0) out.emplace_back(f, PolyRing::degree(f));
  return out;
}

void equal_degree(const PolyRing& ring, const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const int n = PolyRing::degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  const std::uint32_t p = ring.characteristic();
  for (;;) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = static_cast<std::uint32_t>(uniform_below(rng, p));
    PolyRing::trim(a);
    if (PolyRing::degree(a) < 1) continue;
    FpPoly u;
    if (p == 2) {
      FpPoly t = a, s = a;
      for (int i = 1; i < d; ++i) {
        s = ring.mod(ring.mul(s, s), g);
        t = ring.add(t, s);
      }
      u = ring.gcd(g, t);
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      FpPoly norm = ring.mod(a, g), frob = ring.mod(a, g);
      for (int i = 1; i < d; ++i) {
        frob = ring.powmod(frob, p, g);
        norm = ring.mod(ring.mul(norm, frob), g);
      }
      FpPoly b = ring.powmod(norm, (p - 1) / 2, g);
      u = ring.gcd(g, ring.sub(b, ring.constant(1)));
    }
    const int du = PolyRing::degree(u);
    if (du > 0 && du < n) {
      equal_degree(ring, u, d, rng, out);
      equal_degree(ring, ring.exact_div(g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor(const PolyRing& ring, const FpPoly& f) {
  if (f.empty()) throw DomainError("factoring the zero polynomial");
  std::vector<std::pair<FpPoly, int>> sf;
  square_free(ring, ring.monic(f), 1, sf);
  std::map<FpPoly, int> acc;
  std::mt19937_64 rng = seeded_engine(0x5eed, ring.characteristic());
  for (const auto& [s, m] : sf)
    for (const auto& [g, d] : distinct_degree(ring, s)) {
      std::vector<FpPoly> parts;
      equal_degree(ring, g, d, rng, parts);
      for (auto& q : parts) acc[q] += m;
    }
  std::vector<std::pair<FpPoly, int>> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
  });
  return out;
}

bool is_irreducible(const PolyRing& ring, const FpPoly& f) {
  if (PolyRing::degree(f) < 1) return false;
  auto fs = factor(ring, f);
  return fs.size() == 1 && fs[0].second == 1;
}

ExtField::ExtField(std::uint32_t p, FpPoly modulus) : ring_(p), mod_(std::move(modulus)) {
  PolyRing::trim(mod_);
  if (PolyRing::degree(mod_) < 1 || mod_.back() != 1) throw DomainError("field modulus must be monic of degree >= 1");
  if (!is_irreducible(ring_, mod_)) throw DomainError("field modulus " + ring_.to_string(mod_) + " is reducible");
}

std::uint64_t ExtField::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (q > UINT64_MAX / characteristic()) throw DomainError("field order overflows 64 bits");
    q *= characteristic();
  }
  return q;
}

ExtField::value_type ExtField::from_int(std::int64_t v) const { return ring_.constant(ring_.field().from_int(v)); }

ExtField::value_type ExtField::inv(const value_type& a) const {
  if (a.empty()) throw DomainError("inverse of zero");
  // Extended Euclid: track s with s * a = r (mod modulus).
  FpPoly r0 = mod_, r1 = a, s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = ring_.divmod(r0, r1);
    FpPoly s = ring_.sub(s0, ring_.mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  return ring_.mod(ring_.scale(s0, ring_.field().inv(r0[0])), mod_);
}

ExtField::value_type ExtField::element(std::uint64_t i) const {
  if (i >= order()) throw DomainError("field element index out of range");
  FpPoly r(degree(), 0);
  for (auto& c : r) {
    c = static_cast<std::uint32_t>(i % characteristic());
    i /= characteristic();
  }
  PolyRing::trim(r);
  return r;
}

std::string ExtField::name(const value_type& a) const {
  if (degree() == 1) return a.empty() ? "0" : std::to_string(a[0]);
  std::string s = ring_.to_string(a);
  for (auto& ch : s)
    if (ch == 'x') ch = 'z';
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace wreathcert
