#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "wreathcert/errors.hpp"
#include "wreathcert/permutation.hpp"
#include "wreathcert/rational.hpp"

namespace wreathcert {

/// A concrete group acting on values of `value_type`.
template <class K>
concept GroupOps = requires(const K& k, const typename K::value_type& a) {
  typename K::value_type;
  { k.identity() } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.equal(a, a) } -> std::same_as<bool>;
};

template <class K>
bool is_identity(const K& k, const typename K::value_type& a) {
  return k.equal(a, k.identity());
}

// Scalars are exact rationals except on the unitary backend, which uses binary64.
template <class S>
S scalar_ratio(std::int64_t num, std::int64_t den);
template <>
inline Rational scalar_ratio<Rational>(std::int64_t num, std::int64_t den) {
  return ratio(num, den);
}
template <>
inline double scalar_ratio<double>(std::int64_t num, std::int64_t den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

inline Rational to_scalar(const Rational& r, const Rational*) { return r; }
inline double to_scalar(const Rational& r, const double*) { return r.get_d(); }
template <class S>
S from_rational(const Rational& r) {
  return to_scalar(r, static_cast<const S*>(nullptr));
}

/// Rounding allowance used when checking a bound on binary64 values; zero for rationals.
inline Rational slack_for(const Rational&) { return Rational(0); }
inline double slack_for(double) { return 1e-9; }

/// Conjugacy-invariant length on a group's values with a stated upper bound.
template <class V, class S>
struct LengthFunction {
  std::string name;
  S bound;
  std::function<S(const V&)> eval;

  S operator()(const V& v) const { return eval(v); }
};

/// Sym(A) with composition as product.
class SymGroup {
 public:
  using value_type = Permutation;
  explicit SymGroup(std::size_t degree) : degree_(degree) {
    if (degree == 0) throw DomainError("Sym of an empty set");
  }
  std::size_t degree() const noexcept { return degree_; }
  Permutation identity() const { return Permutation(degree_); }
  Permutation mul(const Permutation& a, const Permutation& b) const { return a * b; }
  Permutation inv(const Permutation& a) const { return a.inverse(); }
  bool equal(const Permutation& a, const Permutation& b) const { return a == b; }

 private:
  std::size_t degree_;
};

inline LengthFunction<Permutation, Rational> hamming_length_fn() {
  return {"hamming", Rational(1), [](const Permutation& p) { return hamming_length(p); }};
}

/// Default-identity family (k_b)_{b in B}; identity entries are never stored.
template <class V>
struct SparseFamily {
  std::map<std::uint32_t, V> entries;

  bool empty() const noexcept { return entries.empty(); }
  const V* find(std::uint32_t b) const {
    auto it = entries.find(b);
    return it == entries.end() ? nullptr : &it->second;
  }
};

/// The direct sum of copies of K indexed by {0, ..., index_size-1}.
template <GroupOps K>
class DirectSum {
 public:
  using base_value = typename K::value_type;
  using value_type = SparseFamily<base_value>;

  DirectSum(K base, std::size_t index_size) : base_(std::move(base)), size_(index_size) {}

  const K& base() const noexcept { return base_; }
  std::size_t index_size() const noexcept { return size_; }

  value_type identity() const { return {}; }

  value_type single(std::uint32_t index, base_value v) const {
    check(index);
    value_type r;
    if (!is_identity(base_, v)) r.entries.emplace(index, std::move(v));
    return r;
  }

  value_type mul(const value_type& a, const value_type& b) const {
    value_type r = a;
    for (const auto& [i, v] : b.entries) {
      check(i);
      auto it = r.entries.find(i);
      if (it == r.entries.end()) {
        r.entries.emplace(i, v);
      } else {
        it->second = base_.mul(it->second, v);
        if (is_identity(base_, it->second)) r.entries.erase(it);
      }
    }
    return r;
  }

  value_type inv(const value_type& a) const {
    value_type r;
    for (const auto& [i, v] : a.entries) r.entries.emplace(i, base_.inv(v));
    return r;
  }

  bool equal(const value_type& a, const value_type& b) const {
    if (a.entries.size() != b.entries.size()) return false;
    auto ib = b.entries.begin();
    for (const auto& [i, v] : a.entries) {
      if (i != ib->first || !base_.equal(v, ib->second)) return false;
      ++ib;
    }
    return true;
  }

 private:
  void check(std::uint32_t i) const {
    if (i >= size_) throw DomainError("direct-sum index out of range");
  }

  K base_;
  std::size_t size_;
};

/// Element (k, tau) of L wr_B Sym(B).
template <class V>
struct WreathMetricElem {
  SparseFamily<V> family;
  Permutation tau;
};

/// The permutational wreath product L wr_B Sym(B) with
/// (k, tau)(h, pi) = (k alpha_tau(h), tau pi) and alpha_tau(h)_b = h_{tau^{-1}(b)}.
template <GroupOps L>
class WreathGroup {
 public:
  using inner_value = typename L::value_type;
  using value_type = WreathMetricElem<inner_value>;

  WreathGroup(L inner, std::size_t degree) : inner_(std::move(inner)), degree_(degree) {
    if (degree == 0) throw DomainError("wreath product over an empty set");
  }

  const L& inner() const noexcept { return inner_; }
  std::size_t degree() const noexcept { return degree_; }

  value_type identity() const { return {{}, Permutation(degree_)}; }

  /// alpha_tau: the entry at c moves to tau(c).
  SparseFamily<inner_value> shift(const Permutation& tau, const SparseFamily<inner_value>& h) const {
    SparseFamily<inner_value> r;
    for (const auto& [c, v] : h.entries) r.entries.emplace(tau(c), v);
    return r;
  }

  value_type mul(const value_type& x, const value_type& y) const {
    check(x);
    check(y);
    value_type r{x.family, x.tau * y.tau};
    for (const auto& [c, v] : y.family.entries) {
      const std::uint32_t b = x.tau(c);  // alpha_tau(h)_b = h_c
      auto it = r.family.entries.find(b);
      if (it == r.family.entries.end()) {
        r.family.entries.emplace(b, v);
      } else {
        it->second = inner_.mul(it->second, v);
        if (is_identity(inner_, it->second)) r.family.entries.erase(it);
      }
    }
    return r;
  }

  value_type inv(const value_type& x) const {
    check(x);
    Permutation tinv = x.tau.inverse();
    SparseFamily<inner_value> kinv;
    for (const auto& [b, v] : x.family.entries) kinv.entries.emplace(tinv(b), inner_.inv(v));
    return {std::move(kinv), std::move(tinv)};
  }

  bool equal(const value_type& x, const value_type& y) const {
    if (x.tau != y.tau || x.family.entries.size() != y.family.entries.size()) return false;
    auto iy = y.family.entries.begin();
    for (const auto& [b, v] : x.family.entries) {
      if (b != iy->first || !inner_.equal(v, iy->second)) return false;
      ++iy;
    }
    return true;
  }

 private:
  void check(const value_type& x) const {
    if (x.tau.degree() != degree_) throw DomainError("wreath element over a different index set");
  }

  L inner_;
  std::size_t degree_;
};

/// ell_Hamm(tau) + (1/|B|) sum_{tau(b)=b} ell(k_b), for a length ell bounded by 1.
template <class V, class S>
S wreath_length(const WreathMetricElem<V>& x, const LengthFunction<V, S>& ell) {
  const auto n = static_cast<std::int64_t>(x.tau.degree());
  if (n == 0) throw DomainError("wreath length over an empty index set");
  S sum = scalar_ratio<S>(0, 1);
  for (const auto& [b, v] : x.family.entries) {
    if (x.tau(b) != b) continue;
    S value = ell(v);
    if (value > scalar_ratio<S>(1, 1) + slack_for(value))
      throw ContractError("length '" + ell.name + "' exceeds 1 on a wreath entry");
    sum += value;
  }
  const auto moved = static_cast<std::int64_t>(x.tau.moved_points());
  return S(scalar_ratio<S>(moved, n) + sum / scalar_ratio<S>(n, 1));
}

/// max_b ell(k_b); 0 on the empty family.
template <class V, class S>
S max_length(const SparseFamily<V>& v, const LengthFunction<V, S>& ell) {
  S best = scalar_ratio<S>(0, 1);
  for (const auto& [b, k] : v.entries) best = std::max<S>(best, ell(k));
  return best;
}

/// ell_max on a direct sum built from a length on its base.
template <class V, class S>
LengthFunction<SparseFamily<V>, S> max_length_fn(LengthFunction<V, S> ell) {
  std::string nm = ell.name + "_max";
  S bound = ell.bound;
  return {std::move(nm), bound,
          [ell = std::move(ell)](const SparseFamily<V>& v) { return max_length(v, ell); }};
}

/// The length ell~ on a wreath product from a length on its entries.
template <class V, class S>
LengthFunction<WreathMetricElem<V>, S> wreath_length_fn(LengthFunction<V, S> ell) {
  std::string nm = "wreath(" + ell.name + ")";
  return {std::move(nm), scalar_ratio<S>(1, 1),
          [ell = std::move(ell)](const WreathMetricElem<V>& x) { return wreath_length(x, ell); }};
}

}  // namespace wreathcert
