#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wreathcert/metric_group.hpp"

namespace wreathcert {

struct LawViolation {
  std::string axiom;  // identity | bound | symmetry | triangle | conjugacy
  std::string detail;
};

struct LawReport {
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<LawViolation> violations;  // first few only

  bool ok() const noexcept { return violation_count == 0; }
};

namespace detail {

inline bool le(const Rational& a, const Rational& b, double) { return a <= b; }
inline bool le(double a, double b, double tol) { return a <= b + tol; }
inline bool eq(const Rational& a, const Rational& b, double) { return a == b; }
inline bool eq(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline std::string show(const Rational& r) { return format_rational(r); }
inline std::string show(double d) { return std::to_string(d); }

}  // namespace detail

/// Checks the conjugacy-invariant length axioms on sampled triples (x, y, z):
/// ell(1) = 0, 0 <= ell(x) <= bound, ell(x^-1) = ell(x), ell(xy) <= ell(x) + ell(y),
/// ell(z x z^-1) = ell(x).
template <GroupOps K, class S>
LawReport length_law_check(const K& group,
                           const LengthFunction<typename K::value_type, S>& ell,
                           std::span<const std::array<typename K::value_type, 3>> samples,
                           double tol = 0.0) {
  constexpr std::size_t kKept = 16;
  LawReport report;
  auto flag = [&](const char* axiom, std::string detail) {
    ++report.violation_count;
    if (report.violations.size() < kKept) report.violations.push_back({axiom, std::move(detail)});
  };
  const S zero = scalar_ratio<S>(0, 1);
  if (!detail::eq(ell(group.identity()), zero, tol)) flag("identity", "ell(1) = " + detail::show(ell(group.identity())));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [x, y, z] = samples[i];
    const std::string at = "sample " + std::to_string(i);
    const S lx = ell(x);
    const S ly = ell(y);
    ++report.checked;
    if (!detail::le(zero, lx, tol) || !detail::le(lx, ell.bound, tol))
      flag("bound", at + ": ell(x) = " + detail::show(lx));
    const S linv = ell(group.inv(x));
    if (!detail::eq(lx, linv, tol))
      flag("symmetry", at + ": ell(x) = " + detail::show(lx) + ", ell(x^-1) = " + detail::show(linv));
    const S lxy = ell(group.mul(x, y));
    if (!detail::le(lxy, S(lx + ly), tol))
      flag("triangle", at + ": ell(xy) = " + detail::show(lxy) + " > " + detail::show(S(lx + ly)));
    const S lconj = ell(group.mul(group.mul(z, x), group.inv(z)));
    if (!detail::eq(lconj, lx, tol))
      flag("conjugacy", at + ": ell(zxz^-1) = " + detail::show(lconj) + ", ell(x) = " + detail::show(lx));
  }
  return report;
}

}  // namespace wreathcert
