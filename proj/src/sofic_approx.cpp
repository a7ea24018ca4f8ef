#include "wreathcert/sofic_approx.hpp"

#include <algorithm>
#include <numeric>

#include "wreathcert/rng.hpp"

namespace wreathcert {

SoficMap regular_rep(const GroupPtr& group, std::size_t copies) {
  if (!group || !group->is_finite()) throw DomainError("regular representation needs a finite group");
  if (copies == 0) throw DomainError("regular representation with zero copies");
  const std::size_t n = group->order();
  SymGroup target(n * copies);
  return SoficMap(group, target, [group, n, copies](Elem g) {
    std::vector<std::uint32_t> img(n * copies);
    for (std::size_t x = 0; x < n; ++x) {
      auto gx = static_cast<std::size_t>(group->mul(g, static_cast<Elem>(x)));
      for (std::size_t c = 0; c < copies; ++c)
        img[c * n + x] = static_cast<std::uint32_t>(c * n + gx);
    }
    return Permutation(std::move(img));
  });
}

SoficMap cyclic_shift_rep(std::size_t n, GroupPtr domain) {
  if (n == 0) throw DomainError("cyclic shift on an empty set");
  if (!domain) domain = Group::integers();
  if (domain->is_finite()) {
    if (n % domain->order() != 0 || domain->description().rfind("Z/", 0) != 0)
      throw DomainError("cyclic shifts of Z/m need a cyclic domain whose order divides n");
  }
  // Z/m acts through the subgroup generated by n/m.
  const std::int64_t step = domain->is_finite() ? static_cast<std::int64_t>(n / domain->order()) : 1;
  return SoficMap(domain, SymGroup(n), [n, step](Elem k) {
    const auto m = static_cast<std::int64_t>(n);
    const auto s = static_cast<std::uint32_t>((((k * step) % m) + m) % m);
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>((x + s) % n);
    return Permutation(std::move(img));
  });
}

SoficMap corrupt(const SoficMap& sigma, const Rational& delta, std::uint64_t seed) {
  if (delta < 0 || delta >= 1) throw DomainError("corruption rate must lie in [0, 1)");
  const std::size_t n = sigma.target().degree();
  const Rational scaled = delta * static_cast<unsigned long>(n);
  mpz_class floor_z;
  mpz_fdiv_q(floor_z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  // A single point cannot be moved on its own.
  const std::size_t moved = floor_z.get_ui() >= 2 ? floor_z.get_ui() : 0;
  const Elem one = sigma.domain()->identity();
  return SoficMap(sigma.domain(), sigma.target(), [sigma, n, moved, seed, one](Elem g) {
    Permutation base = sigma(g);
    if (g == one || moved == 0) return base;
    auto rng = seeded_engine(seed, static_cast<std::uint64_t>(g));
    // Partial Fisher-Yates picks `moved` distinct points; cycling them moves each one.
    std::vector<std::uint32_t> pts(n);
    std::iota(pts.begin(), pts.end(), 0u);
    for (std::size_t i = 0; i < moved; ++i)
      std::swap(pts[i], pts[i + uniform_below(rng, n - i)]);
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (std::size_t i = 0; i < moved; ++i) img[pts[i]] = pts[(i + 1) % moved];
    return Permutation(std::move(img)) * base;
  });
}

Rational freeness(const SoficMap& sigma, const std::vector<Elem>& F) {
  auto m = sigma.inj_margins(F, hamming_length_fn()).min();
  return m ? *m : Rational(1);
}

bool is_free(const SoficMap& sigma, const std::vector<Elem>& F, const Rational& eps) {
  return freeness(sigma, F) > 1 - eps;
}

Rational sofic_level(const SoficMap& sigma, const std::vector<Elem>& F) {
  Rational defect = sigma.mult_defect(F, hamming_length_fn()).value;
  Rational gap = 1 - freeness(sigma, F);
  return std::max(defect, gap);
}

}  // namespace wreathcert
