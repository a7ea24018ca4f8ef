#include "wreathcert/samplers.hpp"

#include <numeric>

#include "wreathcert/rng.hpp"

namespace wreathcert {

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[uniform_below(rng, i)]);
  return Permutation(std::move(img));
}

PermFamily random_perm_family(std::mt19937_64& rng, std::size_t a, std::size_t b) {
  PermFamily f;
  for (std::uint32_t beta = 0; beta < b; ++beta) {
    auto p = random_permutation(rng, a);
    if (!p.is_identity()) f.entries.emplace(beta, std::move(p));
  }
  return f;
}

SymWreathElem random_sym_wreath(std::mt19937_64& rng, std::size_t a, std::size_t b) {
  SymWreathElem x{{}, random_permutation(rng, b)};
  for (std::uint32_t i = 0; i < b; ++i) {
    auto f = random_perm_family(rng, a, b);
    if (!f.empty()) x.family.entries.emplace(i, std::move(f));
  }
  return x;
}

UnitaryFamily random_unitary_family(std::mt19937_64& rng, std::size_t n, std::size_t b) {
  UnitaryFamily f;
  for (std::uint32_t beta = 0; beta < b; ++beta)
    if (uniform_below(rng, 3)) f.entries.emplace(beta, random_unitary(n, rng));
  return f;
}

UnitaryWreathElem random_unitary_wreath(std::mt19937_64& rng, std::size_t n, std::size_t b) {
  UnitaryWreathElem x{{}, random_permutation(rng, b)};
  for (std::uint32_t i = 0; i < b; ++i) {
    auto f = random_unitary_family(rng, n, b);
    if (!f.empty()) x.family.entries.emplace(i, std::move(f));
  }
  return x;
}

LinearWreathElem random_linear_wreath(const PrimeField& f, std::mt19937_64& rng, std::size_t n, std::size_t b) {
  LinearWreathElem x{{}, random_permutation(rng, b)};
  for (std::uint32_t i = 0; i < b; ++i) {
    LinearFamily fam;
    for (std::uint32_t beta = 0; beta < b; ++beta)
      if (uniform_below(rng, 3)) fam.entries.emplace(beta, random_invertible(f, n, rng));
    if (!fam.empty()) x.family.entries.emplace(i, std::move(fam));
  }
  return x;
}

}  // namespace wreathcert
