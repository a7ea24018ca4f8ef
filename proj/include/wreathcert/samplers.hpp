#pragma once

#include <random>

#include "wreathcert/rank_embedding.hpp"
#include "wreathcert/sym_embedding.hpp"
#include "wreathcert/unitary.hpp"

namespace wreathcert {

/// Uniform permutation of {0..n-1} (Fisher-Yates).
Permutation random_permutation(std::mt19937_64& rng, std::size_t n);

/// A uniform family in +_B Sym(A), identity entries omitted.
PermFamily random_perm_family(std::mt19937_64& rng, std::size_t a, std::size_t b);
/// Uniform tau and independent families at every b.
SymWreathElem random_sym_wreath(std::mt19937_64& rng, std::size_t a, std::size_t b);

/// Each entry present with probability 2/3.
UnitaryFamily random_unitary_family(std::mt19937_64& rng, std::size_t n, std::size_t b);
/// Uniform tau; blocks as random_unitary_family.
UnitaryWreathElem random_unitary_wreath(std::mt19937_64& rng, std::size_t n, std::size_t b);
LinearWreathElem random_linear_wreath(const PrimeField& f, std::mt19937_64& rng, std::size_t n, std::size_t b);

}  // namespace wreathcert
