#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wreathcert {

/// J_{alpha beta}(J_n(alpha) (x) J_k(beta)) over sampled nonzero alpha, beta in F_{p^d},
/// d the least degree with at least `pairs` nonzero pairs.
struct JordanRow {
  std::uint32_t p = 0;
  unsigned field_degree = 1;
  std::size_t n = 0, k = 0;
  std::size_t pairs = 0;
  std::size_t min_count = 0, max_count = 0;
  bool all_min = false;  // every sampled pair gave min{n, k}
};

struct JordanTable {
  std::vector<JordanRow> rows;
  bool all_min = false;
};

/// Primes p <= pmax, 1 <= n, k <= nmax. Throws DomainError unless 2 <= pmax <= 7 and 1 <= nmax <= 4.
JordanTable jordan_table(std::uint32_t pmax, std::size_t nmax, std::size_t pairs = 25, std::uint64_t seed = 0);

std::string format_jordan_table(const JordanTable& t);

}  // namespace wreathcert
