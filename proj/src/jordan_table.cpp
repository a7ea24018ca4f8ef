#include "wreathcert/jordan_table.hpp"

#include <algorithm>
#include <sstream>

#include "wreathcert/errors.hpp"
#include "wreathcert/field_matrix.hpp"
#include "wreathcert/rng.hpp"

namespace wreathcert {

JordanTable jordan_table(std::uint32_t pmax, std::size_t nmax, std::size_t pairs, std::uint64_t seed) {
  if (pmax < 2 || pmax > 7) throw DomainError("jordan-table needs 2 <= pmax <= 7");
  if (nmax < 1 || nmax > 4) throw DomainError("jordan-table needs 1 <= nmax <= 4");
  if (pairs == 0) throw DomainError("jordan-table needs at least one pair");
  JordanTable t;
  t.all_min = true;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    if (p > pmax) break;
    unsigned d = 1;
    std::uint64_t q = p;
    while ((q - 1) * (q - 1) < pairs) {
      ++d;
      q *= p;
    }
    const PolyRing ring(p);
    const ExtField f(p, sieve_irreducible(ring, static_cast<int>(d)));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
    for (std::uint64_t a = 1; a < q; ++a)
      for (std::uint64_t b = 1; b < q; ++b) all.emplace_back(a, b);
    std::mt19937_64 rng = seeded_engine(seed, p);
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[uniform_below(rng, i)]);
    all.resize(std::min(all.size(), pairs));

    for (std::size_t n = 1; n <= nmax; ++n)
      for (std::size_t k = 1; k <= nmax; ++k) {
        JordanRow row{p, d, n, k, all.size(), n * k, 0, true};
        for (const auto& [a, b] : all) {
          const std::size_t c = tensor_jordan_count(f, f.element(a), f.element(b), n, k);
          row.min_count = std::min(row.min_count, c);
          row.max_count = std::max(row.max_count, c);
          row.all_min = row.all_min && c == std::min(n, k);
        }
        t.all_min = t.all_min && row.all_min;
        t.rows.push_back(row);
      }
  }
  return t;
}

std::string format_jordan_table(const JordanTable& t) {
  std::ostringstream out;
  out << "p  field  n  k  pairs  J  min{n,k}\n";
  for (const auto& r : t.rows) {
    out << r.p << "  F_" << r.p;
    if (r.field_degree > 1) out << '^' << r.field_degree;
    out << "  " << r.n << "  " << r.k << "  " << r.pairs << "  ";
    if (r.min_count == r.max_count)
      out << r.min_count;
    else
      out << r.min_count << ".." << r.max_count;
    out << "  " << std::min(r.n, r.k) << (r.all_min ? "" : "  MISMATCH") << "\n";
  }
  out << "all = min{n,k}: " << (t.all_min ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace wreathcert
