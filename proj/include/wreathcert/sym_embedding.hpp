#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wreathcert/metric_group.hpp"

namespace wreathcert {

using PermFamily = SparseFamily<Permutation>;            // element of +_B Sym(A)
using SymWreathElem = WreathMetricElem<PermFamily>;      // element of (+_B Sym(A)) wr_B Sym(B)

/// |A|^|B|, or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> tuple_count(std::size_t a, std::size_t b);

/// Diagonal action on A^B; tuples are encoded as sum_beta a_beta |A|^beta.
/// Throws DomainError if an entry acts on a different A or |A|^|B| exceeds `cap`.
Permutation phi_sym(const PermFamily& pi, std::size_t a, std::size_t b, std::uint64_t cap);

/// 1 - prod_beta (1 - ell_Hamm(pi_beta)) = ell_Hamm(Phi(pi)).
Rational phi_hamming(const PermFamily& pi);

/// ell' = ell_Hamm o Phi on +_B Sym(A).
LengthFunction<PermFamily, Rational> phi_hamming_length_fn();

/// Psi(pi, tau): (a, b) -> (Phi(pi_{tau(b)}) a, tau(b)) on A^B x B, evaluated lazily.
class BigPermutation {
 public:
  BigPermutation(SymWreathElem x, std::size_t a);

  std::size_t alphabet() const noexcept { return a_; }
  std::size_t index_size() const noexcept { return x_.tau.degree(); }
  /// |A|^|B| * |B|, or nullopt on overflow.
  std::optional<std::uint64_t> carrier_size() const;

  std::pair<std::uint64_t, std::uint32_t> operator()(std::uint64_t tuple, std::uint32_t b) const;

  /// Image array over index tuple + |A|^|B| * b; nullopt when the carrier exceeds `cap`.
  std::optional<Permutation> materialize(std::uint64_t cap) const;

  /// Number of moved points by enumeration; nullopt above `cap`.
  std::optional<Rational> enumerated_hamming(std::uint64_t cap) const;

 private:
  SymWreathElem x_;
  std::size_t a_;
};

BigPermutation psi_sym(const SymWreathElem& x, std::size_t a);

/// ell_Hamm(tau) + (1/|B|) sum_{tau b = b} [1 - prod_beta (1 - ell_Hamm(pi_{b,beta}))].
Rational psi_hamming_formula(const SymWreathElem& x);

}  // namespace wreathcert

#include "wreathcert/pipeline.hpp"
#include "wreathcert/sofic_approx.hpp"

namespace wreathcert {

/// Theta from (theta, sigma) with c = 1/2, composed with Psi into Sym(A^B x B).
/// Defects and margins use the exact product formula; carriers within opts.cap are
/// also materialized and compared against it.
PipelineReport<Rational> sofic_pipeline(const SoficMap& theta, const SoficMap& sigma,
                                        const std::vector<WreathElem>& F, const Rational& eps,
                                        const PipelineOptions& opts = {});

}  // namespace wreathcert
