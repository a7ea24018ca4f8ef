#pragma once

#include <cstdint>
#include <vector>

#include "wreathcert/approx_map.hpp"
#include "wreathcert/metric_group.hpp"

namespace wreathcert {

using SoficMap = ApproxMap<SymGroup>;

/// Left-multiplication action of a finite group on `copies` disjoint copies of itself.
SoficMap regular_rep(const GroupPtr& group, std::size_t copies = 1);

/// k -> (x -> x + k mod n) from the integers; from Z/m (m dividing n) k shifts by k n/m.
SoficMap cyclic_shift_rep(std::size_t n, GroupPtr domain = nullptr);

/// Post-composes every sigma(g), g != 1, with a seeded random permutation moving
/// floor(delta |B|) points (never more than ceil(delta |B|)); the defect grows by at most 3 delta.
SoficMap corrupt(const SoficMap& sigma, const Rational& delta, std::uint64_t seed);

/// min over F \ {1} of ell_Hamm(sigma(g)); 1 when F \ {1} is empty.
Rational freeness(const SoficMap& sigma, const std::vector<Elem>& F);

/// sigma is (F, eps)-free: freeness > 1 - eps.
bool is_free(const SoficMap& sigma, const std::vector<Elem>& F, const Rational& eps);

/// Smallest level at which sigma fails to be an (F, .)-sofic approximation:
/// max(mult defect, 1 - freeness). sigma is (F, eps)-sofic iff this is < eps.
Rational sofic_level(const SoficMap& sigma, const std::vector<Elem>& F);

}  // namespace wreathcert
