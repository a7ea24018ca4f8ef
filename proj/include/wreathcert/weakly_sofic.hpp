#pragma once

#include <vector>

#include "wreathcert/pipeline.hpp"
#include "wreathcert/sofic_approx.hpp"
#include "wreathcert/table_metric.hpp"

namespace wreathcert {

using TableMap = ApproxMap<TableMetricGroup>;

/// min(1, sum_b ell(k_b)) on +_B K: conjugacy-invariant, bounded by 1, restricts to ell
/// on each copy, and dominates ell_max.
LengthFunction<SparseFamily<Elem>, Rational> capped_sum_length_fn(LengthFunction<Elem, Rational> ell);

/// The identity G -> K for a table metric on G itself.
TableMap identity_embedding(const TableMetricGroup& k);

/// Q8 with ell(-1) = 1/2, ell(+-i) = ell(+-j) = 3/4, ell(+-k) = 1.
TableMetricGroup quaternion_metric();

/// Theta into (+_B K) wr_B Sym(B) with ell' the capped sum, certified directly: the
/// target is itself a finite group with a bi-invariant metric, so no further embedding.
/// Also audits the length axioms of ell~ on products of images.
PipelineReport<Rational> weaklysofic_pipeline(const TableMap& theta, const SoficMap& sigma,
                                              const std::vector<WreathElem>& F, const Rational& eps,
                                              MarginFunction c, const PipelineOptions& opts = {});

}  // namespace wreathcert
