#pragma once

#include <string>
#include <vector>

#include "wreathcert/group.hpp"
#include "wreathcert/length_laws.hpp"
#include "wreathcert/metric_group.hpp"

namespace wreathcert {

/// A finite group with a user-supplied length table, validated on construction
/// as a conjugacy-invariant length bounded by 1.
class TableMetricGroup {
 public:
  using value_type = Elem;

  /// Throws DomainError naming the first violated axiom.
  TableMetricGroup(GroupPtr group, std::vector<Rational> lengths);

  /// Exhaustive axiom check of a candidate table without throwing.
  static LawReport audit(const GroupPtr& group, const std::vector<Rational>& lengths);

  const GroupPtr& group() const noexcept { return group_; }
  Elem identity() const noexcept { return group_->identity(); }
  Elem mul(Elem a, Elem b) const { return group_->mul(a, b); }
  Elem inv(Elem a) const { return group_->inv(a); }
  bool equal(Elem a, Elem b) const noexcept { return a == b; }

  const Rational& length(Elem a) const;
  LengthFunction<Elem, Rational> length_fn() const;

 private:
  GroupPtr group_;
  std::vector<Rational> lengths_;
};

}  // namespace wreathcert
