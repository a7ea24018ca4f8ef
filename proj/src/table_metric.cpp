#include "wreathcert/table_metric.hpp"

#include <array>

namespace wreathcert {

namespace {

/// Elements of a finite group viewed as a GroupOps model without lengths.
struct PlainGroup {
  using value_type = Elem;
  const Group* g;
  Elem identity() const { return g->identity(); }
  Elem mul(Elem a, Elem b) const { return g->mul(a, b); }
  Elem inv(Elem a) const { return g->inv(a); }
  bool equal(Elem a, Elem b) const { return a == b; }
};

}  // namespace

LawReport TableMetricGroup::audit(const GroupPtr& group, const std::vector<Rational>& lengths) {
  if (!group || !group->is_finite()) throw DomainError("table metrics need a finite group");
  if (lengths.size() != group->order())
    throw DomainError("length table has " + std::to_string(lengths.size()) + " entries, group has " +
                      std::to_string(group->order()));
  LengthFunction<Elem, Rational> ell{"table", Rational(1), [&lengths](Elem a) {
                                       return lengths[static_cast<std::size_t>(a)];
                                     }};
  // Pairs suffice: triangle uses (x, y), conjugacy uses (z = y, x).
  std::vector<std::array<Elem, 3>> samples;
  for (Elem x : group->elements())
    for (Elem y : group->elements()) samples.push_back({x, y, y});
  return length_law_check(PlainGroup{group.get()}, ell,
                          std::span<const std::array<Elem, 3>>(samples));
}

TableMetricGroup::TableMetricGroup(GroupPtr group, std::vector<Rational> lengths)
    : group_(std::move(group)), lengths_(std::move(lengths)) {
  auto report = audit(group_, lengths_);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw DomainError("length table violates " + v.axiom + " (" + v.detail + ")");
  }
}

const Rational& TableMetricGroup::length(Elem a) const {
  if (!group_->contains(a)) throw DomainError("element not in the table group");
  return lengths_[static_cast<std::size_t>(a)];
}

LengthFunction<Elem, Rational> TableMetricGroup::length_fn() const {
  return {"table", Rational(1), [lengths = lengths_](Elem a) {
            return lengths[static_cast<std::size_t>(a)];
          }};
}

}  // namespace wreathcert
