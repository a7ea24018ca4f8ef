#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "wreathcert/errors.hpp"
#include "wreathcert/group.hpp"
#include "wreathcert/metric_group.hpp"

namespace wreathcert {

/// d(x, y) = ell(y^-1 x) for a bi-invariant metric given by its length.
template <GroupOps K, class S>
S distance(const K& k, const LengthFunction<typename K::value_type, S>& ell,
           const typename K::value_type& x, const typename K::value_type& y) {
  return ell(k.mul(k.inv(y), x));
}

template <class D, class S>
struct MultDefect {
  S value{};                               // max over F x F of d(theta(gh), theta(g) theta(h))
  std::optional<std::pair<D, D>> witness;  // a pair attaining the max, if positive
  std::size_t pairs = 0;
};

template <class D, class S>
struct InjMargins {
  std::vector<std::pair<D, S>> margins;  // g -> ell(theta(g)) for g in F \ {1}
  std::optional<D> argmin;

  std::optional<S> min() const {
    if (!argmin) return std::nullopt;
    for (const auto& [g, m] : margins)
      if (g == *argmin) return m;
    return std::nullopt;
  }
};

/// Multiplicativity defect of `map` over F x F. Works for any domain with a product.
template <class D, class Map, class Mul, GroupOps K, class S>
MultDefect<D, S> measure_mult_defect(const Map& map, const std::vector<D>& F, const Mul& mul,
                                     const K& k,
                                     const LengthFunction<typename K::value_type, S>& ell) {
  MultDefect<D, S> out;
  out.value = scalar_ratio<S>(0, 1);
  std::vector<typename K::value_type> images;
  images.reserve(F.size());
  for (const auto& g : F) images.push_back(map(g));
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < F.size(); ++j) {
      ++out.pairs;
      S d = distance(k, ell, map(mul(F[i], F[j])), k.mul(images[i], images[j]));
      if (d > out.value) {
        out.value = d;
        out.witness = std::make_pair(F[i], F[j]);
      }
    }
  return out;
}

/// ell(map(g)) for every non-identity g in F, with the minimizing element.
template <class D, class Map, class IsOne, GroupOps K, class S>
InjMargins<D, S> measure_inj_margins(const Map& map, const std::vector<D>& F, const IsOne& is_one,
                                     const LengthFunction<typename K::value_type, S>& ell,
                                     const K&) {
  InjMargins<D, S> out;
  std::optional<S> best;
  for (const auto& g : F) {
    if (is_one(g)) continue;
    S m = ell(map(g));
    if (!best || m < *best) {
      best = m;
      out.argmin = g;
    }
    out.margins.emplace_back(g, m);
  }
  return out;
}

/// A map theta: G -> K with theta(1) = 1, evaluated lazily and memoized so that
/// witnesses are reproducible. Copies share the cache; population is serialized.
template <GroupOps K>
class ApproxMap {
 public:
  using value_type = typename K::value_type;
  using Generator = std::function<value_type(Elem)>;

  ApproxMap(GroupPtr domain, K target, Generator gen)
      : state_(std::make_shared<State>(std::move(domain), std::move(target), std::move(gen))) {
    if (!state_->domain) throw DomainError("approximation map without a domain group");
    if (!is_identity(state_->target, (*this)(state_->domain->identity())))
      throw DomainError("approximation map must send 1 to 1");
  }

  /// A finite partial map; querying outside the table is a contract error.
  static ApproxMap from_table(GroupPtr domain, K target, std::map<Elem, value_type> table) {
    auto shared = std::make_shared<const std::map<Elem, value_type>>(std::move(table));
    GroupPtr dom = domain;
    return ApproxMap(std::move(domain), std::move(target), [shared, dom](Elem g) {
      auto it = shared->find(g);
      if (it == shared->end())
        throw ContractError("approximation map has no entry for " + dom->name(g));
      return it->second;
    });
  }

  const GroupPtr& domain() const noexcept { return state_->domain; }
  const K& target() const noexcept { return state_->target; }

  value_type operator()(Elem g) const {
    if (!state_->domain->contains(g)) throw DomainError("element not in the approximation's domain");
    {
      std::lock_guard lock(state_->mutex);
      auto it = state_->cache.find(g);
      if (it != state_->cache.end()) return it->second;
    }
    value_type v = state_->generator(g);
    std::lock_guard lock(state_->mutex);
    return state_->cache.emplace(g, std::move(v)).first->second;
  }

  template <class S>
  MultDefect<Elem, S> mult_defect(const std::vector<Elem>& F,
                                  const LengthFunction<value_type, S>& ell) const {
    const auto& dom = *state_->domain;
    return measure_mult_defect(*this, F, [&dom](Elem a, Elem b) { return dom.mul(a, b); },
                               state_->target, ell);
  }

  template <class S>
  InjMargins<Elem, S> inj_margins(const std::vector<Elem>& F,
                                  const LengthFunction<value_type, S>& ell) const {
    const Elem one = state_->domain->identity();
    return measure_inj_margins(*this, F, [one](Elem g) { return g == one; }, ell, state_->target);
  }

 private:
  struct State {
    State(GroupPtr d, K t, Generator g)
        : domain(std::move(d)), target(std::move(t)), generator(std::move(g)) {}
    GroupPtr domain;
    K target;
    Generator generator;
    std::mutex mutex;
    std::map<Elem, value_type> cache;
  };
  std::shared_ptr<State> state_;
};

}  // namespace wreathcert
