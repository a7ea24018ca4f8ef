#include "wreathcert/almost_hom.hpp"

#include <algorithm>

namespace wreathcert {

LemmaSets lemma_sets(const GroupPtr& g, const GroupPtr& h, const std::vector<WreathElem>& F) {
  LemmaSets s;
  auto add = [&s](const WreathElem& x) {
    if (std::find(s.F0.begin(), s.F0.end(), x) == s.F0.end()) s.F0.push_back(x);
  };
  add(WreathElem::identity(g, h));
  for (const auto& x : F) {
    if (x.base() != g || x.index() != h) throw DomainError("window element over different groups");
    add(x);
    add(x.inverse());
  }
  std::sort(s.F0.begin(), s.F0.end(), wreath_less);

  for (const auto& x : s.F0)
    if (std::find(s.E2.begin(), s.E2.end(), proj_H(x)) == s.E2.end()) s.E2.push_back(proj_H(x));
  std::sort(s.E2.begin(), s.E2.end());

  for (Elem top : s.E2)
    for (const auto& x : s.F0) {
      auto shifted = alpha_shift(top, proj_G(x));
      if (std::find(s.E1.begin(), s.E1.end(), shifted) == s.E1.end()) s.E1.push_back(shifted);
    }
  std::sort(s.E1.begin(), s.E1.end(), [&h](const SupportedTuple& a, const SupportedTuple& b) {
    return wreath_less(WreathElem(a, h->identity()), WreathElem(b, h->identity()));
  });
  return s;
}

}  // namespace wreathcert
