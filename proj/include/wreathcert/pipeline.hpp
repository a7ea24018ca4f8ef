#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "wreathcert/construction.hpp"

namespace wreathcert {

struct PipelineOptions {
  std::uint64_t cap = 1u << 16;  // largest carrier / dimension materialized for cross-checks
  std::uint64_t seed = 0;        // recorded only; inputs carry their own seeds
};

/// An inequality or identity asserted by a pipeline, with how often it was checked.
struct NamedCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
  void record(bool holds, const std::string& detail = {}) {
    ++instances;
    if (!holds && failures++ == 0) first_failure = detail;
  }
};

/// Certificate of Theta plus the measured behaviour of Psi o Theta in the target class.
template <class S>
struct PipelineReport {
  std::string target_class;
  Certificate<S> cert;
  S psi_defect{};
  std::string psi_defect_witness;
  S psi_defect_bound{};  // threshold the defect is certified against
  bool psi_multiplicative = false;
  std::vector<MarginEntry<S>> psi_margins;  // margin = length of Psi(Theta(x)), required = c'(x) (scaled)
  bool psi_injective = false;
  std::vector<std::pair<std::string, S>> figures;  // additional reported quantities
  std::deque<NamedCheck> checks;  // deque: check() hands out stable references
  Verdict verdict = Verdict::fail;

  NamedCheck& check(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    NamedCheck c;
    c.name = name;
    checks.push_back(std::move(c));
    return checks.back();
  }

  void finish() {
    bool checks_ok = true;
    for (const auto& c : checks) checks_ok = checks_ok && c.ok();
    if (!cert.hypotheses_hold)
      verdict = Verdict::hypotheses_unmet;
    else
      verdict = cert.verdict == Verdict::pass && psi_multiplicative && psi_injective && checks_ok
                    ? Verdict::pass
                    : Verdict::fail;
  }
};

}  // namespace wreathcert
