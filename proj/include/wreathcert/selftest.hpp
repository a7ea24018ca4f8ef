#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wreathcert/pipeline.hpp"

namespace wreathcert {

struct SelftestOptions {
  std::uint64_t seed = 0;
  /// A table file whose "lengths" are audited as an extra suite (negative control).
  std::optional<std::filesystem::path> table_fixture;
};

/// One suite per module; each check counts instances and keeps the first failure.
std::vector<NamedCheck> selftest(const SelftestOptions& opts = {});

/// One line per suite, then "selftest: all green" or "selftest: N red".
std::string format_selftest(const std::vector<NamedCheck>& suites);

}  // namespace wreathcert
