#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wreathcert/approx_io.hpp"
#include "wreathcert/construction.hpp"
#include "wreathcert/group.hpp"
#include "wreathcert/table_metric.hpp"

namespace wreathcert {

enum class GroupKindSpec { cyclic, symmetric, table, integers };

/// How G or H is described in a config. Table files hold {"names", "table"} and,
/// optionally, "lengths" ("p/q" per element) used as the metric of the weakly sofic path.
struct GroupSpec {
  GroupKindSpec kind = GroupKindSpec::cyclic;
  std::size_t n = 0;            // cyclic order or symmetric degree
  std::string generator = "a";  // cyclic only
  std::string file;             // table only, as written in the config

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class TargetClass { sofic, hyperlinear, linearsofic, weaklysofic };

const char* target_class_name(TargetClass t);

struct ExperimentConfig {
  GroupSpec G, H;
  TargetClass target = TargetClass::sofic;
  std::vector<std::string> window;          // wreath literals "{h1:g1, h2:g2}; h"
  Rational epsilon;
  std::optional<std::uint32_t> field_prime;  // linearsofic only
  std::vector<std::uint64_t> seeds{0};
  std::size_t sigma_copies = 1;              // finite H: regular representation on copies of H
  std::optional<std::size_t> sigma_shift;    // H = Z: cyclic shifts mod n
  Rational corruption = 0;                   // absolute delta
  Rational corruption_relative = 0;          // delta as a multiple of eps'
  std::uint64_t cap = 1u << 16;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Validates structure and class/field combinations; throws ParseError.
ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& c);
/// Reads a config file; table paths resolve relative to its directory.
ExperimentConfig load_config(const std::filesystem::path& path);

/// A group built from its spec, with the length table of a table spec when present.
struct BuiltGroup {
  GroupPtr group;
  std::optional<std::vector<Rational>> lengths;
};

BuiltGroup build_group(const GroupSpec& spec, const std::filesystem::path& base_dir = {});

/// Parses "{h1:g1, h2:g2}; h". ParseError carries the 1-based column of the problem.
WreathElem parse_wreath_literal(const GroupPtr& G, const GroupPtr& H, std::string_view text);

/// Outcome of certify over all seeds; the JSON is the full report.
struct ExperimentResult {
  Json report;
  Verdict verdict = Verdict::fail;
};

/// Runs the selected pipeline once per seed. Anything wrong with the inputs throws
/// ParseError or DomainError.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& base_dir = {});

/// Human-readable rendering of a stored report.
std::string pretty_report(const Json& report);

/// 0 pass, 1 fail, 3 hypotheses unmet.
int exit_code(Verdict v);

}  // namespace wreathcert
