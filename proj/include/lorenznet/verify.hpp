#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lorenznet {

enum class FixtureStatus { pass, fail, flagged };
std::string to_string(FixtureStatus s);

struct FixtureResult {
  std::string group;
  std::string name;
  std::string expected;
  std::string computed;
  FixtureStatus status = FixtureStatus::pass;
};

struct VerifyOptions {
  std::optional<std::string> only;  // run one group
  std::size_t tree_max_n = 8;       // largest n for the tree gamma/delta check
};

// Group names accepted by VerifyOptions::only.
const std::vector<std::string>& verify_groups();

// Runs the worked-example fixture suite. Known inconsistencies in the source
// material are reported as flagged rather than failed.
std::vector<FixtureResult> run_verification(const VerifyOptions& options = {});

nlohmann::json to_json(const std::vector<FixtureResult>& results);

}  // namespace lorenznet
