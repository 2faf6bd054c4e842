#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sncqa/optimizer.hpp"
#include "sncqa/spinmodel.hpp"
#include "sncqa/tableaux.hpp"

namespace sncqa {

/// Bad config text or field. `what()` names the field or the parse position.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeConfig {
  std::string builtin;  // empty when edges are given explicitly
  LatticeSpec spec;
  friend bool operator==(const LatticeConfig&, const LatticeConfig&) = default;
};

struct OutputConfig {
  std::string trace_csv = "trace.csv";
  std::string summary_json = "summary.json";
  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct VerifyConfig {
  bool second_order = true;
  int max_depth = 64;
  int max_rows = 0;  // 0: all shapes when n <= 6, two-row shapes otherwise
  friend bool operator==(const VerifyConfig&, const VerifyConfig&) = default;
};

/// JSON run configuration. Top-level keys: lattice (required), irrep, train,
/// output, verify. Unknown keys are rejected.
struct RunConfig {
  LatticeConfig lattice;
  std::optional<Partition> irrep;
  TrainConfig train;
  OutputConfig output;
  VerifyConfig verify;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);
/// Canonical JSON text; parse_config(config_to_json(c)) == c.
std::string config_to_json(const RunConfig& config, int indent = 2);

}  // namespace sncqa
