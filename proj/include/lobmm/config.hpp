#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lobmm/backtester.hpp"
#include "lobmm/calibration.hpp"
#include "lobmm/hjb_solver.hpp"
#include "lobmm/scenario.hpp"

namespace lobmm {

/// One JSON document per run. Sections: model_path, model (full model, or a merge patch
/// over model_path), scheme, calib, backtest, sweeps, out_dir. Relative paths resolve
/// against the config file's directory.
struct RunConfig {
  std::optional<std::filesystem::path> model_path;
  Json model_patch;  // null when absent
  SchemeParams scheme;
  CalibrationSettings calib;
  BacktestSettings backtest;
  std::vector<SweepSpec> sweeps;
  std::filesystem::path out_dir = "out";

  Json to_json() const;
};

RunConfig parse_run_config(const Json& doc, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

/// Reads model_path (if any) and applies the inline model section on top.
MarketModel resolve_model(const RunConfig& config, std::vector<std::string>* warnings = nullptr);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const Json& doc, const std::filesystem::path& path);

}  // namespace lobmm
