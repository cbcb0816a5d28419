#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lobmm/hjb_solver.hpp"
#include "lobmm/market_model.hpp"
#include "lobmm/policy_io.hpp"

namespace lobmm {

enum class StrategyKind { policy, constant };

/// Either a solved policy or the constant benchmark (Bb, Ba, max_limit, max_limit),
/// which sends no market orders before the horizon.
struct StrategySpec {
  StrategyKind kind = StrategyKind::constant;
  std::shared_ptr<const PolicyArtifact> policy;
  std::string label = "constant";

  static StrategySpec constant() { return {}; }
  static StrategySpec from_policy(std::shared_ptr<const PolicyArtifact> artifact, std::string label = "optimal") {
    return {StrategyKind::policy, std::move(artifact), std::move(label)};
  }
};

/// Fails with ArtifactMismatch unless the policy was solved for `model` (or mismatch is allowed).
void check_strategy(const StrategySpec& strategy, const MarketModel& model, bool allow_mismatch);

struct BacktestSettings {
  double horizon = 300.0;
  double step = 0.3;
  int n_paths = 10000;
  std::uint64_t seed = 1;
  int sample_paths = 10;
  unsigned threads = 0;
  bool allow_mismatch = false;
};

enum class RngChannel : std::uint32_t { price = 0, spread = 1, bid_fill = 2, ask_fill = 3 };

/// Independent generator for (master seed, path, channel); draws do not depend on the
/// order in which paths run.
std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t path, RngChannel channel);

enum class FlowKind : std::uint8_t { bid_fill, ask_fill, market, liquidation };

struct CashFlow {
  int step = 0;
  FlowKind kind = FlowKind::bid_fill;
  int shares = 0;       // signed change of inventory
  double cash = 0.0;    // signed change of cash
  double tax = 0.0;     // stamp duty inside `cash`
};

/// State after each step; row 0 is the initial state.
struct PathStep {
  double t = 0.0;
  double P = 0.0;
  int S = 1;  // spread state, 1-based
  Action action;
  bool bid_fill = false;
  bool ask_fill = false;
  int market = 0;  // signed market order shares
  double X = 0.0;
  int Y = 0;
  double U = 0.0;  // X - c(-Y, P, S)
  int Q = 0;
  int Qm = 0;
};

struct PathSummary {
  double X_T = 0.0;  // after forced liquidation
  int Q_T = 0;
  int Qm_T = 0;
  double mean_abs_y = 0.0;  // over post-step inventories
  double tax = 0.0;
};

struct PathRecord {
  std::vector<PathStep> steps;
  std::vector<CashFlow> flows;
  PathSummary summary;
};

/// Simulates one path. When `record` is non-null the full series and cash flows are stored.
/// `abs_y` (size n) receives |Y_{t_k}| after each step when non-null.
PathSummary simulate_path(const MarketModel& model, const StrategySpec& strategy, const BacktestSettings& settings,
                          std::uint64_t path_index, PathRecord* record = nullptr, double* abs_y = nullptr);

/// One row of metrics.csv. Ratios are empty when undefined.
struct MetricsSummary {
  std::string label;
  std::size_t n_paths = 0;
  double mean = 0.0;
  double std = 0.0;
  double skew = 0.0;
  double kurt = 0.0;
  std::optional<double> info_ratio;
  std::optional<double> profit_per_trade;
  std::optional<double> risk_per_trade;
  double mean_q = 0.0;
  double mean_qm = 0.0;
  std::optional<double> market_ratio;
};

MetricsSummary compute_metrics(std::span<const double> x_t, std::span<const double> q_t,
                               std::span<const double> qm_t);

struct MonteCarloResult {
  MetricsSummary metrics;
  std::vector<PathSummary> paths;
  std::vector<PathRecord> samples;
  // Mean and std over paths of |Y_t| at each step (t_1..t_n).
  std::vector<double> abs_y_mean;
  std::vector<double> abs_y_std;
  SampleMoments mean_abs_y;
  SampleMoments tax;
};

MonteCarloResult run_monte_carlo(const MarketModel& model, const StrategySpec& strategy,
                                 const BacktestSettings& settings);

// CSV emitters.
void write_metrics_csv(const std::vector<MetricsSummary>& rows, std::ostream& out);
void write_terminal_csv(const std::vector<PathSummary>& paths, std::ostream& out);
void write_path_csv(const PathRecord& record, std::ostream& out);

}  // namespace lobmm
