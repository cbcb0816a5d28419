#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lobmm/backtester.hpp"
#include "lobmm/hjb_solver.hpp"

namespace lobmm {

enum class SweepAxis { volatility, stamp_duty, drift, solver_sigma_mismatch };

std::string axis_name(SweepAxis axis);
/// Throws ConfigError on an unknown name.
SweepAxis parse_axis(const std::string& name);

/// Default value grids per axis.
std::vector<double> default_values(SweepAxis axis);
std::vector<double> default_stamp_sigmas();

struct SweepSpec {
  SweepAxis axis = SweepAxis::volatility;
  std::vector<double> values;
  std::vector<double> sigmas;  // second axis of the stamp-duty grid; empty = model sigma
  double base_sigma = 0.005;   // policy sigma for the mismatch sweep
};

/// Throws ConfigError when a sweep breaks its invariants.
void validate_sweep(const SweepSpec& spec);

struct SweepRow {
  std::string axis;
  double value = 0.0;
  double sigma = 0.0;
  MetricsSummary metrics;
  SampleMoments profit;
  SampleMoments volume;
  SampleMoments market_volume;
  SampleMoments mean_abs_y;
  SampleMoments tax;
  std::vector<double> abs_y_mean;  // per step
  std::vector<double> abs_y_std;
  // Relative changes against the base-sigma row (mismatch sweep only).
  std::optional<double> pct_mean;
  std::optional<double> pct_std;
  std::optional<double> pct_ir;
};

/// t = 0 actions at p0 over (spread state, inventory) for one drift value.
struct PolicySlice {
  double mu = 0.0;
  StateGrid grid;
  std::vector<Action> actions;  // [state * n_y + yk]

  const Action& at(int state, int yk) const { return actions[static_cast<std::size_t>(state * grid.n_y + yk)]; }
};

struct SweepResult {
  SweepAxis axis = SweepAxis::volatility;
  std::vector<SweepRow> rows;
  std::vector<PolicySlice> slices;
};

SweepRow make_row(SweepAxis axis, double value, double sigma, const MonteCarloResult& mc);
PolicySlice policy_slice(const Solution& solution, double mu);

SweepResult sweep_volatility(const MarketModel& base, const std::vector<double>& sigmas,
                             const SchemeParams& scheme, const BacktestSettings& bt);
SweepResult sweep_sensitivity(const MarketModel& base, double base_sigma, const std::vector<double>& sigmas,
                              const SchemeParams& scheme, const BacktestSettings& bt);
SweepResult sweep_stamp_duty(const MarketModel& base, const std::vector<double>& rhos,
                             const std::vector<double>& sigmas, const SchemeParams& scheme,
                             const BacktestSettings& bt);
SweepResult sweep_drift(const MarketModel& base, const std::vector<double>& mus, const SchemeParams& scheme,
                        const BacktestSettings& bt);

SweepResult run_sweep(const MarketModel& base, const SweepSpec& spec, const SchemeParams& scheme,
                      const BacktestSettings& bt);

/// axis,value,sigma,metric,mean,std
void write_sweep_csv(const SweepResult& result, std::ostream& out);
/// mu,spread_state,y,action_code
void write_policy_slices_csv(const std::vector<PolicySlice>& slices, std::ostream& out);
/// axis,value,sigma,t,mean_abs_y,std_abs_y
void write_inventory_curves_csv(const SweepResult& result, double step, std::ostream& out);

}  // namespace lobmm
