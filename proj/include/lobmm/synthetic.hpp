#pragma once

#include <cstdint>

#include "lobmm/calibration.hpp"
#include "lobmm/market_model.hpp"

namespace lobmm {

struct SyntheticSettings {
  double horizon = 10000.0;        // T_p, seconds
  double snapshot_interval = 1.0;  // regular snapshot cadence; every spread change also gets a row
  double requote_interval = 1.0;   // the quoting agent redraws its levels this often
  std::uint64_t seed = 1;
};

struct SyntheticDay {
  SnapshotSeries snapshots;
  OwnQuoteLog quotes;
  int n_jumps = 0;
  // True occupancy per (side, level, state), for test standard errors.
  FillTally truth;
};

/// Simulates the exogenous model exactly (Brownian mid-quote, spread chain started from
/// its stationary law) together with an agent that keeps one quote per side at a
/// uniformly random level and is filled at the model's intensities.
SyntheticDay simulate_market_data(const MarketModel& model, const SyntheticSettings& settings);

}  // namespace lobmm
