#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lobmm/market_model.hpp"

namespace lobmm {

struct Snapshot {
  double time = 0.0;  // seconds from session open
  double best_bid = 0.0;
  double best_ask = 0.0;

  double mid() const { return 0.5 * (best_bid + best_ask); }
  double spread() const { return best_ask - best_bid; }
};

/// Rows strictly increasing in time; `horizon` is the observed window length T_p.
struct SnapshotSeries {
  std::vector<Snapshot> rows;
  double horizon = 0.0;
};

enum class QuoteEvent { quote_on, quote_off, fill };

struct QuoteLogRow {
  double time = 0.0;
  Side side = Side::bid;
  Level level = Level::best;
  int spread_state = 1;  // 1-based
  QuoteEvent event = QuoteEvent::quote_on;
};

/// Own-quote history. A quote_on for a side that is already quoting replaces its
/// level and spread state from that instant; a spread change while quoting is logged
/// that way. Fills do not take the quote off the book.
struct OwnQuoteLog {
  std::vector<QuoteLogRow> rows;
};

SnapshotSeries read_snapshot_csv(const std::filesystem::path& path);
SnapshotSeries parse_snapshot_csv(std::istream& in);
void write_snapshot_csv(const SnapshotSeries& series, std::ostream& out);

OwnQuoteLog read_quote_log_csv(const std::filesystem::path& path);
OwnQuoteLog parse_quote_log_csv(std::istream& in);
void write_quote_log_csv(const OwnQuoteLog& log, std::ostream& out);

struct SpreadJumps {
  std::vector<double> times;  // theta_n, theta_0 = start of window
  std::vector<int> states;    // spread in ticks at theta_n (1-based state index)
  int n_jumps = 0;            // N_T
};

/// Spreads wider than `max_spread_ticks` are clipped to that state with a warning.
SpreadJumps extract_spread_jumps(const SnapshotSeries& series, double tick, int max_spread_ticks,
                                 std::vector<std::string>* warnings = nullptr);

struct TransitionEstimate {
  int n_states = 0;
  std::vector<double> rho;        // row-major
  std::vector<int> departures;    // per origin state
  std::vector<int> counts;        // row-major transition counts
};

/// Empirical transition frequencies of the embedded jump chain (states 1-based).
/// Rows with no departures are filled uniformly over j != i with a warning.
TransitionEstimate estimate_transition_matrix(const std::vector<int>& states, int n_states,
                                              std::vector<std::string>* warnings = nullptr);

double estimate_jump_intensity(int n_jumps, double horizon);

/// (P_T - P_0) / T_p.
double estimate_drift(const SnapshotSeries& series);

/// Last-observation-carried-forward mid series on the grid start + k*dt.
SnapshotSeries resample(const SnapshotSeries& series, double dt);

/// Square root of sum (dP - mu_hat dt)^2 / T_p. Requires a uniform time step.
double estimate_volatility(const SnapshotSeries& series);

/// Fill counts and quoted time per (level, spread state), one table per side.
struct FillTally {
  int n_states = 0;
  std::array<std::vector<int>, 2> fills;         // [side][level * m + state]
  std::array<std::vector<double>, 2> occupancy;  // seconds

  int fill_count(Side side, Level level, int state) const;
  double occupied(Side side, Level level, int state) const;
};

/// Same-timestamp events are applied fill first, then quote_off, then quote_on.
FillTally tally_fills(const OwnQuoteLog& log, int n_states);

struct FillEstimate {
  double intensity = 0.0;
  int fills = 0;
  double occupancy = 0.0;
  double std_error = 0.0;
};

/// N / occupancy for one cell (state is 1-based). Zero occupancy is a DataError.
FillEstimate estimate_fill_intensity(const OwnQuoteLog& log, Side side, Level level, int state,
                                     int n_states);
FillEstimate estimate_fill_intensity(const FillTally& tally, Side side, Level level, int state);

struct ParametricFit {
  double scale = 0.0;  // A
  double decay = 0.0;  // k
  int cells = 0;
};

/// Least squares of log(lambda) on the quote distance over cells with fills.
std::optional<ParametricFit> fit_parametric_intensity(const FillTally& tally, Side side);

struct CalibrationSettings {
  double dt = 3.0;            // resample interval for mu/sigma
  int max_spread_ticks = 3;   // m
};

struct CalibrationReport {
  MarketModel model;
  std::vector<std::string> warnings;

  int n_observations = 0;     // resampled mid observations R
  int n_jumps = 0;
  std::vector<int> departures;
  std::vector<int> transition_counts;
  FillTally tally;
  std::vector<std::string> fallback_cells;

  double se_jump_rate = 0.0;
  double se_drift = 0.0;
  double se_vol = 0.0;
  std::vector<double> se_transition;
  std::vector<double> se_bid;  // [level * m + state]
  std::vector<double> se_ask;

  Json to_json() const;
};

/// Runs every estimator. Fees, bounds, and (without a log) fill intensities come from
/// `base`; cells that cannot be estimated or break level monotonicity are replaced by
/// the parametric fallback.
CalibrationReport calibrate(const SnapshotSeries& series, const OwnQuoteLog* log,
                            const CalibrationSettings& settings, const MarketModel& base);

}  // namespace lobmm
