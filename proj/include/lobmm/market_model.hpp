#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lobmm {

using Json = nlohmann::json;

enum class Side : std::uint8_t { bid = 0, ask = 1 };

// Quote level relative to the touch. For bids: Bb-, Bb, Bb+; for asks: Ba-, Ba, Ba+.
// `minus` is one tick below the touch price and `plus` one tick above, on both sides.
enum class Level : std::uint8_t { minus = 0, best = 1, plus = 2 };

inline constexpr std::array<Level, 3> kLevels{Level::minus, Level::best, Level::plus};

struct QuoteLevel {
  Side side = Side::bid;
  Level level = Level::best;

  friend bool operator==(const QuoteLevel&, const QuoteLevel&) = default;
};

/// Signed tick offset of a level from the touch: -1, 0, +1.
constexpr int tick_offset(Level level) { return static_cast<int>(level) - 1; }

/// Level seen from the other side of the book (Bb- <-> Ba+, Bb <-> Ba, Bb+ <-> Ba-).
constexpr Level mirror(Level level) { return static_cast<Level>(2 - static_cast<int>(level)); }

/// "Bb-", "Bb", "Bb+", "Ba-", "Ba", "Ba+".
std::string level_name(Side side, Level level);
QuoteLevel parse_level_name(std::string_view name);

struct FeeSchedule {
  double tick = 0.01;             // delta, Yuan
  double commission_rate = 0.0;   // epsilon
  double stamp_rate = 0.0;        // rho, sell side only
};

struct MidQuoteModel {
  double p0 = 14.0;    // Yuan
  double drift = 0.0;  // Yuan / s
  double vol = 0.005;  // Yuan / sqrt(s)
};

/// Spread chain on states 1..m (stored 0-based); state i means spread (i+1)*tick.
struct SpreadModel {
  int n_states = 1;
  double tick = 0.01;
  double jump_rate = 0.0;           // lambda, jumps per second
  std::vector<double> transition;   // row-major m x m

  double rho(int from, int to) const { return transition[static_cast<std::size_t>(from * n_states + to)]; }
  double spread(int state) const { return (state + 1) * tick; }
};

/// Dense intensity tables, 3 levels x m states per side.
struct FillModel {
  int n_states = 1;
  std::vector<double> bid;  // [level * m + state]
  std::vector<double> ask;

  double intensity(Side side, Level level, int state) const {
    const auto k = static_cast<std::size_t>(static_cast<int>(level) * n_states + state);
    return side == Side::bid ? bid[k] : ask[k];
  }
  double& intensity(Side side, Level level, int state) {
    const auto k = static_cast<std::size_t>(static_cast<int>(level) * n_states + state);
    return side == Side::bid ? bid[k] : ask[k];
  }
};

/// Sizes in shares.
struct OrderBounds {
  int max_limit = 100;
  int max_market = 100;
  int lot = 100;
  int y_min = -500;
  int y_max = 500;
};

struct MarketModel {
  FeeSchedule fees;
  MidQuoteModel mid;
  SpreadModel spread;
  FillModel fills;
  OrderBounds bounds;
};

// Pricing and cash functions. p is the mid-quote, s the spread, both in Yuan.

/// Fee-adjusted price paid per share by a filled limit buy at `level`.
double bid_price(Level level, double p, double s, const FeeSchedule& fees);
/// Fee-adjusted price received per share by a filled limit sell at `level`.
double ask_price(Level level, double p, double s, const FeeSchedule& fees);
double quote_price(Side side, Level level, double p, double s, const FeeSchedule& fees);
/// Raw (fee-free) quote price.
double raw_quote_price(Side side, Level level, double p, double s, double tick);

/// Cash paid for a market order of signed size e (buy e > 0, sell e < 0).
double market_cash(double e, double p, double s, const FeeSchedule& fees);
/// Cash after immediately unwinding inventory y: x - c(-y, p, s).
double liquidation_value(double x, double y, double p, double s, const FeeSchedule& fees);
/// Stamp duty charged on a sale of `shares` at raw price `price`.
inline double stamp_tax(double shares, double price, const FeeSchedule& fees) {
  return fees.stamp_rate * shares * price;
}

/// Distance of a quote from the mid, in ticks (positive = behind the mid).
double quote_distance_ticks(Side side, Level level, int state);

/// A * exp(-k * distance) on both sides; monotone in level whenever k > 0.
FillModel parametric_fills(int n_states, double bid_scale, double bid_decay, double ask_scale,
                           double ask_decay);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_model(const MarketModel& model);

/// Rescales every non-zero transition row to sum to one. Returns one warning per row
/// that was off by more than 1e-6.
std::vector<std::string> normalize_transitions(SpreadModel& spread);

/// The model with bid and ask exchanged and the drift negated.
MarketModel mirrored(const MarketModel& model);

Json to_json(const MarketModel& model);
/// Throws ConfigError on missing or ill-typed fields. Transition rows are renormalized;
/// resulting warnings are appended to `warnings` when non-null.
MarketModel model_from_json(const Json& doc, std::vector<std::string>* warnings = nullptr);

/// SHA-256 (hex) of the canonical JSON serialization.
std::string model_fingerprint(const MarketModel& model);

}  // namespace lobmm
