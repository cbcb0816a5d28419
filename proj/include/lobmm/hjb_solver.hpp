#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lobmm/market_model.hpp"
#include "lobmm/numerics.hpp"

namespace lobmm {

struct SchemeParams {
  double horizon = 300.0;         // T, seconds
  double step = 0.3;              // h, seconds
  double generator_window = 4.0;  // kappa, expectation window is kappa * h
  int quad_nodes = 7;
  std::optional<double> p_halfwidth;  // default |mu| T + 6 sigma sqrt(T), rounded up to p_step
  std::optional<double> p_step;       // default: one tick
  double risk_aversion = 0.5;         // eta, 1/Yuan
  double gamma = 0.0;                 // running inventory penalty; only 0 is supported
  double cash_scale = 1.0;            // utility is -exp(-eta * x / cash_scale)
  std::uint64_t max_bytes = std::uint64_t{3} << 30;

  double effective_eta() const { return risk_aversion / cash_scale; }
};

/// Throws ConfigError when a scheme invariant fails.
void validate_scheme(const SchemeParams& params);

Json to_json(const SchemeParams& params);
SchemeParams scheme_from_json(const Json& doc, const SchemeParams& defaults = {});

/// Time x spread x inventory x price lattice. Prices are p0 + k * p_step for
/// k in [-p_half, p_half], p_step an integer number of ticks.
struct StateGrid {
  int n_steps = 0;     // n = T / h
  double step = 0.0;   // h
  int n_states = 0;    // m
  int y_min = 0;
  int lot = 1;
  int n_y = 0;
  double p0 = 0.0;
  double tick = 0.01;
  int p_step_ticks = 1;
  int p_half = 0;
  int n_p = 0;

  double p_step() const { return p_step_ticks * tick; }
  double price(int pj) const { return p0 + (pj - p_half) * p_step(); }
  int inventory(int yk) const { return y_min + yk * lot; }
  double time(int t) const { return t * step; }
  std::size_t slice_size() const {
    return static_cast<std::size_t>(n_states) * static_cast<std::size_t>(n_y) * static_cast<std::size_t>(n_p);
  }
  std::size_t node(int i, int yk, int pj) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n_y) + static_cast<std::size_t>(yk)) *
               static_cast<std::size_t>(n_p) + static_cast<std::size_t>(pj);
  }
  std::size_t index(int t, int i, int yk, int pj) const {
    return static_cast<std::size_t>(t) * slice_size() + node(i, yk, pj);
  }
  /// Returns -1 when y is off the lattice.
  int inventory_index(int y) const;
  /// Nearest price node, ties broken toward p0, clamped to the grid.
  int nearest_price_index(double p) const;

  Json to_json() const;
};

StateGrid make_grid(const MarketModel& model, const SchemeParams& params);
StateGrid grid_from_json(const Json& doc);

/// psi(t, i, y, p) with v_i(t, x, y, p) = -exp(-eta x + psi).
struct LogValueTensor {
  StateGrid grid;
  std::vector<double> data;

  double at(int t, int i, int yk, int pj) const { return data[grid.index(t, i, yk, pj)]; }
  std::span<const double> slice(int t) const {
    return {data.data() + static_cast<std::size_t>(t) * grid.slice_size(), grid.slice_size()};
  }
};

enum class ActionKind : std::uint8_t { make = 0, take = 1 };

/// Limit quotes (make) or an immediate market order (take). Sizes in shares.
struct Action {
  ActionKind kind = ActionKind::make;
  Level bid_level = Level::minus;
  Level ask_level = Level::plus;
  std::int32_t bid_size = 0;
  std::int32_t ask_size = 0;
  std::int32_t impulse = 0;  // signed, take only

  static Action make(Level bid, Level ask, int bid_size, int ask_size) {
    return {ActionKind::make, bid, ask, bid_size, ask_size, 0};
  }
  static Action take(int e) { return {ActionKind::take, Level::minus, Level::plus, 0, 0, e}; }

  friend bool operator==(const Action&, const Action&) = default;
};

/// Bid/ask exchange: quotes swap sides with mirrored levels, impulses change sign.
Action mirror_action(const Action& a);

/// "make:Bb:Ba:100:100" or "take:-100".
std::string action_label(const Action& a);

struct PolicyTensor {
  StateGrid grid;
  std::vector<Action> data;

  const Action& at(int t, int i, int yk, int pj) const { return data[grid.index(t, i, yk, pj)]; }
};

struct BestResponse {
  double value = 0.0;
  Level level = Level::best;
  int size = 0;
};

struct ImpulseChoice {
  double value = 0.0;  // +inf when no non-zero order is admissible
  int size = 0;
};

struct StepResult {
  double value = 0.0;
  Action action;
  double continuation = 0.0;  // log-space combination of the four expectation terms
  double impulse = 0.0;
};

/// One backward step of the scheme at a single node. `next` is the psi slice at t + h.
class SchemeOperators {
 public:
  SchemeOperators(const MarketModel& model, const SchemeParams& params, const StateGrid& grid);

  const StateGrid& grid() const { return grid_; }
  double eta() const { return eta_; }
  const GaussHermiteRule& rule() const { return rule_; }

  /// eta * c(-y, p, i delta).
  double terminal(int i, int yk, int pj) const;
  /// log E[exp(psi_i(t+h, y, P))], P ~ N(p + mu kh, sigma^2 kh); linear interpolation in p,
  /// linear extrapolation beyond the grid edges.
  double price_expectation(std::span<const double> next, int i, int yk, int pj) const;
  /// One-jump mixture over the window kh.
  double spread_expectation(std::span<const double> next, int i, int yk, int pj) const;
  /// Minimum over admissible (level, size) of the Bernoulli-fill log-expectation.
  BestResponse fill_best_response(Side side, std::span<const double> next, int i, int yk, int pj) const;
  /// Value of posting at (level, size) on one side; size must be admissible.
  double fill_value(Side side, Level level, int size, std::span<const double> next, int i, int yk, int pj) const;
  /// Minimum over non-zero admissible e of eta c(e, p, i delta) + psi_i(t+h, y+e, p).
  ImpulseChoice impulse_value(std::span<const double> next, int i, int yk, int pj) const;
  StepResult step(std::span<const double> next, int i, int yk, int pj) const;
  /// psi(t) obtained by committing to `action` at the node.
  double evaluate(const Action& action, std::span<const double> next, int i, int yk, int pj) const;

  /// Largest admissible limit size on a side at inventory index yk.
  int max_limit_size(Side side, int yk) const;

 private:
  double interpolate(std::span<const double> next, int i, int yk, double pos) const;

  MarketModel model_;
  SchemeParams params_;
  StateGrid grid_;
  GaussHermiteRule rule_;
  double eta_ = 0.0;
  double window_ = 0.0;
  std::vector<double> quad_offsets_;  // in price-grid units
  std::vector<double> log_weights_;
  std::vector<double> jump_prob_;     // per spread state
  std::vector<double> fill_prob_;     // [side][level][state]
};

struct Solution {
  LogValueTensor psi;
  PolicyTensor policy;
  SchemeParams params;
  std::string model_fingerprint;
};

/// Terminal condition followed by the backward recursion k = n-1..0. Nodes of one time
/// step are processed in parallel; the result does not depend on `threads`.
Solution solve_backward(const MarketModel& model, const SchemeParams& params, unsigned threads = 0);

/// Memory needed for the full tensors, in bytes.
std::uint64_t solution_bytes(const StateGrid& grid);

}  // namespace lobmm
