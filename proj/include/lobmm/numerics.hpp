#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lobmm {

/// log(sum_k exp(x_k)). Returns -inf for an empty range or when every term is -inf.
double log_sum_exp(std::span<const double> x);

/// log(sum_k w_k exp(x_k)) for non-negative weights; zero-weight terms are skipped.
double log_sum_exp(std::span<const double> x, std::span<const double> w);

/// log(a*exp(x) + b*exp(y)) with a, b >= 0.
double log_mix2(double a, double x, double b, double y);

/// Gauss-Hermite rule for the standard normal: E[f(Z)] ~= sum_k weight[k] f(node[k]).
/// Nodes are ascending and weights sum to one.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction of the probabilists' Hermite rule with n nodes.
GaussHermiteRule gauss_hermite(std::size_t n);

/// Stationary distribution of a row-stochastic matrix (row-major, n x n).
/// Solves pi (P - I) = 0 with sum(pi) = 1, so periodic chains are handled.
std::vector<double> stationary_distribution(std::span<const double> transition, std::size_t n);

/// Moments of a sample in the layout used by the backtest reports.
struct SampleMoments {
  std::size_t n = 0;
  double mean = 0.0;
  double std = 0.0;       // n-1 denominator
  double skew = 0.0;      // m3 / m2^1.5 (population central moments)
  double kurt = 0.0;      // m4 / m2^2, non-excess
  bool degenerate = true; // zero variance or n < 2
};

/// Two-pass moments; the pairwise sum keeps results independent of chunking.
SampleMoments sample_moments(std::span<const double> x);

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> x);

}  // namespace lobmm
