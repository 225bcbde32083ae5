#pragma once

#include <cstdint>

#include "bcb/model.hpp"

namespace bcb {

struct ChernoffInformation {
  double lambda_star = 0.5;
  double c_info = 0.0;  // nats
};

// Everything the finite-n upper bound needs about the pair (p, q).
struct ChernoffAnalysis {
  double lambda_star = 0.5;
  double c_info = 0.0;
  CategoricalParams tilted{std::vector<double>{0.5, 0.5}};  // geometric mixture at lambda_star
  double sigma_bar = 0.0;    // standard deviation of Z = ln p(A)/q(A), A ~ tilted
  double big_c = 0.0;        // third-moment constant, E|Z|^3 <= big_c sigma_bar^2
  double big_c_prime = 2.0;  // max{2, 2 (0.56 big_c)^(3/2) exp(-sqrt(2 pi) big_c)}
  double little_c = 0.0;     // exp(-1.12 sqrt(2 pi) big_c) / (30 sigma_bar l (1 - l))
  std::int64_t n_min = 1;    // least n with sqrt(n) sigma_bar l (1 - l) >= big_c_prime
  // True for K = 2, where big_c has the standard binary closed form. For
  // K > 2 big_c = E|Z - EZ|^3 / sigma_bar^2 is an implementation choice.
  bool canonical = true;
};

inline constexpr double kLambdaEdge = 1e-9;
inline constexpr double kLambdaTolerance = 1e-12;

// ln sum_a p_a^l q_a^(1-l).
double log_chernoff_sum(const CategoricalParams& p, const CategoricalParams& q, double lambda);

// sup over l in (0, 1) of -log_chernoff_sum, and its maximizer. For p == q
// the objective is identically zero and lambda_star = 1/2 is reported.
ChernoffInformation chernoff_information(const CategoricalParams& p, const CategoricalParams& q);

CategoricalParams tilted_distribution(const CategoricalParams& p, const CategoricalParams& q,
                                      double lambda);

// Mean of Z = ln p(A)/q(A) under the tilted distribution at lambda; this
// is minus the derivative of the Chernoff objective.
double tilted_log_ratio_mean(const CategoricalParams& p, const CategoricalParams& q, double lambda);

// Throws SpecError("degenerate: zero Chernoff variance") when p == q.
ChernoffAnalysis chernoff_analysis(const CategoricalParams& p, const CategoricalParams& q);

// Least n >= 1 with sqrt(n) * scale >= threshold.
std::int64_t least_valid_length(double scale, double threshold);

}  // namespace bcb
