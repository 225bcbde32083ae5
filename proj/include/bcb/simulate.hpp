#pragma once

#include <cstdint>
#include <string>

#include "bcb/classifier.hpp"
#include "bcb/model.hpp"

namespace bcb {

enum class Estimator { conditional_exact, generative };

// Where the generative estimator draws the test sequence from, given H = i.
enum class TestDraw {
  predictive,      // P(x | y_i, H_i): the measure the conditional error is defined under
  true_parameter,  // P(x | theta*) or P(x | xi*): the frequentist error, not the same quantity
};

struct SimReport {
  std::int64_t n = 0;
  std::int64_t trials = 0;
  double mean_error = 0.0;
  // Conditional estimator: mean of -ln P(e | D) over trials.
  // Generative estimator: -ln(mean_error).
  double mean_neg_log_error = 0.0;
  double ci_half_width = 0.0;  // 95% normal-approximation CI on mean_error
  RngSeed seed;
  Estimator estimator = Estimator::conditional_exact;
  // Set when the exact estimator was over budget and the generative one ran.
  bool fallback = false;
  std::string warning;
};

inline constexpr std::int64_t kMinTrials = 100;

// Training data for one trial: y1 ~ theta*^N, y2 ~ xi*^N with N = alpha n.
TrainingData sample_training(const ProblemSpec& spec, std::int64_t n, RngSeed seed);

// Mean over data draws of the exact conditional error of the optimal rule.
// Falls back to simulate_generative (flagged) when a trial would exceed the
// type-class budget.
SimReport simulate_conditional_error(const ProblemSpec& spec, std::int64_t n, std::int64_t trials,
                                     RngSeed seed);

// Draws (D, H, x) and counts decision errors. With TestDraw::predictive the
// test sequence comes from the posterior predictive (a Polya urn), so the
// mean is an unbiased estimate of the data-averaged conditional error.
SimReport simulate_generative(const ProblemSpec& spec, std::int64_t n, std::int64_t trials, RngSeed seed,
                              TestDraw draw = TestDraw::predictive);

}  // namespace bcb
