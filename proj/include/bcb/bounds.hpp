#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcb/chernoff.hpp"
#include "bcb/classifier.hpp"

namespace bcb {

// Asymptotic bounds on -ln P(error | D) at blocklength n; o(1) terms dropped.
struct BoundPoint {
  std::int64_t n = 0;
  double lower = 0.0;  // nats
  double upper = 0.0;  // nats
  double gap = 0.0;    // upper - lower, from the non-leading terms
  bool valid = false;  // n >= n_min, where the upper bound is certified
};

// The additive pieces of one bound. The leading n C term is shared by both
// bounds, so the gap is formed from the remaining terms only.
struct BoundTerms {
  double leading = 0.0;     // n C(P_theta*, P_xi*)
  double blocklength = 0.0; // (1/2) ln(4n / c^2), upper bound only
  double dimension = 0.0;   // (d/2) ln(1 + 1/alpha), d = min or max of d1, d2
  double prior = 0.0;       // -ln max{pi} (lower) or -ln min{pi} (upper)

  double tail() const { return blocklength + dimension + prior; }
  double total() const { return leading + tail(); }
};

struct BoundInputs {
  int d1 = 1;
  int d2 = 1;
  double alpha = 2.0;
  HypothesisPrior pi;
};

BoundTerms lower_bound_terms(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in);
BoundTerms upper_bound_terms(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in);

// n C + (min{d1,d2}/2) ln(1 + 1/alpha) - ln max{pi1, pi2}
double lower_bound(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in);
// n C + (1/2) ln(4n/c^2) + (max{d1,d2}/2) ln(1 + 1/alpha) - ln min{pi1, pi2}
double upper_bound(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in);

BoundPoint bound_point(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in);

struct CurveOptions {
  // Parameter dimensions default to K - 1 for both hypotheses.
  std::optional<int> d1;
  std::optional<int> d2;
};

BoundInputs bound_inputs(const ProblemSpec& spec, const CurveOptions& options = {});

// One point per n in {from, from + step, ..., <= to}.
std::vector<BoundPoint> curve(const ProblemSpec& spec, std::int64_t from, std::int64_t to, std::int64_t step,
                              const CurveOptions& options = {});

// Bernoulli study cases with alpha = 2, pi1 = pi2 = 1/2 and Jeffreys priors:
// case 1 is theta* = 0.55, xi* = 0.45; case 2 is theta* = 0.3, xi* = 0.7.
// Parameters are stored as (P(0), P(1)).
ProblemSpec reference_case(int which);

// Plotting range of a reference case: [n_min, 3000].
struct CaseRange {
  std::int64_t from;
  std::int64_t to;
};
CaseRange reference_range(int which);

}  // namespace bcb
