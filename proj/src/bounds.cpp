#include "bcb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcb/error.hpp"
#include "bcb/parallel.hpp"

namespace bcb {
namespace {

void check_inputs(std::int64_t n, const BoundInputs& in) {
  if (n < 1) throw SpecError("blocklength n must be >= 1");
  if (in.d1 < 1 || in.d2 < 1) throw SpecError("parameter dimensions d1, d2 must be >= 1");
  if (!(in.alpha > 0.0)) throw SpecError("training ratio alpha must be > 0");
  in.pi.validate();
}

}  // namespace

BoundTerms lower_bound_terms(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in) {
  check_inputs(n, in);
  BoundTerms t;
  t.leading = static_cast<double>(n) * analysis.c_info;
  t.dimension = 0.5 * std::min(in.d1, in.d2) * std::log1p(1.0 / in.alpha);
  t.prior = -std::log(in.pi.larger());
  return t;
}

BoundTerms upper_bound_terms(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in) {
  check_inputs(n, in);
  BoundTerms t;
  t.leading = static_cast<double>(n) * analysis.c_info;
  t.blocklength = 0.5 * std::log(4.0 * static_cast<double>(n) / (analysis.little_c * analysis.little_c));
  t.dimension = 0.5 * std::max(in.d1, in.d2) * std::log1p(1.0 / in.alpha);
  t.prior = -std::log(in.pi.smaller());
  return t;
}

double lower_bound(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in) {
  return lower_bound_terms(n, analysis, in).total();
}

double upper_bound(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in) {
  return upper_bound_terms(n, analysis, in).total();
}

BoundPoint bound_point(std::int64_t n, const ChernoffAnalysis& analysis, const BoundInputs& in) {
  const BoundTerms lo = lower_bound_terms(n, analysis, in);
  const BoundTerms hi = upper_bound_terms(n, analysis, in);
  return {n, lo.total(), hi.total(), hi.tail() - lo.tail(), n >= analysis.n_min};
}

BoundInputs bound_inputs(const ProblemSpec& spec, const CurveOptions& options) {
  spec.validate();
  BoundInputs in;
  in.d1 = options.d1.value_or(spec.theta_star.dimension());
  in.d2 = options.d2.value_or(spec.xi_star.dimension());
  in.alpha = spec.alpha.value();
  in.pi = spec.pi;
  return in;
}

std::vector<BoundPoint> curve(const ProblemSpec& spec, std::int64_t from, std::int64_t to, std::int64_t step,
                              const CurveOptions& options) {
  if (step < 1) throw SpecError("curve step must be >= 1");
  if (from < 1 || from > to) {
    throw SpecError("empty curve range " + std::to_string(from) + ":" + std::to_string(to));
  }
  const BoundInputs in = bound_inputs(spec, options);
  const ChernoffAnalysis analysis = chernoff_analysis(spec.theta_star, spec.xi_star);
  std::vector<BoundPoint> points(static_cast<std::size_t>((to - from) / step + 1));
  parallel_for(points.size(), [&](std::size_t i) {
    points[i] = bound_point(from + static_cast<std::int64_t>(i) * step, analysis, in);
  });
  return points;
}

ProblemSpec reference_case(int which) {
  double theta;
  double xi;
  switch (which) {
    case 1:
      theta = 0.55;
      xi = 0.45;
      break;
    case 2:
      theta = 0.3;
      xi = 0.7;
      break;
    default:
      throw SpecError("unknown reference case " + std::to_string(which) + " (expected 1 or 2)");
  }
  return ProblemSpec{CategoricalParams({1.0 - theta, theta}),
                     CategoricalParams({1.0 - xi, xi}),
                     DirichletPrior::jeffreys(2),
                     DirichletPrior::jeffreys(2),
                     HypothesisPrior{0.5, 0.5},
                     TrainingRatio(2)};
}

CaseRange reference_range(int which) {
  const ProblemSpec spec = reference_case(which);
  return {chernoff_analysis(spec.theta_star, spec.xi_star).n_min, 3000};
}

}  // namespace bcb
