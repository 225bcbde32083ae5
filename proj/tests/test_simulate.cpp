#include <doctest.h>

#include <cmath>

#include "bcb/bounds.hpp"
#include "bcb/error.hpp"
#include "bcb/simulate.hpp"
#include "test_support.hpp"

using namespace bcb;

namespace {

ProblemSpec symmetric(double delta) {
  return ProblemSpec{CategoricalParams({0.5 - delta, 0.5 + delta}), CategoricalParams({0.5 + delta, 0.5 - delta}),
                     DirichletPrior::jeffreys(2), DirichletPrior::jeffreys(2), HypothesisPrior{}, TrainingRatio(2)};
}

bool agree(const SimReport& a, const SimReport& b) {
  return std::abs(a.mean_error - b.mean_error) <= 3.0 * std::hypot(a.ci_half_width, b.ci_half_width);
}

}  // namespace

TEST_CASE("identical hypotheses give error one half") {
  const ProblemSpec spec{CategoricalParams({0.4, 0.6}), CategoricalParams({0.4, 0.6}), DirichletPrior::jeffreys(2),
                         DirichletPrior::jeffreys(2), HypothesisPrior{}, TrainingRatio(2)};
  const SimReport exact = simulate_conditional_error(spec, 10, 100, RngSeed{1});
  // theta* = xi* does not make y1 = y2, so only the mean is near 1/2.
  CHECK(exact.mean_error <= 0.5 + 1e-12);
  CHECK(exact.mean_error > 0.3);

  // Drawing x from the shared true parameter makes H independent of x.
  const SimReport gen = simulate_generative(spec, 10, 4000, RngSeed{2}, TestDraw::true_parameter);
  CHECK(std::abs(gen.mean_error - 0.5) <= 3.0 * gen.ci_half_width);

  // From the predictive, the rule exploits y1 != y2 and matches the exact mean.
  const SimReport pred = simulate_generative(spec, 10, 4000, RngSeed{2});
  CHECK(std::abs(pred.mean_error - exact.mean_error) <= 3.0 * std::hypot(pred.ci_half_width, exact.ci_half_width));
}

TEST_CASE("identical training data give exactly one half every trial") {
  // With mu = nu and y1 = y2 forced by a degenerate-looking but interior
  // pair, each trial's conditional error is exactly 1/2: check directly.
  const ProblemSpec spec = symmetric(0.2);
  const TrainingData same{Counts({7, 13}), Counts({7, 13})};
  CHECK(conditional_error_exact(spec, same, 10) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("reports are deterministic in the seed") {
  const ProblemSpec spec = reference_case(2);
  const SimReport a = simulate_conditional_error(spec, 12, 150, RngSeed{77});
  const SimReport b = simulate_conditional_error(spec, 12, 150, RngSeed{77});
  CHECK(a.mean_error == b.mean_error);
  CHECK(a.mean_neg_log_error == b.mean_neg_log_error);
  CHECK(a.ci_half_width == b.ci_half_width);
  const SimReport c = simulate_conditional_error(spec, 12, 150, RngSeed{78});
  CHECK(a.mean_error != c.mean_error);

  const SimReport g1 = simulate_generative(spec, 12, 500, RngSeed{5});
  const SimReport g2 = simulate_generative(spec, 12, 500, RngSeed{5});
  CHECK(g1.mean_error == g2.mean_error);
}

TEST_CASE("report invariants and errors") {
  const ProblemSpec spec = reference_case(2);
  const SimReport r = simulate_conditional_error(spec, 8, 100, RngSeed{3});
  CHECK(r.n == 8);
  CHECK(r.trials == 100);
  CHECK(r.mean_error >= 0.0);
  CHECK(r.mean_error <= 1.0);
  CHECK(r.ci_half_width >= 0.0);
  CHECK(r.seed.value == 3);
  CHECK_FALSE(r.fallback);
  CHECK_THROWS_AS(simulate_conditional_error(spec, 8, 99, RngSeed{3}), SpecError);
  ProblemSpec odd = spec;
  odd.alpha = TrainingRatio(1, 2);
  CHECK_THROWS_AS(simulate_generative(odd, 7, 100, RngSeed{3}), SpecError);
}

TEST_CASE("exact estimator sits between the dropped-o(1) bounds at n = 30") {
  const ProblemSpec spec = reference_case(2);
  const SimReport r = simulate_conditional_error(spec, 30, 200, RngSeed{2024});
  const ChernoffAnalysis a = chernoff_analysis(spec.theta_star, spec.xi_star);
  const BoundInputs in = bound_inputs(spec);
  CHECK(r.mean_neg_log_error >= lower_bound(30, a, in) - 3.0);
  CHECK(r.mean_neg_log_error <= upper_bound(30, a, in) + 3.0);
}

TEST_CASE("generative and exact estimators agree") {
  const ProblemSpec spec = reference_case(2);
  const SimReport exact = simulate_conditional_error(spec, 30, 2000, RngSeed{9});
  const SimReport gen = simulate_generative(spec, 30, 10000, RngSeed{9});
  CHECK(agree(exact, gen));
}

TEST_CASE("dominant prior: error is the H1 miss rate") {
  const ProblemSpec base = reference_case(2);
  ProblemSpec spec = base;
  spec.pi = HypothesisPrior{1.0 - 1e-12, 1e-12};
  const SimReport gen = simulate_generative(spec, 10, 2000, RngSeed{4});
  // With pi2 ~ 0 the rule always picks H1, so errors come only from the
  // 1e-12-probability H2 draws.
  CHECK(gen.mean_error <= 3.0 * gen.ci_half_width + 1e-9);
}

TEST_CASE("error falls as the hypotheses separate") {
  const SimReport close = simulate_conditional_error(symmetric(0.05), 30, 500, RngSeed{11});
  const SimReport far = simulate_conditional_error(symmetric(0.2), 30, 500, RngSeed{11});
  CHECK(far.mean_error < close.mean_error);
}

TEST_CASE("test-draw measures differ when training is short") {
  // Both runs share the seed; only the source of x changes.
  const ProblemSpec spec = reference_case(2);
  const SimReport pred = simulate_generative(spec, 10, 20000, RngSeed{8});
  const SimReport truth = simulate_generative(spec, 10, 20000, RngSeed{8}, TestDraw::true_parameter);
  CHECK(pred.mean_error != truth.mean_error);
  CHECK(pred.estimator == Estimator::generative);
}

TEST_CASE("over-budget exact estimate falls back to the generative one") {
  std::vector<double> p(6, 1.0 / 6.0);
  std::vector<double> q{0.1, 0.1, 0.2, 0.2, 0.2, 0.2};
  const ProblemSpec spec{CategoricalParams(p), CategoricalParams(q), DirichletPrior::jeffreys(6),
                         DirichletPrior::jeffreys(6), HypothesisPrior{}, TrainingRatio(1)};
  const SimReport r = simulate_conditional_error(spec, 200, 100, RngSeed{1});
  CHECK(r.fallback);
  CHECK(r.estimator == Estimator::generative);
  CHECK_FALSE(r.warning.empty());
}
