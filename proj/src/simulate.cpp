#include "bcb/simulate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bcb/error.hpp"
#include "bcb/math.hpp"
#include "bcb/parallel.hpp"
#include "bcb/rng.hpp"

namespace bcb {
namespace {

// Substream layout per trial i of a master seed s:
//   derive_seed(derive_seed(s, i), j), j = 0, 1 training draws of the exact
//   estimator; j = 2, 3 training draws, j = 4 hypothesis and test draw of the
//   generative estimator.
RngSeed trial_stream(RngSeed master, std::int64_t trial, std::uint64_t slot) {
  return derive_seed(derive_seed(master, static_cast<std::uint64_t>(trial)), slot);
}

void check_request(const ProblemSpec& spec, std::int64_t n, std::int64_t trials) {
  spec.validate();
  if (n < 1) throw SpecError("test length n must be >= 1");
  if (trials < kMinTrials) {
    throw SpecError("trials must be >= " + std::to_string(kMinTrials) + " for a reported CI");
  }
  spec.alpha.training_length(n);
}

struct Moments {
  double mean;
  double ci_half_width;
};

Moments summarize(const std::vector<double>& values) {
  KahanSum sum;
  for (double v : values) sum.add(v);
  const double count = static_cast<double>(values.size());
  const double mean = sum.value() / count;
  KahanSum sq;
  for (double v : values) sq.add((v - mean) * (v - mean));
  const double sd = values.size() > 1 ? std::sqrt(sq.value() / (count - 1.0)) : 0.0;
  return {mean, 1.959963984540054 * sd / std::sqrt(count)};
}

TrainingData sample_pair(const ProblemSpec& spec, std::int64_t big_n, RngSeed s1, RngSeed s2) {
  return {sample_counts(spec.theta_star, big_n, s1), sample_counts(spec.xi_star, big_n, s2)};
}

// Sequential draws from the Dirichlet-categorical predictive: symbol a has
// weight prior_a + training_a + (draws of a so far).
Counts sample_predictive(const DirichletPrior& prior, const Counts& training, std::int64_t n, Engine& engine) {
  const std::size_t k = training.size();
  std::vector<double> weight(k);
  double total = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    weight[a] = prior.alphas()[a] + static_cast<double>(training[a]);
    total += weight[a];
  }
  std::vector<std::int64_t> drawn(k, 0);
  for (std::int64_t j = 0; j < n; ++j) {
    double u = uniform01(engine) * total;
    std::size_t a = 0;
    while (a + 1 < k && u >= weight[a]) u -= weight[a++];
    ++drawn[a];
    weight[a] += 1.0;
    total += 1.0;
  }
  return Counts(std::move(drawn));
}

}  // namespace

TrainingData sample_training(const ProblemSpec& spec, std::int64_t n, RngSeed seed) {
  spec.validate();
  const std::int64_t big_n = spec.alpha.training_length(n);
  return sample_pair(spec, big_n, derive_seed(seed, 0), derive_seed(seed, 1));
}

SimReport simulate_conditional_error(const ProblemSpec& spec, std::int64_t n, std::int64_t trials,
                                     RngSeed seed) {
  check_request(spec, n, trials);
  if (type_class_count(n, spec.alphabet_size()) > kTypeClassBudget) {
    SimReport report = simulate_generative(spec, n, trials, seed);
    report.fallback = true;
    report.warning = "type-class budget exceeded; generative Monte Carlo estimate reported instead";
    return report;
  }

  const std::int64_t big_n = spec.alpha.training_length(n);
  std::vector<double> errors(static_cast<std::size_t>(trials));
  std::vector<double> neg_logs(static_cast<std::size_t>(trials));
  parallel_for(errors.size(), [&](std::size_t i) {
    const auto t = static_cast<std::int64_t>(i);
    const TrainingData data = sample_pair(spec, big_n, trial_stream(seed, t, 0), trial_stream(seed, t, 1));
    const double log_error = log_conditional_error_exact(spec, data, n);
    errors[i] = std::exp(log_error);
    neg_logs[i] = -log_error;
  });

  const Moments m = summarize(errors);
  SimReport report;
  report.n = n;
  report.trials = trials;
  report.mean_error = m.mean;
  report.ci_half_width = m.ci_half_width;
  report.mean_neg_log_error = summarize(neg_logs).mean;
  report.seed = seed;
  report.estimator = Estimator::conditional_exact;
  return report;
}

SimReport simulate_generative(const ProblemSpec& spec, std::int64_t n, std::int64_t trials, RngSeed seed,
                              TestDraw draw) {
  check_request(spec, n, trials);
  const std::int64_t big_n = spec.alpha.training_length(n);
  std::vector<double> mistakes(static_cast<std::size_t>(trials));
  parallel_for(mistakes.size(), [&](std::size_t i) {
    const auto t = static_cast<std::int64_t>(i);
    const TrainingData data = sample_pair(spec, big_n, trial_stream(seed, t, 2), trial_stream(seed, t, 3));
    Engine engine = make_engine(trial_stream(seed, t, 4));
    const Hypothesis truth = uniform01(engine) < spec.pi.pi1 ? Hypothesis::h1 : Hypothesis::h2;
    const bool h1 = truth == Hypothesis::h1;
    const Counts test = draw == TestDraw::predictive
                            ? sample_predictive(h1 ? spec.mu : spec.nu, h1 ? data.y1 : data.y2, n, engine)
                            : sample_counts(h1 ? spec.theta_star : spec.xi_star, n, RngSeed{engine()});
    mistakes[i] = decide(spec, data, test).hypothesis == truth ? 0.0 : 1.0;
  });

  const Moments m = summarize(mistakes);
  SimReport report;
  report.n = n;
  report.trials = trials;
  report.mean_error = m.mean;
  report.ci_half_width = m.ci_half_width;
  report.mean_neg_log_error = -std::log(m.mean);
  report.seed = seed;
  report.estimator = Estimator::generative;
  return report;
}

}  // namespace bcb
