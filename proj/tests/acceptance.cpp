// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Runtime limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bcb/bounds.hpp"
#include "bcb/chernoff.hpp"
#include "bcb/classifier.hpp"
#include "bcb/mixture.hpp"
#include "bcb/simulate.hpp"
#include "test_support.hpp"

using namespace bcb;
using bcb::testing::Rng;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r{false, ""};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = r.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %-28s %s; %.3f s (limit %g s)%s\n", pass ? "PASS" : "FAIL", name, r.detail.c_str(), secs,
              limit_seconds, in_time ? "" : " [too slow]");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

int main() {
  criterion("lambda-star", 2e-3, [] {
    double worst = 0.0;
    for (int which : {1, 2}) {
      const ProblemSpec s = reference_case(which);
      worst = std::max(worst, std::abs(chernoff_information(s.theta_star, s.xi_star).lambda_star - 0.5));
    }
    return Outcome{worst <= 1e-9, fmt("max |lambda* - 1/2| = %.3g over both cases", worst)};
  });

  criterion("validity-threshold", 1e-3, [] {
    const ProblemSpec s1 = reference_case(1);
    const ProblemSpec s2 = reference_case(2);
    const auto n1 = chernoff_analysis(s1.theta_star, s1.xi_star).n_min;
    const auto n2 = chernoff_analysis(s2.theta_star, s2.xi_star).n_min;
    return Outcome{n1 == 1590 && n2 == 90, fmt("n_min = %.0f (case 1), %.0f (case 2)", double(n1), double(n2))};
  });

  criterion("exact-vs-bruteforce", 30.0, [] {
    Rng rng(101);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t k = 2 + rep % 2;
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
      const auto p = bcb::testing::random_problem(rng, k, 2 * n);
      const double exact = conditional_error_exact(p.spec, p.data, n);
      const double brute = conditional_error_bruteforce(p.spec, p.data, n);
      worst = std::max(worst, std::abs(exact - brute));
    }
    return Outcome{worst <= 1e-13, fmt("max |exact - brute| = %.3g over 100 specs", worst)};
  });

  criterion("chernoff-dominance", 60.0, [] {
    Rng rng(202);
    int violations = 0;
    double tightest = INFINITY;
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t k = 2 + rep % 2;
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 10);
      const auto p = bcb::testing::random_problem(rng, k, 2 * n);
      const double log_exact = log_conditional_error_exact(p.spec, p.data, n);
      for (int i = 1; i <= 99; ++i) {
        const double margin = log_chernoff_style_upper(p.spec, p.data, n, i / 100.0) - log_exact;
        tightest = std::min(tightest, margin);
        if (margin < 0.0) ++violations;
      }
    }
    return Outcome{violations == 0,
                   fmt("%.0f violations; min ln(upper/exact) = %.3g", double(violations), tightest)};
  });

  criterion("tilted-stationarity", 5.0, [] {
    Rng rng(303);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
      const std::size_t k = 2 + rep % 4;
      const CategoricalParams p = bcb::testing::random_params(rng, k, 0.005);
      const CategoricalParams q = bcb::testing::random_params(rng, k, 0.005);
      const double l = chernoff_information(p, q).lambda_star;
      worst = std::max(worst, std::abs(tilted_log_ratio_mean(p, q, l)));
    }
    return Outcome{worst <= 1e-8, fmt("max |E[Z]| = %.3g over 1000 pairs", worst)};
  });

  criterion("code-length-expansion", 5.0, [] {
    const DirichletPrior jeffreys = DirichletPrior::jeffreys(2);
    const CategoricalParams truth({0.7, 0.3});
    std::vector<double> err;
    for (int s = 0; s < 20; ++s) {
      const Counts data = sample_counts(truth, 100000, RngSeed{static_cast<std::uint64_t>(s + 1)});
      err.push_back(std::abs(approx_code_length(jeffreys, data).total() - exact_code_length(jeffreys, data)));
    }
    const double med = median(err);
    return Outcome{med < 0.02, fmt("median |approx - exact| = %.3g nats at m = 1e5", med)};
  });

  criterion("gap-law", 1.0, [] {
    Rng rng(404);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t k = 2 + rep % 3;
      auto p = bcb::testing::random_problem(rng, k, 1);
      p.spec.alpha = TrainingRatio(1 + static_cast<std::int64_t>(rng() % 4), 1 + static_cast<std::int64_t>(rng() % 3));
      const CurveOptions opts{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)};
      const BoundInputs in = bound_inputs(p.spec, opts);
      const ChernoffAnalysis a = chernoff_analysis(p.spec.theta_star, p.spec.xi_star);
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000000);
      const double closed = 0.5 * std::log(4.0 * n / (a.little_c * a.little_c)) +
                            0.5 * std::abs(in.d1 - in.d2) * std::log(1.0 + 1.0 / in.alpha) +
                            std::log(in.pi.larger() / in.pi.smaller());
      worst = std::max(worst, std::abs(bound_point(n, a, in).gap - closed));
    }
    double ratio = 0.0;
    for (int which : {1, 2}) {
      const ProblemSpec s = reference_case(which);
      const auto pt = bound_point(1000000, chernoff_analysis(s.theta_star, s.xi_star), bound_inputs(s));
      ratio = std::max(ratio, pt.gap / 1e6);
    }
    return Outcome{worst <= 1e-12 && ratio < 2e-5,
                   fmt("max |gap - closed form| = %.3g; max gap(1e6)/1e6 = %.3g", worst, ratio)};
  });

  criterion("finite-n-sandwich", 120.0, [] {
    const ProblemSpec s = reference_case(2);
    const SimReport r = simulate_conditional_error(s, 30, 200, RngSeed{2024});
    const ChernoffAnalysis a = chernoff_analysis(s.theta_star, s.xi_star);
    const BoundInputs in = bound_inputs(s);
    const double lo = lower_bound(30, a, in) - 3.0;
    const double hi = upper_bound(30, a, in) + 3.0;
    const bool ok = r.mean_neg_log_error >= lo && r.mean_neg_log_error <= hi;
    return Outcome{ok, fmt("mean -ln P(e|D) = %.4g in [%.4g, ", r.mean_neg_log_error, lo) + fmt("%.4g] nats", hi)};
  });

  criterion("estimator-agreement", 180.0, [] {
    Rng rng(505);
    int disagreements = 0;
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t k = 2 + rep % 2;
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 20);
      const auto p = bcb::testing::random_problem(rng, k, 1);
      const SimReport exact = simulate_conditional_error(p.spec, n, 10000, RngSeed{rng()});
      const SimReport gen = simulate_generative(p.spec, n, 10000, RngSeed{rng()});
      const double tol = 3.0 * std::hypot(exact.ci_half_width, gen.ci_half_width);
      const double diff = std::abs(exact.mean_error - gen.mean_error);
      worst = std::max(worst, tol > 0.0 ? diff / tol : (diff > 0.0 ? INFINITY : 0.0));
      if (diff > tol) ++disagreements;
    }
    return Outcome{disagreements == 0,
                   fmt("%.0f of 10 specs outside tolerance; max |diff| / (3 CI) = %.3g", double(disagreements), worst)};
  });

  std::printf("%s: %d failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
