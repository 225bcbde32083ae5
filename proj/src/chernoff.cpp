#include "bcb/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bcb/error.hpp"
#include "bcb/optimize.hpp"

namespace bcb {
namespace {

struct LogPair {
  std::vector<double> lp;
  std::vector<double> lq;
};

LogPair logs_of(const CategoricalParams& p, const CategoricalParams& q) {
  require_same_size(p.size(), q.size(), "chernoff pair");
  LogPair out{std::vector<double>(p.size()), std::vector<double>(p.size())};
  for (std::size_t a = 0; a < p.size(); ++a) {
    out.lp[a] = std::log(p[a]);
    out.lq[a] = std::log(q[a]);
  }
  return out;
}

// Unnormalized log weights l ln p + (1 - l) ln q, with their log-sum.
double tilted_log_weights(const LogPair& logs, double lambda, std::vector<double>& w) {
  w.resize(logs.lp.size());
  double max = -INFINITY;
  for (std::size_t a = 0; a < w.size(); ++a) {
    w[a] = lambda * logs.lp[a] + (1.0 - lambda) * logs.lq[a];
    max = std::max(max, w[a]);
  }
  double sum = 0.0;
  for (double v : w) sum += std::exp(v - max);
  return max + std::log(sum);
}

double log_ratio_mean(const LogPair& logs, double lambda) {
  std::vector<double> w;
  const double norm = tilted_log_weights(logs, lambda, w);
  double mean = 0.0;
  for (std::size_t a = 0; a < w.size(); ++a) mean += std::exp(w[a] - norm) * (logs.lp[a] - logs.lq[a]);
  return mean;
}

}  // namespace

double log_chernoff_sum(const CategoricalParams& p, const CategoricalParams& q, double lambda) {
  std::vector<double> w;
  return tilted_log_weights(logs_of(p, q), lambda, w);
}

double tilted_log_ratio_mean(const CategoricalParams& p, const CategoricalParams& q, double lambda) {
  return log_ratio_mean(logs_of(p, q), lambda);
}

ChernoffInformation chernoff_information(const CategoricalParams& p, const CategoricalParams& q) {
  const LogPair logs = logs_of(p, q);
  if (p == q) return {0.5, 0.0};

  std::vector<double> w;
  auto objective = [&](double l) { return -tilted_log_weights(logs, l, w); };
  auto slope = [&](double l) { return log_ratio_mean(logs, l); };

  constexpr double lo = kLambdaEdge;
  constexpr double hi = 1.0 - kLambdaEdge;
  // The objective is flat at its top, so comparisons stop discriminating
  // long before kLambdaTolerance; the bracket is then refined on the
  // stationarity condition E[Z] = 0, which stays well conditioned.
  const Bracket coarse = golden_section_maximize(objective, lo, hi, kLambdaTolerance);
  double a = std::max(lo, coarse.lo - 1e-6);
  double b = std::min(hi, coarse.hi + 1e-6);
  if (slope(a) > 0.0 || slope(b) < 0.0) {
    a = lo;
    b = hi;
  }
  double lambda;
  if (slope(a) > 0.0) {
    lambda = a;
  } else if (slope(b) < 0.0) {
    lambda = b;
  } else {
    lambda = bisect_increasing(slope, a, b, kLambdaTolerance);
  }
  return {lambda, std::max(0.0, objective(lambda))};
}

CategoricalParams tilted_distribution(const CategoricalParams& p, const CategoricalParams& q,
                                      double lambda) {
  std::vector<double> w;
  const double norm = tilted_log_weights(logs_of(p, q), lambda, w);
  for (double& v : w) v = std::exp(v - norm);
  return CategoricalParams(std::move(w));
}

std::int64_t least_valid_length(double scale, double threshold) {
  const double ratio = threshold / scale;
  auto n = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(ratio * ratio)));
  while (n > 1 && std::sqrt(static_cast<double>(n - 1)) * scale >= threshold) --n;
  while (std::sqrt(static_cast<double>(n)) * scale < threshold) ++n;
  return n;
}

ChernoffAnalysis chernoff_analysis(const CategoricalParams& p, const CategoricalParams& q) {
  require_same_size(p.size(), q.size(), "chernoff pair");
  if (p == q) throw SpecError("degenerate: zero Chernoff variance (theta_star == xi_star)");

  ChernoffAnalysis out;
  const ChernoffInformation info = chernoff_information(p, q);
  out.lambda_star = info.lambda_star;
  out.c_info = info.c_info;
  out.tilted = tilted_distribution(p, q, info.lambda_star);

  const LogPair logs = logs_of(p, q);
  double mean = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) mean += out.tilted[a] * (logs.lp[a] - logs.lq[a]);
  double var = 0.0;
  double third = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double dev = logs.lp[a] - logs.lq[a] - mean;
    var += out.tilted[a] * dev * dev;
    third += out.tilted[a] * std::abs(dev) * dev * dev;
  }
  if (!(var > 0.0)) throw SpecError("degenerate: zero Chernoff variance");

  if (p.size() == 2) {
    // Binary closed form: Z takes two values whose spread is big_c.
    out.big_c = std::abs(std::log(p[1] * q[0] / (q[1] * p[0])));
    out.sigma_bar = std::sqrt(out.big_c * out.big_c * out.tilted[1] * (1.0 - out.tilted[1]));
    out.canonical = true;
  } else {
    out.sigma_bar = std::sqrt(var);
    out.big_c = third / var;
    out.canonical = false;
  }

  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
  const double spread = out.lambda_star * (1.0 - out.lambda_star);
  out.big_c_prime = std::max(2.0, 2.0 * std::pow(0.56 * out.big_c, 1.5) * std::exp(-sqrt_2pi * out.big_c));
  out.little_c = std::exp(-1.12 * sqrt_2pi * out.big_c) / (30.0 * out.sigma_bar * spread);
  out.n_min = least_valid_length(out.sigma_bar * spread, out.big_c_prime);
  return out;
}

}  // namespace bcb
