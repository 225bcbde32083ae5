#include "bcb/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bcb/error.hpp"
#include "bcb/math.hpp"
#include "bcb/rng.hpp"

namespace bcb {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw SpecError(std::string("dimension mismatch: ") + what + " (" + std::to_string(a) +
                    " vs " + std::to_string(b) + ")");
  }
}

CategoricalParams::CategoricalParams(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw SpecError("categorical parameters need K >= 2 entries");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0 && p < 1.0)) {
      throw SpecError("categorical parameters must lie strictly inside (0, 1), got " +
                      std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw SpecError("categorical parameters must sum to 1 within 1e-12, got " +
                    std::to_string(sum));
  }
}

Counts::Counts(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  for (auto c : counts_) {
    if (c < 0) throw SpecError("counts must be non-negative");
    total_ += c;
  }
}

Counts Counts::operator+(const Counts& other) const {
  require_same_size(size(), other.size(), "count addition");
  std::vector<std::int64_t> sum(counts_);
  for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += other.counts_[a];
  return Counts(std::move(sum));
}

double log_likelihood(const CategoricalParams& params, const Counts& data) {
  require_same_size(params.size(), data.size(), "log_likelihood");
  double ll = 0.0;
  for (std::size_t a = 0; a < params.size(); ++a) {
    if (data[a] != 0) ll += static_cast<double>(data[a]) * std::log(params[a]);
  }
  return ll;
}

Counts sample_counts(const CategoricalParams& params, std::int64_t n, RngSeed seed) {
  if (n < 0) throw SpecError("sample size must be non-negative");
  const std::size_t k = params.size();
  std::vector<double> cdf(k);
  std::partial_sum(params.probs().begin(), params.probs().end(), cdf.begin());
  cdf.back() = 1.0;

  Engine engine = make_engine(seed);
  std::vector<std::int64_t> counts(k, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = uniform01(engine);
    const auto it = std::upper_bound(cdf.begin(), cdf.end() - 1, u);
    ++counts[static_cast<std::size_t>(it - cdf.begin())];
  }
  return Counts(std::move(counts));
}

CategoricalParams mle(const Counts& data) {
  if (data.total() < 1) throw SpecError("MLE on boundary: empty sample");
  std::vector<double> probs(data.size());
  for (std::size_t a = 0; a < data.size(); ++a) {
    if (data[a] == 0) throw SpecError("MLE on boundary: symbol " + std::to_string(a) + " unseen");
    probs[a] = static_cast<double>(data[a]) / static_cast<double>(data.total());
  }
  return CategoricalParams(std::move(probs));
}

Matrix fisher_information(const CategoricalParams& params) {
  const std::size_t d = params.size() - 1;
  const double last = 1.0 / params[d];
  Matrix info(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) info(j, k) = last;
    info(j, j) += 1.0 / params[j];
  }
  return info;
}

double log_det_fisher_information(const CategoricalParams& params) {
  double s = 0.0;
  for (double p : params.probs()) s -= std::log(p);
  return s;
}

double log_multinomial(const Counts& data) {
  double v = log_gamma(static_cast<double>(data.total()) + 1.0);
  for (auto c : data.values()) v -= log_gamma(static_cast<double>(c) + 1.0);
  return v;
}

}  // namespace bcb
