#include "bcb/mixture.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bcb/error.hpp"
#include "bcb/math.hpp"

namespace bcb {

DirichletPrior::DirichletPrior(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() < 2) throw SpecError("Dirichlet prior needs K >= 2 concentrations");
  for (double a : alphas_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw SpecError("Dirichlet concentrations must be finite and > 0, got " + std::to_string(a));
    }
    concentration_ += a;
  }
}

double DirichletPrior::log_density(const CategoricalParams& point) const {
  require_same_size(size(), point.size(), "prior density");
  double v = log_gamma(concentration_);
  for (std::size_t a = 0; a < size(); ++a) {
    v += (alphas_[a] - 1.0) * std::log(point[a]) - log_gamma(alphas_[a]);
  }
  return v;
}

double marginal_log_prob(const DirichletPrior& prior, const Counts& data) {
  require_same_size(prior.size(), data.size(), "marginal_log_prob");
  double v = 0.0;
  for (std::size_t a = 0; a < prior.size(); ++a) {
    if (data[a] != 0) {
      v += log_gamma(prior[a] + static_cast<double>(data[a])) - log_gamma(prior[a]);
    }
  }
  if (data.total() != 0) {
    v += log_gamma(prior.concentration()) -
         log_gamma(prior.concentration() + static_cast<double>(data.total()));
  }
  return v;
}

double exact_code_length(const DirichletPrior& prior, const Counts& data) {
  return -marginal_log_prob(prior, data);
}

ApproxLengthTerms approx_code_length(const DirichletPrior& prior, const Counts& data) {
  require_same_size(prior.size(), data.size(), "approx_code_length");
  const CategoricalParams fitted = mle(data);
  const double m = static_cast<double>(data.total());
  const double d = static_cast<double>(fitted.dimension());

  ApproxLengthTerms terms;
  terms.fit = -log_likelihood(fitted, data);
  terms.complexity = 0.5 * d * std::log(m / (2.0 * std::numbers::pi));
  terms.prior_term = 0.5 * log_det_fisher_information(fitted) - prior.log_density(fitted);
  return terms;
}

double posterior_predictive_log(const DirichletPrior& prior, const Counts& training,
                                const Counts& test) {
  require_same_size(prior.size(), training.size(), "posterior_predictive_log (training)");
  require_same_size(prior.size(), test.size(), "posterior_predictive_log (test)");
  // Telescoped ratio of the two mixtures; avoids cancelling two large lgamma sums.
  double v = 0.0;
  for (std::size_t a = 0; a < prior.size(); ++a) {
    if (test[a] != 0) {
      const double base = prior[a] + static_cast<double>(training[a]);
      v += log_gamma(base + static_cast<double>(test[a])) - log_gamma(base);
    }
  }
  if (test.total() != 0) {
    const double base = prior.concentration() + static_cast<double>(training.total());
    v += log_gamma(base) - log_gamma(base + static_cast<double>(test.total()));
  }
  return v;
}

}  // namespace bcb
