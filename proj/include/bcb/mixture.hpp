#pragma once

#include <vector>

#include "bcb/model.hpp"

namespace bcb {

// Dirichlet prior on the probability simplex (Beta for K = 2).
class DirichletPrior {
 public:
  explicit DirichletPrior(std::vector<double> alphas);
  // Jeffreys prior, all concentrations 1/2.
  static DirichletPrior jeffreys(std::size_t k) { return DirichletPrior(std::vector<double>(k, 0.5)); }

  std::size_t size() const { return alphas_.size(); }
  double operator[](std::size_t a) const { return alphas_[a]; }
  std::span<const double> alphas() const { return alphas_; }
  double concentration() const { return concentration_; }

  // Log density at an interior point, with respect to Lebesgue measure on
  // the first K-1 coordinates.
  double log_density(const CategoricalParams& point) const;

  bool operator==(const DirichletPrior& other) const { return alphas_ == other.alphas_; }

 private:
  std::vector<double> alphas_;
  double concentration_ = 0.0;
};

// The three leading terms of the asymptotic Bayes code length. The o(1)
// remainder is not modeled.
struct ApproxLengthTerms {
  double fit = 0.0;         // -ln P(s^m | mle)
  double complexity = 0.0;  // (d/2) ln(m / 2 pi)
  double prior_term = 0.0;  // ln( sqrt(det I(mle)) / w(mle) )

  double total() const { return fit + complexity + prior_term; }
};

// ln of the Bayes mixture probability of one sequence with these counts:
// ln Integral P(s^m | eta) w(eta) d eta, in closed form.
double marginal_log_prob(const DirichletPrior& prior, const Counts& data);

// Bayes code length in nats, -marginal_log_prob.
double exact_code_length(const DirichletPrior& prior, const Counts& data);

// Asymptotic (Laplace) expansion of the code length around the MLE.
// Throws SpecError when the MLE is on the simplex boundary.
ApproxLengthTerms approx_code_length(const DirichletPrior& prior, const Counts& data);

// ln P(test | training) under the posterior predictive; the mixture over
// the concatenated sequence divided by the mixture over the training data.
double posterior_predictive_log(const DirichletPrior& prior, const Counts& training,
                                const Counts& test);

}  // namespace bcb
