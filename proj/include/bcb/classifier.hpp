#pragma once

#include <cstdint>
#include <string_view>

#include "bcb/mixture.hpp"
#include "bcb/model.hpp"

namespace bcb {

// Prior probabilities of the two hypotheses.
struct HypothesisPrior {
  double pi1 = 0.5;
  double pi2 = 0.5;

  double larger() const { return pi1 >= pi2 ? pi1 : pi2; }
  double smaller() const { return pi1 >= pi2 ? pi2 : pi1; }
  void validate() const;
};

// Training-to-test length ratio N / n, kept exact.
class TrainingRatio {
 public:
  TrainingRatio(std::int64_t numerator, std::int64_t denominator = 1);
  // Accepts "2", "3/2" or a terminating decimal such as "0.5".
  static TrainingRatio parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  // N = alpha n; throws SpecError unless it is an integer.
  std::int64_t training_length(std::int64_t n) const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

struct ProblemSpec {
  CategoricalParams theta_star;
  CategoricalParams xi_star;
  DirichletPrior mu;
  DirichletPrior nu;
  HypothesisPrior pi;
  TrainingRatio alpha;

  std::size_t alphabet_size() const { return theta_star.size(); }
  void validate() const;
};

struct TrainingData {
  Counts y1;
  Counts y2;
};

enum class Hypothesis { h1, h2 };

std::string_view to_string(Hypothesis h);

struct Decision {
  Hypothesis hypothesis = Hypothesis::h1;
  double log_score_h1 = 0.0;  // ln pi1 + ln P(x | y1, H1)
  double log_score_h2 = 0.0;  // ln pi2 + ln P(x | y2, H2)
};

// Largest number of type classes an exact sum will enumerate.
inline constexpr double kTypeClassBudget = 1e7;
// Largest number of sequences the brute-force oracle will enumerate.
inline constexpr double kSequenceBudget = 1e6;

// Number of count vectors of total n over K symbols, C(n+K-1, K-1).
double type_class_count(std::int64_t n, std::size_t k);

// Optimal (MAP) decision; ties go to H1.
Decision decide(const ProblemSpec& spec, const TrainingData& data, const Counts& test);

// ln of the conditional error probability of the optimal rule at test
// length n, i.e. ln sum_x min{pi1 P(x|y1,H1), pi2 P(x|y2,H2)}, summed over
// type classes. Throws BudgetExceeded above kTypeClassBudget classes.
double log_conditional_error_exact(const ProblemSpec& spec, const TrainingData& data, std::int64_t n);
double conditional_error_exact(const ProblemSpec& spec, const TrainingData& data, std::int64_t n);

// Same quantity by visiting each of the K^n sequences and multiplying
// sequential predictive probabilities. Oracle only.
double conditional_error_bruteforce(const ProblemSpec& spec, const TrainingData& data, std::int64_t n);

// pi1^l pi2^(1-l) sum_x P(x|y1,H1)^l P(x|y2,H2)^(1-l), an upper bound on the
// conditional error for every l in (0, 1).
double log_chernoff_style_upper(const ProblemSpec& spec, const TrainingData& data, std::int64_t n,
                                double lambda);
double chernoff_style_upper(const ProblemSpec& spec, const TrainingData& data, std::int64_t n,
                            double lambda);

}  // namespace bcb
