#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bcb {

// Probability vector over the alphabet {0, ..., K-1}. Every entry lies in
// (0, 1) and the entries sum to one within 1e-12.
class CategoricalParams {
 public:
  explicit CategoricalParams(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  // Parameter dimension d = K - 1.
  int dimension() const { return static_cast<int>(probs_.size()) - 1; }
  double operator[](std::size_t a) const { return probs_[a]; }
  std::span<const double> probs() const { return probs_; }

  bool operator==(const CategoricalParams&) const = default;

 private:
  std::vector<double> probs_;
};

// Symbol counts of an i.i.d. sequence; the sufficient statistic for every
// quantity in this library.
class Counts {
 public:
  Counts() = default;
  explicit Counts(std::vector<std::int64_t> counts);
  static Counts zeros(std::size_t k) { return Counts(std::vector<std::int64_t>(k, 0)); }

  std::size_t size() const { return counts_.size(); }
  std::int64_t total() const { return total_; }
  std::int64_t operator[](std::size_t a) const { return counts_[a]; }
  std::span<const std::int64_t> values() const { return counts_; }

  Counts operator+(const Counts& other) const;
  bool operator==(const Counts&) const = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

struct RngSeed {
  std::uint64_t value = 0;
};

// Dense row-major matrix; only used for small Fisher-information blocks.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// ln P(sequence | params) for any sequence with the given counts.
double log_likelihood(const CategoricalParams& params, const Counts& data);

// Draws n i.i.d. symbols and returns their counts. Deterministic in seed.
Counts sample_counts(const CategoricalParams& params, std::int64_t n, RngSeed seed);

// Relative frequencies. Throws SpecError("MLE on boundary") when a cell is empty.
CategoricalParams mle(const Counts& data);

// Fisher information in the chart (p_0, ..., p_{K-2}):
// I_jk = delta_jk / p_j + 1 / p_{K-1}.
Matrix fisher_information(const CategoricalParams& params);

// ln det I(params) = -sum_a ln p_a.
double log_det_fisher_information(const CategoricalParams& params);

// Multinomial coefficient n! / prod c_a!, in log form.
double log_multinomial(const Counts& data);

void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace bcb
