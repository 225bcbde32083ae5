#pragma once

// Generators and enumerators shared by the test suites.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bcb/classifier.hpp"
#include "bcb/model.hpp"

namespace bcb::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Interior probability vector with every entry >= floor.
inline CategoricalParams random_params(Rng& rng, std::size_t k, double floor = 0.02) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (auto& v : w) {
    v = uniform(rng, 0.0, 1.0);
    sum += v;
  }
  double total = 0.0;
  for (auto& v : w) {
    v = floor + (1.0 - floor * static_cast<double>(k)) * v / sum;
    total += v;
  }
  w.back() += 1.0 - total;
  return CategoricalParams(std::move(w));
}

inline DirichletPrior random_prior(Rng& rng, std::size_t k) {
  std::vector<double> a(k);
  for (auto& v : a) v = uniform(rng, 0.3, 3.0);
  return DirichletPrior(std::move(a));
}

inline Counts random_counts(Rng& rng, std::size_t k, std::int64_t total) {
  std::vector<std::int64_t> c(k, 0);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::int64_t i = 0; i < total; ++i) ++c[pick(rng)];
  return Counts(std::move(c));
}

// Visits every count vector of total n over k symbols.
inline void for_each_type(std::size_t k, std::int64_t n, const std::function<void(const Counts&)>& visit) {
  std::vector<std::int64_t> c(k, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t cell, std::int64_t left) {
    if (cell + 1 == k) {
      c[cell] = left;
      visit(Counts(c));
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      c[cell] = v;
      rec(cell + 1, left - v);
    }
  };
  rec(0, n);
}

// Random problem with K symbols, training length big_n and random priors.
struct RandomProblem {
  ProblemSpec spec;
  TrainingData data;
};

inline RandomProblem random_problem(Rng& rng, std::size_t k, std::int64_t big_n) {
  const double pi1 = uniform(rng, 0.1, 0.9);
  ProblemSpec spec{random_params(rng, k), random_params(rng, k), random_prior(rng, k), random_prior(rng, k),
                   HypothesisPrior{pi1, 1.0 - pi1}, TrainingRatio(2)};
  TrainingData data{random_counts(rng, k, big_n), random_counts(rng, k, big_n)};
  return {std::move(spec), std::move(data)};
}

}  // namespace bcb::testing
