#include "bcb/classifier.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "bcb/error.hpp"
#include "bcb/kernels.hpp"
#include "bcb/math.hpp"
#include "bcb/parallel.hpp"

namespace bcb {

void HypothesisPrior::validate() const {
  if (!(pi1 > 0.0) || !(pi2 > 0.0)) throw SpecError("hypothesis priors pi1, pi2 must be > 0");
  if (std::abs(pi1 + pi2 - 1.0) > 1e-12) throw SpecError("hypothesis priors must sum to 1 within 1e-12");
}

TrainingRatio::TrainingRatio(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (num_ <= 0 || den_ <= 0) throw SpecError("training ratio alpha must be > 0");
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw SpecError("cannot parse training ratio component '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

TrainingRatio TrainingRatio::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return TrainingRatio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw SpecError("training ratio has too many decimal places");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    return TrainingRatio(w * den + f, den);
  }
  return TrainingRatio(parse_int(text), 1);
}

std::int64_t TrainingRatio::training_length(std::int64_t n) const {
  if ((n * num_) % den_ != 0) {
    throw SpecError("N = alpha n must be an integer (alpha = " + std::to_string(num_) + "/" +
                    std::to_string(den_) + ", n = " + std::to_string(n) + ")");
  }
  return n * num_ / den_;
}

void ProblemSpec::validate() const {
  const std::size_t k = theta_star.size();
  require_same_size(k, xi_star.size(), "theta_star vs xi_star");
  require_same_size(k, mu.size(), "theta_star vs mu");
  require_same_size(k, nu.size(), "theta_star vs nu");
  pi.validate();
}

std::string_view to_string(Hypothesis h) { return h == Hypothesis::h1 ? "H1" : "H2"; }

double type_class_count(std::int64_t n, std::size_t k) {
  // C(n+K-1, K-1) as a product, exact while it stays below 2^53.
  double v = 1.0;
  for (std::size_t j = 1; j < k; ++j) {
    v = v * static_cast<double>(n + static_cast<std::int64_t>(j)) / static_cast<double>(j);
  }
  return std::round(v);
}

namespace {

void validate_inputs(const ProblemSpec& spec, const TrainingData& data) {
  spec.validate();
  require_same_size(spec.alphabet_size(), data.y1.size(), "spec vs y1");
  require_same_size(spec.alphabet_size(), data.y2.size(), "spec vs y2");
  if (data.y1.total() != data.y2.total()) {
    throw SpecError("training sequences must have equal length N (y1.total = " +
                    std::to_string(data.y1.total()) + ", y2.total = " + std::to_string(data.y2.total()) +
                    ")");
  }
}

// ln pi + ln P(c | y, H) for a test type class c, as a constant plus one
// table lookup per symbol.
class PredictiveTable {
 public:
  PredictiveTable(const DirichletPrior& prior, const Counts& training, double pi, std::int64_t n)
      : cells_(prior.size()) {
    const double base_total = prior.concentration() + static_cast<double>(training.total());
    constant_ = std::log(pi) + log_gamma(base_total) - log_gamma(base_total + static_cast<double>(n));
    for (std::size_t a = 0; a < prior.size(); ++a) {
      const double base = prior[a] + static_cast<double>(training[a]);
      const double offset = log_gamma(base);
      auto& row = cells_[a];
      row.resize(static_cast<std::size_t>(n) + 1);
      for (std::int64_t c = 0; c <= n; ++c) row[c] = log_gamma(base + static_cast<double>(c)) - offset;
    }
  }

  double constant() const { return constant_; }
  double cell(std::size_t a, std::int64_t c) const { return cells_[a][static_cast<std::size_t>(c)]; }

 private:
  double constant_ = 0.0;
  std::vector<std::vector<double>> cells_;
};

// Per-chunk reduction: ln sum of exp(term(a_i, b_i, w_i)).
using ChunkReducer = double (*)(const kernels::KernelTable&, const double*, const double*, const double*,
                                double*, std::size_t, double);

double reduce_min(const kernels::KernelTable& k, const double* a, const double* b, const double* w,
                  double* scratch, std::size_t n, double) {
  k.add_min(a, b, w, scratch, n);
  return k.log_sum_exp(scratch, n);
}

double reduce_blend(const kernels::KernelTable& k, const double* a, const double* b, const double* w,
                    double* scratch, std::size_t n, double lambda) {
  k.add_blend(a, b, w, lambda, scratch, n);
  return k.log_sum_exp(scratch, n);
}

double tree_log_sum(const double* v, std::size_t n) {
  if (n == 0) return -INFINITY;
  if (n == 1) return v[0];
  const std::size_t half = n / 2;
  return log_add(tree_log_sum(v, half), tree_log_sum(v + half, n - half));
}

constexpr std::size_t kChunk = 4096;
constexpr double kJobTarget = 16384.0;

struct ChunkBuffer {
  std::vector<double> a = std::vector<double>(kChunk);
  std::vector<double> b = std::vector<double>(kChunk);
  std::vector<double> w = std::vector<double>(kChunk);
  std::vector<double> scratch = std::vector<double>(kChunk);
  std::size_t size = 0;
  double acc = -INFINITY;
};

class TypeClassSum {
 public:
  TypeClassSum(const ProblemSpec& spec, const TrainingData& data, std::int64_t n)
      : k_(spec.alphabet_size()),
        n_(n),
        h1_(spec.mu, data.y1, spec.pi.pi1, n),
        h2_(spec.nu, data.y2, spec.pi.pi2, n),
        log_fact_(static_cast<std::size_t>(n) + 1) {
    for (std::int64_t c = 0; c <= n; ++c) log_fact_[c] = log_gamma(static_cast<double>(c) + 1.0);
  }

  double run(ChunkReducer reducer, double param) const {
    // Jobs are contiguous ranges of the first symbol's count, sized only by
    // (n, K), so the reduction tree is independent of the worker count.
    std::vector<std::pair<std::int64_t, std::int64_t>> jobs;
    std::int64_t lo = 0;
    double load = 0.0;
    for (std::int64_t c0 = 0; c0 <= n_; ++c0) {
      load += type_class_count(n_ - c0, k_ - 1);
      if (load >= kJobTarget || c0 == n_) {
        jobs.emplace_back(lo, c0 + 1);
        lo = c0 + 1;
        load = 0.0;
      }
    }

    const kernels::KernelTable& table = kernels::active();
    std::vector<double> partial(jobs.size(), -INFINITY);
    parallel_for(jobs.size(), [&](std::size_t j) {
      ChunkBuffer buf;
      for (std::int64_t c0 = jobs[j].first; c0 < jobs[j].second; ++c0) {
        const double s1 = h1_.constant() + h1_.cell(0, c0);
        const double s2 = h2_.constant() + h2_.cell(0, c0);
        const double w = log_fact_[n_] - log_fact_[c0];
        enumerate(1, n_ - c0, s1, s2, w, buf, table, reducer, param);
      }
      flush(buf, table, reducer, param);
      partial[j] = buf.acc;
    });
    return tree_log_sum(partial.data(), partial.size());
  }

 private:
  void enumerate(std::size_t cell, std::int64_t remaining, double s1, double s2, double w, ChunkBuffer& buf,
                 const kernels::KernelTable& table, ChunkReducer reducer, double param) const {
    if (cell + 1 == k_) {
      buf.a[buf.size] = s1 + h1_.cell(cell, remaining);
      buf.b[buf.size] = s2 + h2_.cell(cell, remaining);
      buf.w[buf.size] = w - log_fact_[remaining];
      if (++buf.size == kChunk) flush(buf, table, reducer, param);
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      enumerate(cell + 1, remaining - c, s1 + h1_.cell(cell, c), s2 + h2_.cell(cell, c), w - log_fact_[c],
                buf, table, reducer, param);
    }
  }

  static void flush(ChunkBuffer& buf, const kernels::KernelTable& table, ChunkReducer reducer, double param) {
    if (buf.size == 0) return;
    buf.acc = log_add(buf.acc, reducer(table, buf.a.data(), buf.b.data(), buf.w.data(), buf.scratch.data(),
                                       buf.size, param));
    buf.size = 0;
  }

  std::size_t k_;
  std::int64_t n_;
  PredictiveTable h1_;
  PredictiveTable h2_;
  std::vector<double> log_fact_;
};

void require_type_class_budget(std::int64_t n, std::size_t k) {
  if (n < 1) throw SpecError("test length n must be >= 1");
  const double classes = type_class_count(n, k);
  if (classes > kTypeClassBudget) {
    throw BudgetExceeded("exact sum needs " + std::to_string(static_cast<long long>(classes)) +
                         " type classes (budget 1e7); use the Monte Carlo estimator instead");
  }
}

}  // namespace

Decision decide(const ProblemSpec& spec, const TrainingData& data, const Counts& test) {
  validate_inputs(spec, data);
  require_same_size(spec.alphabet_size(), test.size(), "spec vs test");
  if (test.total() < 1) throw SpecError("test sequence must be non-empty");
  Decision d;
  d.log_score_h1 = std::log(spec.pi.pi1) + posterior_predictive_log(spec.mu, data.y1, test);
  d.log_score_h2 = std::log(spec.pi.pi2) + posterior_predictive_log(spec.nu, data.y2, test);
  d.hypothesis = d.log_score_h1 >= d.log_score_h2 ? Hypothesis::h1 : Hypothesis::h2;
  return d;
}

double log_conditional_error_exact(const ProblemSpec& spec, const TrainingData& data, std::int64_t n) {
  validate_inputs(spec, data);
  require_type_class_budget(n, spec.alphabet_size());
  return TypeClassSum(spec, data, n).run(reduce_min, 0.0);
}

double conditional_error_exact(const ProblemSpec& spec, const TrainingData& data, std::int64_t n) {
  return std::exp(log_conditional_error_exact(spec, data, n));
}

double log_chernoff_style_upper(const ProblemSpec& spec, const TrainingData& data, std::int64_t n,
                                double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw SpecError("lambda must lie in (0, 1)");
  validate_inputs(spec, data);
  require_type_class_budget(n, spec.alphabet_size());
  // The pi^l pi^(1-l) factor rides along because each table already
  // includes ln pi.
  return TypeClassSum(spec, data, n).run(reduce_blend, lambda);
}

double chernoff_style_upper(const ProblemSpec& spec, const TrainingData& data, std::int64_t n,
                            double lambda) {
  return std::exp(log_chernoff_style_upper(spec, data, n, lambda));
}

double conditional_error_bruteforce(const ProblemSpec& spec, const TrainingData& data, std::int64_t n) {
  validate_inputs(spec, data);
  if (n < 1) throw SpecError("test length n must be >= 1");
  const std::size_t k = spec.alphabet_size();
  if (std::pow(static_cast<double>(k), static_cast<double>(n)) > kSequenceBudget) {
    throw BudgetExceeded("brute-force enumeration needs K^n > 1e6 sequences");
  }

  const double n1 = spec.mu.concentration() + static_cast<double>(data.y1.total());
  const double n2 = spec.nu.concentration() + static_cast<double>(data.y2.total());
  std::vector<std::size_t> seq(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> seen(k);
  KahanSum total;
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    double p1 = spec.pi.pi1;
    double p2 = spec.pi.pi2;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const std::size_t a = seq[j];
      const double prior_seen = static_cast<double>(seen[a]);
      p1 *= (spec.mu[a] + static_cast<double>(data.y1[a]) + prior_seen) / (n1 + static_cast<double>(j));
      p2 *= (spec.nu[a] + static_cast<double>(data.y2[a]) + prior_seen) / (n2 + static_cast<double>(j));
      ++seen[a];
    }
    total.add(std::min(p1, p2));

    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == k) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return total.value();
}

}  // namespace bcb
