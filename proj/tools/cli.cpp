#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcb/bounds.hpp"
#include "bcb/chernoff.hpp"
#include "bcb/classifier.hpp"
#include "bcb/error.hpp"
#include "bcb/kernels.hpp"
#include "bcb/simulate.hpp"

namespace bcb::cli {
namespace {

using nlohmann::ordered_json;

// Malformed flag values; mapped to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string theta_star;
  std::string xi_star;
  std::string mu_alphas;
  std::string nu_alphas;
  double pi1 = 0.5;
  std::string alpha = "2";
  std::optional<std::int64_t> n;
  std::string n_range;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string format;
  std::string out;
  std::string summary;
  bool bits = false;
  std::optional<int> d1;
  std::optional<int> d2;
  std::string y1;
  std::string y2;
  std::string estimator = "conditional";
  std::string test_draw = "predictive";
  std::string reproduce_case;
  std::int64_t step = 1;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
T parse_number(std::string_view text, const std::string& flag) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(flag + ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
  std::vector<T> values;
  for (auto part : split(text, ',')) values.push_back(parse_number<T>(part, flag));
  return values;
}

CategoricalParams parse_params(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  return CategoricalParams(parse_list<double>(text, flag));
}

DirichletPrior parse_prior(const std::string& text, const std::string& flag, std::size_t k) {
  if (text.empty()) return DirichletPrior::jeffreys(k);
  return DirichletPrior(parse_list<double>(text, flag));
}

ProblemSpec build_spec(const Options& o) {
  CategoricalParams theta = parse_params(o.theta_star, "--theta-star");
  CategoricalParams xi = parse_params(o.xi_star, "--xi-star");
  const std::size_t k = theta.size();
  ProblemSpec spec{std::move(theta),
                   std::move(xi),
                   parse_prior(o.mu_alphas, "--mu-alphas", k),
                   parse_prior(o.nu_alphas, "--nu-alphas", k),
                   HypothesisPrior{o.pi1, 1.0 - o.pi1},
                   TrainingRatio::parse(o.alpha)};
  spec.validate();
  return spec;
}

struct Range {
  std::int64_t from;
  std::int64_t to;
  std::int64_t step;
};

Range parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) throw UsageError("--n-range expects from:to[:step]");
  Range r{parse_number<std::int64_t>(parts[0], "--n-range"), parse_number<std::int64_t>(parts[1], "--n-range"),
          parts.size() == 3 ? parse_number<std::int64_t>(parts[2], "--n-range") : 1};
  return r;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double unit_scale(bool bits) { return bits ? 1.0 / std::numbers::ln2 : 1.0; }

void write_bounds_csv(std::ostream& os, const std::vector<BoundPoint>& points, bool bits) {
  const double s = unit_scale(bits);
  const char* unit = bits ? "bits" : "nats";
  os << "# asymptotic: o(1) terms dropped\n";
  os << "n,lower_" << unit << ",upper_" << unit << ",gap_" << unit << ",valid\n";
  for (const auto& p : points) {
    os << p.n << ',' << fmt12(p.lower * s) << ',' << fmt12(p.upper * s) << ',' << fmt12(p.gap * s) << ','
       << (p.valid ? "true" : "false") << '\n';
  }
}

ordered_json bounds_json(const std::vector<BoundPoint>& points, const ChernoffAnalysis& analysis, bool bits) {
  const double s = unit_scale(bits);
  ordered_json j;
  j["asymptotic"] = "o(1) terms dropped";
  j["unit"] = bits ? "bits" : "nats";
  j["n_min"] = analysis.n_min;
  ordered_json rows = ordered_json::array();
  for (const auto& p : points) {
    rows.push_back({{"n", p.n}, {"lower", p.lower * s}, {"upper", p.upper * s}, {"gap", p.gap * s},
                    {"valid", p.valid}});
  }
  j["points"] = std::move(rows);
  return j;
}

ordered_json analysis_json(const ChernoffAnalysis& a, bool bits) {
  ordered_json j;
  j["lambda_star"] = a.lambda_star;
  j["c_info"] = a.c_info * unit_scale(bits);
  j["unit"] = bits ? "bits" : "nats";
  j["tilted"] = std::vector<double>(a.tilted.probs().begin(), a.tilted.probs().end());
  j["sigma_bar"] = a.sigma_bar;
  j["big_c"] = a.big_c;
  j["big_c_prime"] = a.big_c_prime;
  j["little_c"] = a.little_c;
  j["n_min"] = a.n_min;
  j["canonical"] = a.canonical;
  return j;
}

// Sends text to --out if given, else to the command's stdout stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("--out: cannot open '" + o.out + "' for writing");
  file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_chernoff(const Options& o, std::ostream& out) {
  const CategoricalParams p = parse_params(o.theta_star, "--theta-star");
  const CategoricalParams q = parse_params(o.xi_star, "--xi-star");
  require_same_size(p.size(), q.size(), "--theta-star vs --xi-star");
  ordered_json j;
  if (p == q) {
    const ChernoffInformation info = chernoff_information(p, q);
    j["lambda_star"] = info.lambda_star;
    j["c_info"] = info.c_info;
    j["unit"] = o.bits ? "bits" : "nats";
    j["degenerate"] = true;
  } else {
    j = analysis_json(chernoff_analysis(p, q), o.bits);
    j["degenerate"] = false;
  }
  emit(o, out, dump(j));
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const ProblemSpec spec = build_spec(o);
  if (o.n.has_value() == !o.n_range.empty()) throw UsageError("bounds needs exactly one of --n, --n-range");
  const Range r = o.n ? Range{*o.n, *o.n, 1} : parse_range(o.n_range);
  const CurveOptions opts{o.d1, o.d2};
  const auto points = curve(spec, r.from, r.to, r.step, opts);
  if (o.format == "json") {
    emit(o, out, dump(bounds_json(points, chernoff_analysis(spec.theta_star, spec.xi_star), o.bits)));
  } else {
    std::ostringstream os;
    write_bounds_csv(os, points, o.bits);
    emit(o, out, os.str());
  }
  return kOk;
}

Counts parse_counts(const std::string& text, const std::string& flag) {
  return Counts(parse_list<std::int64_t>(text, flag));
}

int cmd_exact(const Options& o, std::ostream& out) {
  const ProblemSpec spec = build_spec(o);
  if (!o.n) throw UsageError("exact needs --n");
  const std::int64_t n = *o.n;
  if (o.y1.empty() != o.y2.empty()) throw UsageError("--y1 and --y2 must be given together");
  const TrainingData data = o.y1.empty() ? sample_training(spec, n, RngSeed{o.seed})
                                         : TrainingData{parse_counts(o.y1, "--y1"), parse_counts(o.y2, "--y2")};
  const double log_error = log_conditional_error_exact(spec, data, n);
  const double s = unit_scale(o.bits);
  auto as_vector = [](const Counts& c) { return std::vector<std::int64_t>(c.values().begin(), c.values().end()); };

  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,N,conditional_error,neg_log_error_" << (o.bits ? "bits" : "nats") << "\n";
    os << n << ',' << data.y1.total() << ',' << fmt12(std::exp(log_error)) << ',' << fmt12(-log_error * s) << '\n';
    emit(o, out, os.str());
    return kOk;
  }
  ordered_json j;
  j["n"] = n;
  j["N"] = data.y1.total();
  j["y1"] = as_vector(data.y1);
  j["y2"] = as_vector(data.y2);
  j["conditional_error"] = std::exp(log_error);
  j["neg_log_error"] = -log_error * s;
  j["unit"] = o.bits ? "bits" : "nats";
  if (o.y1.empty()) j["seed"] = o.seed;
  emit(o, out, dump(j));
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const ProblemSpec spec = build_spec(o);
  if (!o.n) throw UsageError("simulate needs --n");
  SimReport r;
  if (o.estimator == "generative") {
    const TestDraw draw = o.test_draw == "true" ? TestDraw::true_parameter : TestDraw::predictive;
    r = simulate_generative(spec, *o.n, o.trials, RngSeed{o.seed}, draw);
  } else {
    r = simulate_conditional_error(spec, *o.n, o.trials, RngSeed{o.seed});
  }
  const double s = unit_scale(o.bits);
  const char* estimator = r.estimator == Estimator::generative ? "generative" : "conditional";
  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,trials,mean_error,mean_neg_log_error_" << (o.bits ? "bits" : "nats")
       << ",ci_half_width,seed,estimator,fallback\n";
    os << r.n << ',' << r.trials << ',' << fmt12(r.mean_error) << ',' << fmt12(r.mean_neg_log_error * s) << ','
       << fmt12(r.ci_half_width) << ',' << r.seed.value << ',' << estimator << ','
       << (r.fallback ? "true" : "false") << '\n';
    emit(o, out, os.str());
    return kOk;
  }
  ordered_json j;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["mean_error"] = r.mean_error;
  j["mean_neg_log_error"] = r.mean_neg_log_error * s;
  j["unit"] = o.bits ? "bits" : "nats";
  j["ci_half_width"] = r.ci_half_width;
  j["seed"] = r.seed.value;
  j["estimator"] = estimator;
  if (r.estimator == Estimator::generative) j["test_draw"] = o.test_draw == "true" ? "true" : "predictive";
  j["fallback"] = r.fallback;
  if (!r.warning.empty()) j["warning"] = r.warning;
  emit(o, out, dump(j));
  return kOk;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  int which = 0;
  if (o.reproduce_case == "case1") which = 1;
  if (o.reproduce_case == "case2") which = 2;
  if (which == 0) throw UsageError("reproduce expects case1 or case2");
  if (o.step < 1) throw UsageError("--step must be >= 1");

  const ProblemSpec spec = reference_case(which);
  const ChernoffAnalysis analysis = chernoff_analysis(spec.theta_star, spec.xi_star);
  const CaseRange range = reference_range(which);
  const auto points = curve(spec, range.from, range.to, o.step);

  std::ostringstream csv;
  write_bounds_csv(csv, points, o.bits);
  emit(o, out, csv.str());

  ordered_json summary;
  summary["case"] = o.reproduce_case;
  summary["theta_star"] = spec.theta_star[1];
  summary["xi_star"] = spec.xi_star[1];
  summary["alpha"] = spec.alpha.value();
  summary["pi1"] = spec.pi.pi1;
  summary["pi2"] = spec.pi.pi2;
  summary["n_from"] = range.from;
  summary["n_to"] = range.to;
  summary["step"] = o.step;
  summary["rows"] = points.size();
  summary["asymptotic"] = "o(1) terms dropped";
  const ordered_json constants = analysis_json(analysis, o.bits);
  for (const auto& [key, value] : constants.items()) summary[key] = value;

  std::string summary_path = o.summary;
  if (summary_path.empty() && !o.out.empty()) summary_path = o.out + ".summary.json";
  if (summary_path.empty()) {
    err << dump(summary);
  } else {
    std::ofstream file(summary_path, std::ios::binary);
    if (!file) throw UsageError("cannot open summary path '" + summary_path + "'");
    file << dump(summary);
  }
  return kOk;
}

void add_spec_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--theta-star", o.theta_star, "True parameter of hypothesis 1, comma-separated");
  cmd->add_option("--xi-star", o.xi_star, "True parameter of hypothesis 2, comma-separated");
  cmd->add_option("--mu-alphas", o.mu_alphas, "Dirichlet prior on theta (default Jeffreys)");
  cmd->add_option("--nu-alphas", o.nu_alphas, "Dirichlet prior on xi (default Jeffreys)");
  cmd->add_option("--pi1", o.pi1, "Prior probability of H1; pi2 = 1 - pi1");
  cmd->add_option("--alpha", o.alpha, "Training ratio N/n, e.g. 2, 3/2 or 0.5");
}

void add_output_options(CLI::App* cmd, Options& o, bool with_format) {
  if (with_format) cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_flag("--bits", o.bits, "Report information quantities in bits");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bayesian classification with training sequences: exact error, Chernoff constants and bounds",
               "bcb"};
  app.require_subcommand(1);

  auto* chernoff = app.add_subcommand("chernoff", "Chernoff information and the upper-bound constants");
  chernoff->add_option("--theta-star,--p", o.theta_star, "First distribution, comma-separated");
  chernoff->add_option("--xi-star,--q", o.xi_star, "Second distribution, comma-separated");
  add_output_options(chernoff, o, false);

  auto* bounds = app.add_subcommand("bounds", "Lower/upper bounds on -ln P(error | D) over n");
  add_spec_options(bounds, o);
  auto* n_opt = bounds->add_option("--n", o.n, "Single blocklength");
  auto* range_opt = bounds->add_option("--n-range", o.n_range, "from:to[:step]");
  n_opt->excludes(range_opt);
  bounds->add_option("--d1", o.d1, "Override parameter dimension of hypothesis 1");
  bounds->add_option("--d2", o.d2, "Override parameter dimension of hypothesis 2");
  add_output_options(bounds, o, true);

  auto* exact = app.add_subcommand("exact", "Exact conditional error probability of the optimal rule");
  add_spec_options(exact, o);
  exact->add_option("--n", o.n, "Test length")->required();
  exact->add_option("--y1", o.y1, "Training counts for H1 (default: sampled from --seed)");
  exact->add_option("--y2", o.y2, "Training counts for H2 (default: sampled from --seed)");
  exact->add_option("--seed", o.seed, "Seed for sampled training data");
  add_output_options(exact, o, true);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo error estimate over training draws");
  add_spec_options(simulate, o);
  simulate->add_option("--n", o.n, "Test length")->required();
  simulate->add_option("--trials", o.trials, "Number of trials (>= 100)");
  simulate->add_option("--seed", o.seed, "Master seed");
  simulate->add_option("--estimator", o.estimator, "conditional or generative")
      ->check(CLI::IsMember({"conditional", "generative"}));
  simulate->add_option("--test-draw", o.test_draw, "Generative test source: predictive or true")
      ->check(CLI::IsMember({"predictive", "true"}));
  add_output_options(simulate, o, true);

  auto* reproduce = app.add_subcommand("reproduce", "Bound curves of the two Bernoulli study cases");
  reproduce->add_option("case", o.reproduce_case, "case1 or case2")->required();
  reproduce->add_option("--step", o.step, "Stride in n (default 1)");
  reproduce->add_option("--summary", o.summary, "Summary JSON path (default <out>.summary.json or stderr)");
  add_output_options(reproduce, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*chernoff) return cmd_chernoff(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*exact) return cmd_exact(o, out);
    if (*simulate) return cmd_simulate(o, out);
    return cmd_reproduce(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SpecError& e) {
    err << "invalid spec: " << e.what() << '\n';
    return kSpecViolation;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
}

}  // namespace bcb::cli
