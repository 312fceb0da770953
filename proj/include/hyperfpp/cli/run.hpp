#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperfpp/cli/table.hpp"
#include "hyperfpp/hyperfpp.hpp"

namespace hyperfpp::cli {

enum class Format { csv, json };

inline constexpr const char* kSubcommands[] = {"sample", "convergence", "independent", "enumerate",   "fnk",
                                                "tail",   "bounds",      "goodedges",   "secondmoment"};

/// Everything a run needs. Optional fields fall back to per-subcommand defaults.
struct RunConfig {
  std::string subcommand;
  std::optional<int> n;
  std::vector<double> ns;  // sweep dimensions (reals so that bounds can reach 1e16)
  std::vector<double> xs;  // tail grid
  std::uint64_t seed = 1;
  std::optional<std::size_t> reps;
  double eps = 0.3;
  double c = 0.08;
  std::optional<double> x;
  std::optional<double> t;
  std::vector<int> first;  // 1-based, as written on the command line
  std::vector<int> last;
  unsigned threads = 1;
  Format format = Format::csv;
  std::string output;
  int cap = kDefaultDimensionCap;
};

/// Dimension cap: --cap wins, then HYPERFPP_CAP, then the default.
inline int resolve_cap(std::optional<int> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value && *env_value) {
    char* end = nullptr;
    const long v = std::strtol(env_value, &end, 10);
    if (*end != '\0' || v < 2 || v > kMaxMaskDimension) throw ValidationError("HYPERFPP_CAP must be an integer in [2, 63]");
    return static_cast<int>(v);
  }
  return kDefaultDimensionCap;
}

namespace detail {

inline int as_dimension(double v) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) throw ValidationError("dimension must be a positive integer");
  return static_cast<int>(v);
}

inline std::vector<double> range(int lo, int hi, int step = 1) {
  std::vector<double> out;
  for (int v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

inline std::vector<int> to_zero_based(const std::vector<int>& dirs, int n) {
  std::vector<int> out;
  for (int d : dirs) {
    if (d < 1 || d > n) throw ValidationError("endpoint direction " + std::to_string(d) + " outside 1.." + std::to_string(n));
    out.push_back(d - 1);
  }
  return out;
}

inline EndpointSets endpoint_sets(const RunConfig& cfg, int n) {
  if (cfg.first.empty() != cfg.last.empty()) throw ValidationError("--first and --last must be given together");
  if (cfg.first.empty()) return default_endpoint_sets(n, cfg.c);
  return EndpointSets::from_lists(to_zero_based(cfg.first, n), to_zero_based(cfg.last, n), n);
}

inline std::string join_one_based(std::uint64_t mask) {
  std::string out;
  for (int d = 0; d < 64; ++d)
    if ((mask >> d) & 1u) out += (out.empty() ? "" : " ") + std::to_string(d + 1);
  return out;
}

inline std::string join(const std::vector<double>& v) {
  std::string out;
  for (double d : v) out += (out.empty() ? "" : " ") + format_double(d);
  return out;
}

inline Cell count_cell(std::uint64_t v) { return static_cast<std::int64_t>(v); }

inline void summary_rows(Table& table, const std::vector<double>& values, std::size_t width) {
  const std::pair<const char*, double> levels[] = {{"min", 0.0},   {"q05", 0.05}, {"q25", 0.25}, {"median", 0.5},
                                                    {"q75", 0.75}, {"q95", 0.95}, {"max", 1.0}};
  auto row = [&](const char* name, double v) {
    std::vector<Cell> r(width);
    r[0] = std::string("summary");
    r[2] = std::string(name);
    r[3] = v;
    table.add(std::move(r));
  };
  row("mean", stats::mean(values));
  row("sd", std::sqrt(stats::variance(values)));
  for (const auto& [name, q] : levels) row(name, stats::quantile(values, q));
}

}  // namespace detail

/// Parameter echo: the full configuration minus scheduling and destination.
inline Echo echo_config(const RunConfig& cfg) {
  Echo e;
  e.emplace_back("version", std::string(kVersion));
  e.emplace_back("subcommand", cfg.subcommand);
  e.emplace_back("n", cfg.n ? Cell(static_cast<std::int64_t>(*cfg.n)) : Cell{});
  e.emplace_back("ns", detail::join(cfg.ns));
  e.emplace_back("xs", detail::join(cfg.xs));
  e.emplace_back("seed", std::to_string(cfg.seed));
  e.emplace_back("reps", cfg.reps ? Cell(static_cast<std::int64_t>(*cfg.reps)) : Cell{});
  e.emplace_back("eps", cfg.eps);
  e.emplace_back("c", cfg.c);
  e.emplace_back("x", cfg.x ? Cell(*cfg.x) : Cell{});
  e.emplace_back("t", cfg.t ? Cell(*cfg.t) : Cell{});
  std::string first, last;
  for (int d : cfg.first) first += (first.empty() ? "" : " ") + std::to_string(d);
  for (int d : cfg.last) last += (last.empty() ? "" : " ") + std::to_string(d);
  e.emplace_back("first", first);
  e.emplace_back("last", last);
  e.emplace_back("cap", static_cast<std::int64_t>(cfg.cap));
  e.emplace_back("format", std::string(cfg.format == Format::csv ? "csv" : "json"));
  return e;
}

inline Table run_sample(const RunConfig& cfg) {
  const int n = cfg.n.value_or(10);
  const auto paths = sample_paths(n, Seed{cfg.seed}, cfg.reps.value_or(100), cfg.threads, cfg.cap);
  Table t{{"kind", "replica", "statistic", "value", "argmin"}, {}};
  std::vector<double> values;
  for (std::size_t r = 0; r < paths.size(); ++r) {
    t.add({std::string("sample"), static_cast<std::int64_t>(r), std::string("m_n"), paths[r].min_weight,
           format_path(paths[r].argmin)});
    values.push_back(paths[r].min_weight);
  }
  detail::summary_rows(t, values, t.columns.size());
  return t;
}

inline Table run_convergence(const RunConfig& cfg) {
  const auto ns = cfg.ns.empty() ? std::vector<double>{10, 14, 18, 22} : cfg.ns;
  const double x = cfg.x.value_or(1.0);
  const std::size_t reps = cfg.reps.value_or(200);
  Table t{{"n", "reps", "mean", "sd", "q05", "median", "q95", "x", "frac_le_x", "markov_upper_x", "independent_median"},
          {}};
  for (double nv : ns) {
    const int n = detail::as_dimension(nv);
    const auto values = sample_min(n, Seed{cfg.seed}, reps, cfg.threads, cfg.cap);
    double below = 0.0;
    for (double v : values) below += v <= x ? 1.0 : 0.0;
    t.add({static_cast<std::int64_t>(n), static_cast<std::int64_t>(reps), stats::mean(values),
           std::sqrt(stats::variance(values)), stats::quantile(values, 0.05), stats::median(values),
           stats::quantile(values, 0.95), x, below / static_cast<double>(reps), markov_upper(n, x),
           independent_min_median(n)});
  }
  return t;
}

inline Table run_independent(const RunConfig& cfg) {
  const auto ns = cfg.ns.empty() ? detail::range(20, 60, 5) : cfg.ns;
  const double x = cfg.x.value_or(1.0);
  Table t{{"n", "x", "cdf_at_x", "median"}, {}};
  for (double nv : ns) {
    const int n = detail::as_dimension(nv);
    t.add({static_cast<std::int64_t>(n), x, independent_min_cdf(n, x), independent_min_median(n)});
  }
  return t;
}

inline Table run_enumerate(const RunConfig& cfg) {
  const int n = cfg.n.value_or(8);
  const double x = cfg.x.value_or(connecting_threshold(cfg.eps));
  const EndpointSets ends = detail::endpoint_sets(cfg, n);
  const std::size_t reps = cfg.reps.value_or(100);
  std::vector<std::uint64_t> all(reps), connecting(reps);
  require_enumerable(n);
  parallel_for(reps, cfg.threads, [&](std::size_t r) {
    const auto stream = derive_replica(Seed{cfg.seed}, r);
    all[r] = enumerate_counts(n, stream, x);
    connecting[r] = enumerate_counts(n, stream, x, ends);
  });
  Table t{{"replica", "x", "first", "last", "n_x", "n_connecting"}, {}};
  for (std::size_t r = 0; r < reps; ++r)
    t.add({static_cast<std::int64_t>(r), x, detail::join_one_based(ends.first), detail::join_one_based(ends.last),
           detail::count_cell(all[r]), detail::count_cell(connecting[r])});
  return t;
}

inline Table run_fnk(const RunConfig& cfg) {
  const int n = cfg.n.value_or(8);
  const FnkTable table = count_fnk(n);
  const GapSplit split = count_fnk_by_gap(n);
  Table t{{"k", "f", "f1", "bound_iii", "f1_sandwich", "f_small_gap", "f_large_gap", "bound_ii_log", "bound_ii_in_regime"},
          {}};
  for (int k = 0; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    std::vector<Cell> row(t.columns.size());
    row[0] = static_cast<std::int64_t>(k);
    row[2] = detail::count_cell(table.f1[uk]);
    if (k <= n - 2) {
      row[1] = detail::count_cell(table.f[uk]);
      std::uint64_t sandwich = table.f1[uk] + table.f1[uk + 1] + table.f1[uk + 2];
      row[4] = detail::count_cell(sandwich);
      row[5] = detail::count_cell(split.small_gap[uk]);
      row[6] = detail::count_cell(split.large_gap[uk]);
      const auto ii = fnk_bound_ii_log(n, k);
      row[7] = ii.value;
      row[8] = static_cast<std::int64_t>(ii.in_regime);
    }
    if (k >= 1 && k <= n - 2) row[3] = detail::count_cell(fnk_bound_iii(n, k));
    t.add(std::move(row));
  }
  return t;
}

inline Table run_tail(const RunConfig& cfg) {
  const auto ns = cfg.ns.empty() ? detail::range(1, 50) : cfg.ns;
  const auto xs = cfg.xs.empty() ? std::vector<double>{0.1, 0.5, 1.0, 1.5, 2.0, 3.0} : cfg.xs;
  Table t{{"n", "x", "cdf", "correction", "correction_bound", "log_cdf"}, {}};
  for (double nv : ns) {
    const int n = detail::as_dimension(nv);
    for (double x : xs) {
      const GammaTail g = gamma_lower_cdf(n, x);
      t.add({static_cast<std::int64_t>(n), x, g.cdf, g.correction, std::exp(x) * x / (n + 1.0), log_gamma_tail(n, x)});
    }
  }
  return t;
}

inline Table run_bounds(const RunConfig& cfg) {
  std::vector<double> ns = cfg.ns;
  if (ns.empty())
    for (int d = 2; d <= 16; ++d) ns.push_back(std::pow(10.0, d));
  Table t{{"n", "ne", "t1_log", "t2_log", "t3_log", "k_small", "bracket_i_log"}, {}};
  for (double n : ns) {
    if (!(n >= 1.0)) throw ValidationError("bounds needs n >= 1");
    const BoundTermLog b = second_moment_terms(n, cfg.eps, cfg.c);
    const double k = std::floor(std::pow(n, 0.25));
    std::vector<Cell> row{n, ne(n), b.t1_log, b.t2_log, b.t3_log ? Cell(*b.t3_log) : Cell{}, k, Cell{}};
    if (4.0 * k < n) row[6] = fnk_bracket_i_log(n, k);
    t.add(std::move(row));
  }
  return t;
}

inline Table run_goodedges(const RunConfig& cfg) {
  const int n = cfg.n.value_or(100000);
  if (n < 1) throw ValidationError("goodedges needs n >= 1");
  const double thr = cfg.t.value_or(cfg.eps / 3.0);
  const auto s = good_edge_stats(static_cast<std::uint64_t>(n), thr, cfg.reps.value_or(100), Seed{cfg.seed}, cfg.threads);
  Table t{{"kind", "replica", "statistic", "value"}, {}};
  for (std::size_t r = 0; r < s.fractions.size(); ++r)
    t.add({std::string("sample"), static_cast<std::int64_t>(r), std::string("fraction"), s.fractions[r]});
  t.add({std::string("summary"), Cell{}, std::string("fraction_mean"), s.fraction_mean});
  t.add({std::string("summary"), Cell{}, std::string("p_analytic"), s.p_analytic});
  t.add({std::string("summary"), Cell{}, std::string("sigma"), s.sigma});
  return t;
}

inline Table run_secondmoment(const RunConfig& cfg) {
  const int n = cfg.n.value_or(7);
  const EndpointSets ends = detail::endpoint_sets(cfg, n);
  const std::size_t streams = cfg.reps.value_or(10000);
  const PzEstimate est = empirical_pz_ratio(n, cfg.eps, ends, streams, Seed{cfg.seed}, cfg.threads);
  const SecondMomentBound bound = second_moment_bound(count_fnk(n), cfg.eps, ends.first_size(), ends.last_size());
  Table t{{"n", "eps", "streams", "mean", "mean_sigma", "mean_formula", "second_moment", "pz_lower_bound", "hit_rate",
           "hit_sigma", "second_moment_bound", "pz_lower_rigorous"},
          {}};
  t.add({static_cast<std::int64_t>(n), cfg.eps, static_cast<std::int64_t>(streams), est.mean, est.mean_sigma,
         std::exp(mean_connecting_log(n, cfg.eps, ends.first_size(), ends.last_size())), est.second_moment,
         est.pz_lower_bound, est.hit_rate, est.hit_sigma, bound.second_moment_bound, bound.pz_lower});
  return t;
}

inline Table run(const RunConfig& cfg) {
  if (cfg.threads < 1) throw ValidationError("--threads must be at least 1");
  if (cfg.reps && *cfg.reps < 1) throw ValidationError("--reps must be at least 1");
  const std::string& s = cfg.subcommand;
  if (s == "sample") return run_sample(cfg);
  if (s == "convergence") return run_convergence(cfg);
  if (s == "independent") return run_independent(cfg);
  if (s == "enumerate") return run_enumerate(cfg);
  if (s == "fnk") return run_fnk(cfg);
  if (s == "tail") return run_tail(cfg);
  if (s == "bounds") return run_bounds(cfg);
  if (s == "goodedges") return run_goodedges(cfg);
  if (s == "secondmoment") return run_secondmoment(cfg);
  throw ValidationError("unknown subcommand '" + s + "'");
}

/// Registers every subcommand and flag on `app`, writing into `cfg`.
/// `cap_flag` receives --cap when given.
inline void configure_app(CLI::App& app, RunConfig& cfg, std::optional<int>& cap_flag) {
  app.require_subcommand(1);
  const std::pair<const char*, const char*> commands[] = {
      {"sample", "exact m_n samples with nearest-rank summary"},
      {"convergence", "sweep n and summarise m_n"},
      {"independent", "closed-form minimum of n! independent Gamma(n) sums"},
      {"enumerate", "exhaustive path counts N_n^x and N^(1)"},
      {"fnk", "exact overlap tables f(n,k), f1(n,k) with bounds"},
      {"tail", "Gamma lower-tail grid with correction K(x,n)"},
      {"bounds", "log second-moment bound terms over n"},
      {"goodedges", "fraction of good edges at 0 against p(t)"},
      {"secondmoment", "Monte Carlo Paley-Zygmund ingredients for N^(1)"}};
  static const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
    sub->add_option("--n", cfg.n, "dimension");
    sub->add_option("--ns", cfg.ns, "dimensions for sweeps")->delimiter(',');
    sub->add_option("--xs", cfg.xs, "x grid for tail")->delimiter(',');
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--reps", cfg.reps, "replicas / streams")->check(CLI::PositiveNumber);
    sub->add_option("--eps", cfg.eps, "epsilon")->check(CLI::PositiveNumber);
    sub->add_option("--c", cfg.c, "block fraction C")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--x", cfg.x, "threshold x");
    sub->add_option("--t", cfg.t, "good-edge threshold (default eps/3)")->check(CLI::PositiveNumber);
    sub->add_option("--first", cfg.first, "first-step directions A (1-based)")->delimiter(',');
    sub->add_option("--last", cfg.last, "last-step directions A' (1-based)")->delimiter(',');
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", cfg.output, "output file (default stdout)");
    sub->add_option("--cap", cap_flag, "dimension cap for the dynamic program")->check(CLI::Range(2, kMaxMaskDimension));
  }
}

}  // namespace hyperfpp::cli
