#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mprof/aamp.hpp"
#include "mprof/acamp.hpp"
#include "mprof/bench.hpp"
#include "mprof/core.hpp"
#include "mprof/csv_io.hpp"
#include "mprof/engine_state.hpp"
#include "mprof/oracle.hpp"

namespace {

struct ComputeArgs {
  std::string input;
  std::size_t m = 0;
  std::string distance;
  double p = 0.0;
  bool p_given = false;
  std::string output;
  std::size_t exclusion = 1;
  std::string order = "asc";
  std::uint64_t seed = 0;
  std::string engine = "auto";
  std::string acamp_variant = "f";
  unsigned threads = 0;
  bool progress = false;
};

struct BenchArgs {
  std::string sweep = "n";
  std::vector<std::size_t> n_list;
  std::vector<std::size_t> m_list;
  std::vector<std::string> engines;
  int repeats = 2;
  std::uint64_t seed = 0;
  std::string output;
};

mprof::ProgressFn make_progress_printer() {
  auto last = std::make_shared<int>(-1);
  return [last](std::size_t done, std::size_t total) {
    const int pct = static_cast<int>(100.0 * static_cast<double>(done) / static_cast<double>(total));
    if (pct != *last) {
      *last = pct;
      std::fprintf(stderr, "%d%%\n", pct);
    }
    return true;
  };
}

int run_compute(const ComputeArgs& args) {
  if (args.distance == "pnorm" && !args.p_given) {
    std::cerr << "error: --distance pnorm requires --p\n";
    return 2;
  }
  if (args.distance != "pnorm" && args.p_given) {
    std::cerr << "error: --p is only meaningful with --distance pnorm\n";
    return 2;
  }

  mprof::DistanceKind kind = mprof::DistanceKind::euclidean();
  if (args.distance == "pnorm") kind = mprof::DistanceKind::pnorm(args.p);
  if (args.distance == "znorm") kind = mprof::DistanceKind::znormalized();

  mprof::ProfileConfig cfg(args.m, kind);
  cfg.exclusion = args.exclusion;
  cfg.order = args.order == "random" ? mprof::DiagonalOrder::RandomPermutation
                                     : mprof::DiagonalOrder::Ascending;
  cfg.order_seed = args.seed;

  mprof::TimeSeries series = [&] {
    if (args.input == "-") return mprof::read_series_csv(std::cin);
    std::ifstream in(args.input, std::ios::binary);
    if (!in) throw mprof::Error(mprof::ErrorCode::Io, "cannot open input '" + args.input + "'");
    return mprof::read_series_csv(in);
  }();

  mprof::ProgressFn progress;
  if (args.progress) progress = make_progress_printer();

  mprof::MatrixProfile profile = [&] {
    if (args.engine == "oracle") return mprof::brute_profile(series, cfg);
    switch (kind.family) {
      case mprof::DistanceFamily::PNorm:
        return mprof::aamp_pnorm(series, cfg, progress, args.threads);
      case mprof::DistanceFamily::ZNormalized:
        return mprof::acamp(series, cfg,
                            args.acamp_variant == "sq" ? mprof::AcampVariant::SquaredDistance
                                                       : mprof::AcampVariant::FScore,
                            progress, args.threads);
      case mprof::DistanceFamily::Euclidean:
      default:
        return mprof::aamp(series, cfg, progress, args.threads);
    }
  }();

  if (args.output.empty() || args.output == "-") {
    mprof::write_profile_csv(profile, std::cout);
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw mprof::Error(mprof::ErrorCode::Io, "cannot open output '" + args.output + "'");
    mprof::write_profile_csv(profile, out);
  }
  return 0;
}

int run_bench(const BenchArgs& args) {
  mprof::BenchPlan plan;
  plan.sweep = args.sweep == "m" ? mprof::BenchPlan::Sweep::M : mprof::BenchPlan::Sweep::N;
  plan.n_list = args.n_list;
  plan.m_list = args.m_list;
  plan.engines = args.engines;
  plan.repeats = args.repeats;
  plan.seed = args.seed;

  if (args.output.empty() || args.output == "-") {
    mprof::run_bench(plan, &std::cout);
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw mprof::Error(mprof::ErrorCode::Io, "cannot open output '" + args.output + "'");
    mprof::run_bench(plan, &out);
    if (!out) throw mprof::Error(mprof::ErrorCode::Io, "write failure on '" + args.output + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix profile engines over CSV time series"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "compute a matrix profile from a CSV series");
  compute->add_option("--input", cargs.input, "input CSV path, '-' for standard input")
      ->required();
  compute->add_option("--m", cargs.m, "subsequence length")->required();
  compute->add_option("--distance", cargs.distance, "distance kind")
      ->check(CLI::IsMember({"euclidean", "pnorm", "znorm"}))
      ->required();
  CLI::Option* p_opt =
      compute->add_option("--p", cargs.p, "p-norm exponent >= 1 (required with --distance pnorm)");
  compute->add_option("--output", cargs.output, "output CSV path (default: standard output)");
  compute->add_option("--exclusion", cargs.exclusion,
                      "minimum |i - j| between paired subsequences (default 1)");
  compute->add_option("--order", cargs.order, "diagonal schedule (default asc)")
      ->check(CLI::IsMember({"asc", "random"}));
  compute->add_option("--seed", cargs.seed, "schedule seed for --order random");
  compute->add_option("--engine", cargs.engine,
                      "auto = the incremental engine for the distance kind; oracle = brute force")
      ->check(CLI::IsMember({"auto", "oracle"}));
  compute->add_option("--acamp-variant", cargs.acamp_variant,
                      "znorm comparison space: f (sqrt-free score) or sq (squared distance)")
      ->check(CLI::IsMember({"f", "sq"}));
  compute->add_option("--threads", cargs.threads, "worker threads (0 = all available)");
  compute->add_flag("--progress", cargs.progress, "emit percent lines to standard error");

  BenchArgs bargs;
  CLI::App* bench = app.add_subcommand("bench", "time the engines on seeded random series");
  bench->add_option("--sweep", bargs.sweep, "vary n (m fixed) or m (n fixed); default n")
      ->check(CLI::IsMember({"n", "m"}));
  bench->add_option("--n-list", bargs.n_list, "comma-separated series lengths")->delimiter(',');
  bench->add_option("--m-list", bargs.m_list, "comma-separated subsequence lengths")
      ->delimiter(',');
  bench->add_option("--engines", bargs.engines,
                    "comma-separated: aamp, aamp_pnorm, acamp_sq, acamp_f, oracle "
                    "(default aamp,acamp_f)")
      ->delimiter(',');
  bench->add_option("--repeats", bargs.repeats, "runs averaged per row (default 2)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bargs.seed, "series generator seed");
  bench->add_option("--output", bargs.output, "report CSV path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cargs.p_given = p_opt->count() > 0;

  try {
    if (compute->parsed()) return run_compute(cargs);
    if (bench->parsed()) return run_bench(bargs);
  } catch (const mprof::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == mprof::ErrorCode::Io ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
