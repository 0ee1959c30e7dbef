// Command-line front end: compute, verify, generate and benchmark Groebner
// bases of vanishing ideals of points.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "essgb/bench.hpp"
#include "essgb/errors.hpp"
#include "essgb/essbm.hpp"
#include "essgb/variety.hpp"
#include "essgb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct ComputeOptions {
  std::string path;
  std::string order = "lex";
  std::string varorder;
  std::string algorithm = "essbm";
  bool strict = false;
};

void add_compute_options(CLI::App* cmd, ComputeOptions& opt) {
  cmd->add_option("file", opt.path, "variety file ('-' for stdin)")->required();
  cmd->add_option("--order", opt.order, "lex | grevlex | matrix:<n*n integers>");
  cmd->add_option("--varorder", opt.varorder,
                  "comma-separated 1-based variable indices, largest first");
  cmd->add_option("--algorithm", opt.algorithm, "essbm | bma")
      ->check(CLI::IsMember({"essbm", "bma"}));
  cmd->add_flag("--strict", opt.strict, "reject duplicate points instead of dropping them");
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw essgb::InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

essgb::Variety load_variety(const ComputeOptions& opt) {
  essgb::ParsedVariety parsed = essgb::parse_variety(read_input(opt.path), {opt.strict});
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(parsed.variety);
}

struct Computed {
  essgb::GroebnerResult result;
  bool has_essential = true;
};

Computed compute(const essgb::Variety& v, const essgb::TermOrder& order,
                 const std::string& algorithm) {
  if (algorithm == "essbm") return {essgb::essbm(v, order), true};
  std::vector<std::size_t> all(v.n_vars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  essgb::BasisResult bma = essgb::buchberger_moller(essgb::project_points(v, all), order);
  Computed out{{}, false};
  out.result.basis = std::move(bma.basis);
  out.result.standard = std::move(bma.standard);
  for (const essgb::Monomial& s : out.result.standard) {
    for (const auto& f : s.factors()) out.result.essential.push_back(f.var);
  }
  std::sort(out.result.essential.begin(), out.result.essential.end());
  out.result.essential.erase(
      std::unique(out.result.essential.begin(), out.result.essential.end()),
      out.result.essential.end());
  return out;
}

int run_gb(const ComputeOptions& opt) {
  essgb::Variety v = load_variety(opt);
  essgb::TermOrder order = essgb::TermOrder::parse(opt.order, v.n_vars(), opt.varorder);
  Computed c = compute(v, order, opt.algorithm);
  for (const essgb::Polynomial& g : c.result.groebner_basis()) {
    std::cout << essgb::render(g) << '\n';
  }
  std::cout << "SM:";
  for (const essgb::Monomial& s : c.result.standard) std::cout << ' ' << essgb::render(s);
  std::cout << '\n';
  if (c.has_essential) {
    std::cout << "EV:";
    for (std::size_t var : c.result.essential) std::cout << " x" << var + 1;
    std::cout << '\n';
  }
  return kExitOk;
}

int run_verify(const ComputeOptions& opt) {
  essgb::Variety v = load_variety(opt);
  essgb::TermOrder order = essgb::TermOrder::parse(opt.order, v.n_vars(), opt.varorder);
  Computed c = compute(v, order, opt.algorithm);
  essgb::VerificationReport report;
  if (c.has_essential) {
    report = essgb::verify_result(c.result, v, order);
  } else {
    // A plain Buchberger-Moeller result has no relation/essential split.
    std::vector<essgb::Polynomial> g = c.result.groebner_basis();
    report.checks.push_back(essgb::check_vanishing(g, v));
    report.checks.push_back(essgb::check_reduced(g, order));
    report.checks.push_back(essgb::check_sm(c.result.standard, v, c.result.essential));
  }
  std::cout << report.render();
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw essgb::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Groebner bases of vanishing ideals of points over prime fields"};
  app.require_subcommand(1);

  ComputeOptions gb_opt;
  CLI::App* gb = app.add_subcommand("gb", "compute G, the standard monomials and EV");
  add_compute_options(gb, gb_opt);

  ComputeOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "compute and run the verification suite");
  add_compute_options(verify, verify_opt);

  std::uint32_t gen_p = 3;
  std::size_t gen_n = 1, gen_m = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "write a random variety");
  gen->add_option("--p", gen_p, "prime modulus")->required();
  gen->add_option("--n", gen_n, "variable count")->required();
  gen->add_option("--m", gen_m, "point count")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  essgb::BenchConfig bench_cfg;
  bench_cfg.orders = {"lex"};
  std::string bench_out, bench_summary;
  CLI::App* bench = app.add_subcommand("bench", "time essbm against bma on random varieties");
  bench->add_option("--p", bench_cfg.primes, "prime moduli")->required()->delimiter(',');
  bench->add_option("--n", bench_cfg.ns, "variable counts")->required()->delimiter(',');
  bench->add_option("--m", bench_cfg.ms, "point counts")->required()->delimiter(',');
  bench->add_option("--order", bench_cfg.orders, "term orders (repeatable)");
  bench->add_option("--seeds", bench_cfg.seeds, "varieties per cell");
  bench->add_option("--seed", bench_cfg.base_seed, "first seed");
  bench->add_option("--repeat", bench_cfg.repeats, "timed calls per instance (fastest reported)");
  bench->add_flag("--verify", bench_cfg.verify, "cross-check every instance");
  bench->add_option("--jobs", bench_cfg.jobs,
                    "parallel workers; timings then include contention");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");
  bench->add_option("--summary", bench_summary, "per-cell mean/CoV table path (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gb) return run_gb(gb_opt);
    if (*verify) return run_verify(verify_opt);
    if (*gen) {
      write_output(gen_out, essgb::render_variety(essgb::random_variety(gen_p, gen_n, gen_m, gen_seed)));
      return kExitOk;
    }
    if (*bench) {
      essgb::BenchReport report = essgb::run_bench(bench_cfg);
      write_output(bench_out, essgb::render_csv(report.records));
      std::string summary = essgb::render_summary(report.summaries);
      if (bench_summary.empty()) {
        std::cerr << summary;
      } else {
        write_output(bench_summary, summary);
      }
      for (const std::string& f : report.failures) std::cerr << "FAIL " << f << '\n';
      return report.failures.empty() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
