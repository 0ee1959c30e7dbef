// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "essgb/bench.hpp"
#include "essgb/bma.hpp"
#include "essgb/essbm.hpp"
#include "essgb/random.hpp"
#include "essgb/variety.hpp"
#include "essgb/verify.hpp"

#ifndef ESSGB_CLI_PATH
#error "ESSGB_CLI_PATH must name the command-line binary"
#endif

using namespace essgb;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (passed) first_failure = why;
    passed = false;
  }
};

struct Instance {
  Variety v;
  TermOrder order;
  std::string label;
};

std::vector<std::size_t> shuffled(std::size_t n, ResidueSampler& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
  return perm;
}

std::size_t feasible_m(std::uint32_t p, std::size_t n, std::size_t m) {
  std::uint64_t capacity = 1;
  for (std::size_t i = 0; i < n && capacity < m; ++i) capacity *= p;
  return std::min<std::size_t>(m, capacity);
}

// lex and grevlex, each with the default priority and one shuffled priority.
std::vector<std::pair<TermOrder, std::string>> order_variants(std::size_t n, ResidueSampler& rng) {
  std::vector<std::size_t> perm = shuffled(n, rng);
  return {{TermOrder::lex(n), "lex"},
          {TermOrder::lex(n, perm), "lex/shuffled"},
          {TermOrder::grevlex(n), "grevlex"},
          {TermOrder::grevlex(n, perm), "grevlex/shuffled"}};
}

std::string describe(const Variety& v, const std::string& order, std::uint64_t seed) {
  return "p=" + std::to_string(v.field().characteristic()) + " n=" + std::to_string(v.n_vars()) +
         " m=" + std::to_string(v.size()) + " " + order + " seed=" + std::to_string(seed);
}

std::vector<Instance> small_instances() {
  std::vector<Instance> out;
  ResidueSampler rng(2024);
  std::uint64_t seed = 1;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (int k = 0; k < 5; ++k, ++seed) {
        std::size_t m = feasible_m(p, n, 1 + rng.uniform(12));
        Variety v = random_variety(p, n, m, seed);
        for (auto& [order, name] : order_variants(n, rng)) {
          out.push_back({v, order, describe(v, name, seed)});
        }
      }
    }
  }
  return out;
}

std::vector<Instance> wide_instances() {
  std::vector<Instance> out;
  ResidueSampler rng(4048);
  std::uint64_t seed = 100000;
  for (std::uint32_t p : {3u, 17u}) {
    for (std::size_t n : {50u, 100u}) {
      for (std::size_t m : {5u, 10u, 15u}) {
        for (int k = 0; k < 3; ++k, ++seed) {
          Variety v = random_variety(p, n, m, seed);
          for (auto& [order, name] : order_variants(n, rng)) {
            out.push_back({v, order, describe(v, name, seed)});
          }
        }
      }
    }
  }
  return out;
}

Outcome oracle_equivalence(const std::vector<Instance>& instances) {
  Outcome out;
  std::size_t passed = 0;
  for (const Instance& inst : instances) {
    CheckResult c = check_result_equivalence(essbm(inst.v, inst.order), inst.v, inst.order);
    if (c) {
      ++passed;
    } else {
      out.fail(inst.label + ": " + c.counterexample);
    }
  }
  if (instances.size() < 500) out.fail("only " + std::to_string(instances.size()) + " instances");
  out.detail = std::to_string(passed) + "/" + std::to_string(instances.size()) + " instances";
  return out;
}

Outcome invariant_suite(const std::vector<Instance>& small, const std::vector<Instance>& wide) {
  Outcome out;
  std::size_t total = 0, passed = 0;
  for (const auto* set : {&small, &wide}) {
    for (const Instance& inst : *set) {
      ++total;
      GroebnerResult res = essbm(inst.v, inst.order);
      VerificationReport report = verify_result(res, inst.v, inst.order, false);
      bool ok = report.all_passed() && res.essential.size() <= inst.v.size() &&
                res.relations.size() + res.essential.size() == inst.v.n_vars();
      if (ok) {
        ++passed;
      } else {
        out.fail(inst.label + ": " + report.render());
      }
    }
  }
  out.detail = std::to_string(passed) + "/" + std::to_string(total) + " instances";
  return out;
}

std::vector<std::string> rendered(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const Monomial& m : ms) out.push_back(render(m));
  return out;
}

Outcome worked_examples() {
  Outcome out;
  PrimeField f3(3);
  auto expect = [&](const std::string& name, const Variety& v, const TermOrder& order,
                    const std::vector<std::string>& g, const std::vector<std::string>& sm,
                    const std::vector<std::size_t>& ev) {
    Ring ring{v.field(), order};
    GroebnerResult res = essbm(v, order);
    std::vector<std::string> want = g;
    std::sort(want.begin(), want.end());
    if (canonical_set(res.groebner_basis(), ring) != want) out.fail(name + ": G differs");
    if (rendered(res.standard) != sm) out.fail(name + ": SM differs");
    if (res.essential != ev) out.fail(name + ": EV differs");
    std::vector<std::size_t> all(v.n_vars());
    std::iota(all.begin(), all.end(), std::size_t{0});
    BasisResult oracle = buchberger_moller(project_points(v, all), order);
    if (canonical_set(oracle.basis, ring) != want) out.fail(name + ": oracle disagrees");
  };
  expect("F_3 line", Variety(f3, 1, {{0}, {1}, {2}}), TermOrder::lex(1), {"x1^3 + 2*x1"},
         {"1", "x1", "x1^2"}, {0});
  expect("diagonal", Variety(f3, 2, {{0, 0}, {1, 1}}), TermOrder::lex(2),
         {"x2^2 + 2*x2", "x1 + 2*x2"}, {"1", "x2"}, {1});
  expect("three points", Variety(f3, 3, {{0, 0, 0}, {1, 1, 0}, {2, 1, 0}}), TermOrder::lex(3),
         {"x2^2 + 2*x2", "x1*x2 + 2*x1", "x1^2 + 2*x2", "x3"}, {"1", "x2", "x1"}, {0, 1});
  out.detail = "3 fixtures";
  return out;
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = (static_cast<double>(i + j) / 2.0) + 1;
      i = j + 1;
    }
    return r;
  };
  std::vector<double> rx = ranks(xs), ry = ranks(ys);
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

constexpr std::size_t kRepeats = 20;

Outcome scaling_trend(const BenchReport& report) {
  Outcome out;
  const std::vector<std::size_t> ns{100, 150, 200, 250, 300};
  std::map<std::pair<Algorithm, std::size_t>, double> mean;
  for (const BenchSummary& s : report.summaries) {
    if (s.m == 5) mean[{s.algorithm, s.n}] = s.mean_micros;
  }
  double ess_ratio = mean[{Algorithm::essbm, 300}] / mean[{Algorithm::essbm, 100}];
  double bma_ratio = mean[{Algorithm::bma, 300}] / mean[{Algorithm::bma, 100}];
  if (!(ess_ratio <= 4.0)) out.fail("essbm t(300)/t(100) = " + fmt(ess_ratio) + " > 4");
  if (!(bma_ratio >= 1.5 * ess_ratio)) {
    out.fail("bma t(300)/t(100) = " + fmt(bma_ratio) + " < 1.5 * " + fmt(ess_ratio));
  }
  std::vector<double> xs, rel;
  for (std::size_t n : ns) {
    xs.push_back(static_cast<double>(n));
    rel.push_back(mean[{Algorithm::essbm, n}] / mean[{Algorithm::bma, n}]);
  }
  for (std::size_t i = 1; i < rel.size(); ++i) {
    if (rel[i] > rel[i - 1] * 1.10) {
      out.fail("essbm/bma rises from " + fmt(rel[i - 1]) + " to " + fmt(rel[i]) + " at n=" +
               std::to_string(ns[i]));
    }
  }
  double rho = spearman(xs, rel);
  if (!(rho < 0)) out.fail("Spearman correlation " + fmt(rho) + " is not negative");

  std::string ratios;
  for (double r : rel) ratios += (ratios.empty() ? "" : ",") + fmt(r);
  out.detail = "essbm ratio " + fmt(ess_ratio) + ", bma ratio " + fmt(bma_ratio) +
               ", essbm/bma by n [" + ratios + "], spearman " + fmt(rho);
  return out;
}

Outcome runtime_stability(const BenchReport& report) {
  Outcome out;
  double worst = 0;
  std::size_t cells = 0;
  for (const BenchSummary& s : report.summaries) {
    if (s.algorithm != Algorithm::essbm) continue;
    ++cells;
    if (s.runs != 10 || !s.cov) {
      out.fail("cell n=" + std::to_string(s.n) + " m=" + std::to_string(s.m) + " lacks 10 runs");
      continue;
    }
    worst = std::max(worst, *s.cov);
    if (*s.cov > 0.5) {
      out.fail("cell n=" + std::to_string(s.n) + " m=" + std::to_string(s.m) + " CoV " +
               fmt(*s.cov));
    }
  }
  out.detail = std::to_string(cells) + " cells, max CoV " + fmt(worst);
  return out;
}

Outcome elimination_round_trip() {
  Outcome out;
  ResidueSampler rng(606);
  std::size_t done = 0;
  std::uint64_t seed = 300000;
  while (done < 100) {
    ++seed;
    std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[rng.uniform(3)];
    std::size_t n = 3 + rng.uniform(10);
    std::size_t m = 2 + rng.uniform(6);
    Variety v = random_variety(p, n, m, seed);
    std::vector<std::size_t> perm = shuffled(n, rng);
    TermOrder order = seed % 2 ? TermOrder::lex(n, perm) : TermOrder::grevlex(n, perm);
    Ring ring{v.field(), order};
    GroebnerResult res = essbm(v, order);
    if (res.basis.empty() || res.relations.empty()) continue;

    // f = c * t * g + sum of small multiples of relations, all below LT(t * g)
    const Polynomial& g = res.basis[rng.uniform(res.basis.size())];
    std::vector<std::uint32_t> t_exp(n, 0);
    for (std::size_t var : res.essential) t_exp[var] = static_cast<std::uint32_t>(rng.uniform(2));
    Polynomial f = mul_term(g, 1 + static_cast<Residue>(rng.uniform(p - 1)),
                            Monomial::from_exponents(t_exp), ring);
    Monomial lead = leading_term(f).mono;
    for (int k = 0; k < 4; ++k) {
      const Polynomial& r = res.relations[rng.uniform(res.relations.size())];
      std::vector<std::uint32_t> q_exp(n);
      for (auto& e : q_exp) e = rng.uniform(4) == 0 ? 1 : 0;
      Monomial q = Monomial::from_exponents(q_exp);
      if (!order.less(q * leading_term(r).mono, lead)) continue;
      f = add(f, mul_term(r, 1 + static_cast<Residue>(rng.uniform(p - 1)), q, ring), ring);
    }

    Polynomial star = eliminate_inessential(f, res.relations, ring);
    std::string where = describe(v, order.name(), seed) + " f=" + render(f);
    if (!(leading_term(star) == leading_term(f))) out.fail(where + ": leading term changed");
    for (std::size_t var : support(star)) {
      if (!std::binary_search(res.essential.begin(), res.essential.end(), var)) {
        out.fail(where + ": f* mentions an inessential variable");
      }
    }
    Polynomial diff = sub(f, star, ring);
    for (const Point& pt : v.points()) {
      if (evaluate(diff, pt, v.field()) != 0) out.fail(where + ": f - f* is nonzero on V");
      if (evaluate(f, pt, v.field()) != 0) out.fail(where + ": f is not in I(V)");
    }
    ++done;
  }
  out.detail = std::to_string(done) + " polynomials";
  return out;
}

struct Run {
  int status;
  std::string stdout_text;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ESSGB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string text;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, k);
  int status = pclose(pipe);
  return {status, text};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Drops the timing columns (micros; mean_ms and cov in the summary) so two
// bench runs can be compared.
std::string without_timings(const std::string& csv) {
  std::size_t columns = csv.rfind("algorithm,p,n,m,order,runs,", 0) == 0 ? 2 : 1;
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    std::size_t cut = line.size();
    for (std::size_t k = 0; k < columns; ++k) cut = line.rfind(',', cut - 1);
    out += line.substr(0, cut) + '\n';
  }
  return out;
}

Outcome cli_determinism() {
  Outcome out;
  fs::path dir = fs::temp_directory_path() / ("essgb-acceptance-" + std::to_string(getpid()));
  fs::create_directories(dir);
  std::size_t commands = 0;
  auto twice = [&](const std::string& name, const std::string& args,
                   const std::vector<fs::path>& files,
                   const std::function<std::string(const std::string&)>& normalize) {
    ++commands;
    std::vector<std::string> outputs;
    for (int k = 0; k < 2; ++k) {
      Run r = run(args);
      std::string text = normalize(r.stdout_text);
      for (const fs::path& f : files) text += "\n--" + f.string() + "\n" + normalize(slurp(f));
      outputs.push_back(std::to_string(r.status) + "\n" + text);
    }
    if (outputs[0] != outputs[1]) out.fail(name + " output differs between runs");
    if (outputs[0].rfind("0\n", 0) != 0) out.fail(name + " exited with failure");
  };
  auto same = [](const std::string& s) { return s; };

  fs::path small = dir / "small.txt", wide = dir / "wide.txt";
  twice("gen", "gen --p 5 --n 6 --m 9 --seed 7 --out " + small.string(), {small}, same);
  twice("gen stdout", "gen --p 3 --n 120 --m 10 --seed 11", {}, same);
  twice("gen wide", "gen --p 3 --n 120 --m 10 --seed 11 --out " + wide.string(), {wide}, same);
  const std::string matrix =
      "matrix:1,1,1,1,1,1,0,0,0,0,0,1,0,1,0,0,0,0,1,0,0,0,0,0,0,0,0,0,1,0,0,0,0,1,0,0";
  for (const std::string& order : {std::string("lex"), std::string("grevlex"), matrix}) {
    for (const std::string& algo : {"essbm", "bma"}) {
      twice("gb " + order + " " + algo, "gb " + small.string() + " --order " + order +
                                            " --algorithm " + algo, {}, same);
    }
  }
  twice("gb varorder", "gb " + small.string() + " --order grevlex --varorder 3,1,2,6,5,4", {},
        same);
  twice("gb wide", "gb " + wide.string() + " --order grevlex", {}, same);
  twice("verify", "verify " + small.string(), {}, same);
  twice("verify wide", "verify " + wide.string() + " --order grevlex", {}, same);
  fs::path csv = dir / "bench.csv", summary = dir / "summary.csv";
  twice("bench",
        "bench --p 3,5 --n 20,40 --m 5 --order lex --order grevlex --seeds 3 --verify --out " +
            csv.string() + " --summary " + summary.string(),
        {csv, summary}, without_timings);

  std::error_code ignored;
  fs::remove_all(dir, ignored);
  out.detail = std::to_string(commands) + " commands run twice";
  return out;
}

}  // namespace

int main() {
  std::vector<Instance> small = small_instances();
  std::vector<Instance> wide = wide_instances();

  BenchConfig cfg{{3}, {100, 150, 200, 250, 300}, {5, 10, 15}, {"lex"}};
  cfg.seeds = 10;
  cfg.repeats = kRepeats;
  BenchReport report = run_bench(cfg);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", [&] { return oracle_equivalence(small); }},
      {"invariant suite", [&] { return invariant_suite(small, wide); }},
      {"worked examples", worked_examples},
      {"scaling trend", [&] { return scaling_trend(report); }},
      {"run-time stability", [&] { return runtime_stability(report); }},
      {"eliminate_inessential round trip", elimination_round_trip},
      {"CLI determinism", cli_determinism},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " "
              << criteria[i].first << ": " << o.detail;
    if (!o.passed) std::cout << " (first failure: " << o.first_failure << ")";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
