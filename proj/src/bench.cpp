#include "essgb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "essgb/errors.hpp"
#include "essgb/essbm.hpp"
#include "essgb/verify.hpp"

namespace essgb {

std::string to_string(Algorithm a) { return a == Algorithm::essbm ? "essbm" : "bma"; }

namespace {

struct Task {
  std::uint32_t p;
  std::size_t n;
  std::size_t m;
  std::string order;
  std::uint64_t seed;
};

template <typename F>
std::uint64_t time_nanos(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

// Runs both algorithms on the task's variety; appends verification failures.
std::pair<BenchRecord, BenchRecord> run_task(const Task& task, bool verify, std::size_t repeats,
                                             std::vector<std::string>& failures) {
  Variety v = random_variety(task.p, task.n, task.m, task.seed);
  TermOrder order = TermOrder::parse(task.order, task.n);
  PointSet full = project_points(v, variable_rank(order));

  GroebnerResult ess;
  BasisResult bma;
  std::uint64_t t_ess = UINT64_MAX, t_bma = UINT64_MAX;
  for (std::size_t r = 0; r < repeats; ++r) {
    t_ess = std::min(t_ess, time_nanos([&] { ess = essbm(v, order); }));
    t_bma = std::min(t_bma, time_nanos([&] { bma = buchberger_moller(full, order); }));
  }
  t_ess /= 1000;
  t_bma /= 1000;

  if (verify) {
    std::string where = "p=" + std::to_string(task.p) + " n=" + std::to_string(task.n) +
                        " m=" + std::to_string(task.m) + " order=" + task.order +
                        " seed=" + std::to_string(task.seed) + ": ";
    VerificationReport report = verify_result(ess, v, order, /*with_oracle=*/false);
    for (const CheckResult& c : report.checks) {
      if (!c.passed) failures.push_back(where + c.name + ": " + c.counterexample);
    }
    Ring ring{v.field(), order};
    if (canonical_set(ess.groebner_basis(), ring) != canonical_set(bma.basis, ring)) {
      failures.push_back(where + "essbm and bma bases differ");
    }
  }
  return {BenchRecord{Algorithm::essbm, task.p, task.n, task.m, task.order, task.seed, t_ess},
          BenchRecord{Algorithm::bma, task.p, task.n, task.m, task.order, task.seed, t_bma}};
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (config.seeds == 0) throw InputError("bench needs at least one seed");
  if (config.repeats == 0) throw InputError("bench needs at least one repeat");
  std::vector<Task> tasks;
  for (std::uint32_t p : config.primes) {
    PrimeField field(p);
    for (std::size_t n : config.ns) {
      for (std::size_t m : config.ms) {
        std::uint64_t capacity = 1;
        for (std::size_t i = 0; i < n && capacity < m; ++i) capacity *= p;
        if (n == 0 || m == 0 || capacity < m) {
          throw InputError("infeasible bench cell p=" + std::to_string(p) +
                           " n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
        for (const std::string& spec : config.orders) {
          TermOrder::parse(spec, n);
          for (std::size_t k = 0; k < config.seeds; ++k) {
            tasks.push_back({p, n, m, spec, config.base_seed + k});
          }
        }
      }
    }
  }

  BenchReport report;
  if (tasks.empty()) return report;
  {
    std::vector<std::string> ignored;
    run_task(tasks.front(), false, config.repeats, ignored);  // warm-up
  }

  // Tasks are cell-major; run them seed-major so slow drift in machine speed
  // spreads over all cells instead of biasing the later ones.
  std::vector<std::size_t> schedule;
  for (std::size_t k = 0; k < config.seeds; ++k) {
    for (std::size_t c = 0; c < tasks.size() / config.seeds; ++c) {
      schedule.push_back(c * config.seeds + k);
    }
  }

  std::vector<std::pair<BenchRecord, BenchRecord>> results(tasks.size());
  std::vector<std::vector<std::string>> failures(tasks.size());
  std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  if (jobs == 1) {
    for (std::size_t i : schedule) {
      results[i] = run_task(tasks[i], config.verify, config.repeats, failures[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t j; (j = next++) < schedule.size();) {
          std::size_t i = schedule[j];
          try {
            results[i] = run_task(tasks[i], config.verify, config.repeats, failures[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : workers) t.join();
    if (error) std::rethrow_exception(error);
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    report.records.push_back(results[i].first);
    report.records.push_back(results[i].second);
    for (std::string& f : failures[i]) report.failures.push_back(std::move(f));
  }
  report.summaries = summarize(report.records);
  return report;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<std::uint32_t, std::size_t, std::size_t, std::string, int>;
  std::vector<Key> order_seen;
  std::map<Key, std::vector<double>> groups;
  for (const BenchRecord& r : records) {
    Key key{r.p, r.n, r.m, r.order, static_cast<int>(r.algorithm)};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order_seen.push_back(key);
    it->second.push_back(static_cast<double>(r.micros));
  }
  std::vector<BenchSummary> out;
  for (const Key& key : order_seen) {
    const std::vector<double>& xs = groups[key];
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    std::optional<double> cov;
    if (xs.size() > 1 && mean > 0) {
      double ss = 0;
      for (double x : xs) ss += (x - mean) * (x - mean);
      cov = std::sqrt(ss / static_cast<double>(xs.size() - 1)) / mean;
    }
    auto [p, n, m, order, algorithm] = key;
    out.push_back({static_cast<Algorithm>(algorithm), p, n, m, order, xs.size(), mean, cov});
  }
  return out;
}

namespace {

// Order specs may contain commas (matrix orders); quote those fields.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace

std::string render_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "algorithm,p,n,m,order,seed,micros\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.algorithm) << ',' << r.p << ',' << r.n << ',' << r.m << ','
        << csv_field(r.order) << ',' << r.seed << ',' << r.micros << '\n';
  }
  return out.str();
}

std::string render_summary(const std::vector<BenchSummary>& summaries) {
  std::ostringstream out;
  out << "algorithm,p,n,m,order,runs,mean_ms,cov\n";
  for (const BenchSummary& s : summaries) {
    out << to_string(s.algorithm) << ',' << s.p << ',' << s.n << ',' << s.m << ','
        << csv_field(s.order) << ',' << s.runs << ',' << fixed(s.mean_micros / 1000.0, 3) << ','
        << (s.cov ? fixed(*s.cov, 4) : "") << '\n';
  }
  return out.str();
}

}  // namespace essgb
