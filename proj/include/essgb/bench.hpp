#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace essgb {

enum class Algorithm { essbm, bma };

std::string to_string(Algorithm a);

struct BenchRecord {
  Algorithm algorithm;
  std::uint32_t p;
  std::size_t n;
  std::size_t m;
  std::string order;
  std::uint64_t seed;
  std::uint64_t micros;
};

struct BenchConfig {
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ms;
  std::vector<std::string> orders;  // term order specs, see TermOrder::parse
  std::size_t seeds = 10;
  std::uint64_t base_seed = 1;      // seeds used: base_seed .. base_seed + seeds - 1
  std::size_t repeats = 1;          // timed calls per instance; the fastest is recorded
  bool verify = false;
  std::size_t jobs = 1;
};

/// Mean and coefficient of variation of one (algorithm, cell) group.
struct BenchSummary {
  Algorithm algorithm;
  std::uint32_t p;
  std::size_t n;
  std::size_t m;
  std::string order;
  std::size_t runs;
  double mean_micros;
  std::optional<double> cov;  // sample std / mean; absent for a single run
};

struct BenchReport {
  std::vector<BenchRecord> records;  // cell-major, then seed, then essbm before bma
  std::vector<BenchSummary> summaries;
  std::vector<std::string> failures;  // verification failures (with --verify)
};

/// Times EssBM and Buchberger-Moeller on one random variety per (cell, seed).
/// Every cell is validated (m <= p^n, parsable order) before any timing, and
/// one untimed warm-up run precedes the measurements. With jobs > 1 cells
/// run concurrently and timings include contention.
BenchReport run_bench(const BenchConfig& config);

/// `algorithm,p,n,m,order,seed,micros` header plus one row per record.
std::string render_csv(const std::vector<BenchRecord>& records);

/// `algorithm,p,n,m,order,runs,mean_ms,cov` with the mean in milliseconds to
/// three decimals and an empty cov for single runs.
std::string render_summary(const std::vector<BenchSummary>& summaries);

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

}  // namespace essgb
