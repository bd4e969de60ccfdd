#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectra/permutation.hpp"

namespace spectra {

struct EstimateOptions {
  std::int64_t steps = 10'000'000;  // accelerated (Zorich) steps
  std::uint64_t seed = 1;
  int batches = 20;      // non-overlapping batch means
  int renorm_every = 8;  // QR cadence, in accelerated steps
  double burn_in_fraction = 0.01;
  bool track_full = false;  // track the whole 2g-dimensional symplectic part
};

// Weakly decreasing, first entry 1 (after enforcement). The flags record
// whether enforcement had to reorder or clamp anything.
struct SpectrumVector {
  std::vector<double> values;
  bool reordered = false;
  bool clamped = false;
};

// One (possibly pooled) estimation run.
struct RunRecord {
  std::string component_id;  // catalog id, empty for ad-hoc permutations
  std::string permutation;   // two-line text form
  std::vector<std::uint64_t> seeds;
  std::int64_t steps = 0;  // accelerated steps per seed
  int batches = 0;
  int renorm_every = 0;
  SpectrumVector estimates;
  // stderrs[0] is the standard error of the raw top exponent (the reported
  // lambda_1 is exactly 1 by normalization); entries 1.. are for lambda_i.
  std::vector<double> stderrs;
  std::vector<double> partial_sum_stderrs;  // stderr of lambda_1+..+lambda_i
  double theta1 = 0.0;  // raw top exponent in Teichmüller-time units (~1)
  double teich_time = 0.0;
  int restarts = 0;
  double wall_seconds = 0.0;
  std::string version;
  std::vector<double> full_theta;  // all 2g raw exponents when track_full

  double sum_estimate() const;
  double sum_stderr() const;  // == partial_sum_stderrs.back()
};

// Scale by the leading entry, clamp into [0,1], sort weakly decreasing.
SpectrumVector enforce_spectrum(const std::vector<double>& raw);

RunRecord estimate_spectrum(const Permutation& perm, const EstimateOptions& opt);
RunRecord estimate_spectrum(const Permutation& perm, std::int64_t steps,
                            std::uint64_t seed, int batches);

// Pool runs with identical permutation and step regimen but distinct seeds.
RunRecord merge_runs(const std::vector<RunRecord>& records);

// CSV rows "component,i,lambda_i,stderr_i" (header included).
std::string run_record_csv(const RunRecord& record);

}  // namespace spectra
