#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectra/catalog.hpp"
#include "spectra/hn.hpp"
#include "spectra/lyapunov.hpp"
#include "spectra/polygon.hpp"

namespace spectra {

// Outcome of the conjecture check lambda(C) >= w(C) for one component.
// Verdicts on whole-stratum estimates lean on the continuity assumption
// (non-varying w shared by the Teichmüller curves of the component), which
// `basis` keeps explicit.
struct Verdict {
  std::string component_id;
  RunRecord run;
  WSpectrum w;
  bool w_exact = false;
  std::string basis = "component-level (continuity assumption)";

  double dominance_tol = 0.0;  // 3 * max stderr of the partial sums
  Dominance partial_form = Dominance::dominates;
  int partial_fail_index = -1;
  bool tail_form_ok = false;
  bool forms_agree = false;
  double sum_residual = 0.0;  // |sum lambda - sum w| (exact w only)
  bool sum_within_tol = false;
  bool zero_w_flag_ok = true;  // w_i = 0 must force lambda_i ~ 0
  std::optional<Rational> kz_limit_bound;
  std::string status;  // "dominates" | "inconclusive at current precision" |
                       // "tail-sum bound check only"

  bool ok() const { return status == "dominates" || tail_form_ok; }
};

// Pooled estimation over one seed per run, scheduled on up to
// SPECTRA_THREADS workers (default: hardware concurrency).
RunRecord pooled_estimate(const Component& comp, std::int64_t steps,
                          const std::vector<std::uint64_t>& seeds, int batches = 20);

Verdict verify_component(const Component& comp, std::int64_t steps,
                         const std::vector<std::uint64_t>& seeds, int batches = 20);

// Evaluate the verdict from an existing pooled run (no estimation).
Verdict verdict_from_run(const Component& comp, const RunRecord& run);

// Indices where the slope spectrum strictly drops. `forced` marks the gaps
// the conjecture pins down on its own: the partial-sum lower bound on
// lambda_i (with lambda_j <= 1) exceeding the tail-sum upper bound on
// lambda_{i+1} (with lambda_j >= 0).
struct SimplicityGap {
  int index;  // between lambda_index and lambda_{index+1}, 1-based
  Rational gap;
  bool forced;
};
std::vector<SimplicityGap> simplicity_gap(const WSpectrum& w);

// Lower bounds (N-2)/N on lambda_2 for the two hyperelliptic families.
struct KzLimitRow {
  int genus;
  std::string family;  // "H^hyp(2g-2)" or "H^hyp(g-1,g-1)"
  int modulus;         // N
  Rational bound;      // (N-2)/N
};
std::vector<KzLimitRow> kz_limit_table(int g_max);

// Inversion of the sum formula: measured_sum = kappa + (pi^2/3) c_area.
struct SiegelVeech {
  Rational kappa;
  double c_area = 0.0;
  double c_area_stderr = 0.0;
  bool negative_estimate = false;
};
Rational siegel_veech_kappa(const Stratum& stratum);
SiegelVeech siegel_veech_from_sum(const Stratum& stratum, double measured_sum,
                                  double sum_stderr);

// Worker cap from SPECTRA_THREADS (falls back to hardware concurrency).
int worker_count();

// Report files: JSON archive, CSV summary, per-component SVG polygon
// overlays. Deterministic bytes given the same verdicts.
struct ReportPaths {
  std::string json;
  std::string csv;
  std::vector<std::string> svgs;
};
ReportPaths write_report(const std::vector<Verdict>& verdicts,
                         const std::string& directory);

}  // namespace spectra
