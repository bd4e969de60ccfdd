#include "spectra/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "spectra/json_io.hpp"
#include "spectra/svg.hpp"

namespace spectra {

int worker_count() {
  if (const char* env = std::getenv("SPECTRA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

RunRecord pooled_estimate(const Component& comp, std::int64_t steps,
                          const std::vector<std::uint64_t>& seeds, int batches) {
  if (seeds.empty()) throw Error("pooled_estimate: need at least one seed");
  std::vector<RunRecord> runs(seeds.size());
  const int workers = std::min<int>(worker_count(), int(seeds.size()));
  std::mutex mu;
  size_t next = 0;
  auto work = [&] {
    for (;;) {
      size_t mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= seeds.size()) return;
        mine = next++;
      }
      runs[mine] = estimate_spectrum(comp.representative, steps, seeds[mine], batches);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  RunRecord pooled = runs.size() == 1 ? runs[0] : merge_runs(runs);
  pooled.component_id = comp.id();
  return pooled;
}

namespace {

std::optional<Rational> kz_bound_for(const Component& comp) {
  if (comp.label != ComponentLabel::hyp) return std::nullopt;
  const int g = comp.stratum.genus();
  if (comp.stratum.orders == std::vector<int>{2 * g - 2})
    return Rational(2 * g - 3, 2 * g - 1);
  if (comp.stratum.orders == std::vector<int>{g - 1, g - 1})
    return Rational(2 * g - 2, 2 * g);
  return std::nullopt;
}

}  // namespace

Verdict verdict_from_run(const Component& comp, const RunRecord& run) {
  Verdict v;
  v.component_id = comp.id();
  v.run = run;
  v.w = w_catalog(comp);
  v.w_exact = v.w.all_exact();
  v.kz_limit_bound = kz_bound_for(comp);

  const int g = int(run.estimates.values.size());
  if (int(v.w.values.size()) != g)
    throw Error("verdict: spectrum sizes disagree for " + comp.id());

  v.dominance_tol = 0.0;
  for (double se : run.partial_sum_stderrs)
    v.dominance_tol = std::max(v.dominance_tol, 3.0 * se);

  Eigen::VectorXd lambda(g), w(g);
  for (int i = 0; i < g; ++i) {
    lambda[i] = run.estimates.values[i];
    w[i] = v.w.values[i].to_double();
  }

  // tail-sum form: sum_{j>=i} lambda_j <= sum_{j>=i} w_j for i = 2..g
  auto tail_ok = [&](double tol) {
    double tl = 0.0, tw = 0.0;
    for (int i = g - 1; i >= 1; --i) {
      tl += lambda[i];
      tw += w[i];
      if (tl > tw + tol) return false;
    }
    return true;
  };

  if (v.w_exact) {
    DominanceVerdict<double> dom = dominates<double>(lambda, w, v.dominance_tol);
    v.partial_form = dom.kind;
    v.partial_fail_index = dom.index;
    const double sum_tol =
        std::max(v.dominance_tol, 3.0 * run.partial_sum_stderrs.back());
    v.sum_residual = std::abs(lambda.sum() - w.sum());
    v.sum_within_tol = v.sum_residual <= sum_tol;
    v.tail_form_ok = tail_ok(v.dominance_tol) && v.sum_within_tol;
    const bool partial_ok = bool(dom);
    v.forms_agree = partial_ok == v.tail_form_ok;
    // the two forms are algebraically equivalent given matching totals, so
    // a disagreement is a tolerance artifact and counts as inconclusive
    v.status = (partial_ok && v.tail_form_ok) ? "dominates"
                                              : "inconclusive at current precision";
    v.zero_w_flag_ok = true;
    for (int i = 0; i < g; ++i)
      if (v.w.values[i] == Rational(0) && lambda[i] > 3.0 * run.stderrs[i])
        v.zero_w_flag_ok = false;
  } else {
    // only upper bounds are known: the meaningful direction is the
    // tail-sum comparison against the bound tails
    v.partial_form = Dominance::fails_at;
    v.tail_form_ok = tail_ok(v.dominance_tol);
    v.forms_agree = true;
    v.sum_residual = 0.0;
    v.sum_within_tol = false;
    v.status = "tail-sum bound check only";
  }
  return v;
}

Verdict verify_component(const Component& comp, std::int64_t steps,
                         const std::vector<std::uint64_t>& seeds, int batches) {
  return verdict_from_run(comp, pooled_estimate(comp, steps, seeds, batches));
}

std::vector<SimplicityGap> simplicity_gap(const WSpectrum& w) {
  if (!w.all_exact()) throw BoundsOnly("simplicity_gap needs exact slopes");
  const int g = int(w.values.size());
  std::vector<SimplicityGap> out;
  Rational partial(0);
  for (int i = 1; i <= g - 1; ++i) {
    partial += w.values[i - 1];
    if (!(w.values[i - 1] > w.values[i])) continue;
    // lower bound on lambda_i from the partial sums and lambda_j <= 1
    const Rational lower = partial - Rational(i - 1);
    // upper bound on lambda_{i+1} from the tail sums and lambda_j >= 0
    Rational upper(0);
    for (int j = i; j < g; ++j) upper += w.values[j];
    out.push_back({i, w.values[i - 1] - w.values[i], lower > upper});
  }
  return out;
}

std::vector<KzLimitRow> kz_limit_table(int g_max) {
  if (g_max < 2) throw Error("kz_limit_table needs g_max >= 2");
  std::vector<KzLimitRow> rows;
  for (int g = 2; g <= g_max; ++g) {
    rows.push_back({g, "H^hyp(2g-2)", 2 * g - 1, Rational(2 * g - 3, 2 * g - 1)});
    rows.push_back({g, "H^hyp(g-1,g-1)", 2 * g, Rational(2 * g - 2, 2 * g)});
  }
  return rows;
}

Rational siegel_veech_kappa(const Stratum& stratum) {
  Rational k(0);
  for (int m : stratum.orders) k += Rational(std::int64_t(m) * (m + 2), m + 1);
  return k * Rational(1, 12);
}

SiegelVeech siegel_veech_from_sum(const Stratum& stratum, double measured_sum,
                                  double sum_stderr) {
  constexpr double kPiSq = 9.869604401089358;  // pi^2 at double precision
  SiegelVeech sv;
  sv.kappa = siegel_veech_kappa(stratum);
  sv.c_area = 3.0 * (measured_sum - sv.kappa.to_double()) / kPiSq;
  sv.c_area_stderr = 3.0 * sum_stderr / kPiSq;
  sv.negative_estimate = sv.c_area < 0.0;
  return sv;
}

namespace {

std::string sanitize(const std::string& id) {
  std::string out;
  for (char c : id) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::string verdict_svg(const Verdict& v) {
  const int g = int(v.run.estimates.values.size());
  Eigen::VectorXd lambda(g), w(g);
  for (int i = 0; i < g; ++i) {
    lambda[i] = v.run.estimates.values[i];
    w[i] = v.w.values[i].to_double();
  }
  LabelledPolygon pl, pw;
  pl.polygon = polygon_of<double>(lambda);
  pw.polygon = polygon_of<double>(w);
  pl.name = "P_lambda";
  pw.name = "P_w";
  pl.color = "#1f77b4";
  pw.color = "#d62728";
  char buf[64];
  pl.vertex_labels.push_back("0");
  pw.vertex_labels.push_back("0");
  double acc = 0.0;
  Rational wacc(0);
  for (int i = 0; i < g; ++i) {
    acc += lambda[i];
    std::snprintf(buf, sizeof buf, "%.4f", acc);
    pl.vertex_labels.push_back(buf);
    wacc += v.w.values[i];
    pw.vertex_labels.push_back((v.w.is_bound[i] ? "<=" : "") + wacc.str());
  }
  return polygon_overlay_svg(pl, pw);
}

}  // namespace

ReportPaths write_report(const std::vector<Verdict>& verdicts,
                         const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  ReportPaths paths;

  paths.json = (fs::path(directory) / "report.json").string();
  {
    std::ofstream out(paths.json, std::ios::binary);
    out << verdicts_to_json(verdicts);
  }

  paths.csv = (fs::path(directory) / "summary.csv").string();
  {
    std::ofstream out(paths.csv, std::ios::binary);
    out << "component,i,lambda,stderr,w,w_is_bound,status\n";
    for (const Verdict& v : verdicts) {
      for (size_t i = 0; i < v.run.estimates.values.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", v.run.estimates.values[i]);
        out << '"' << v.component_id << "\"," << (i + 1) << ',' << buf << ',';
        std::snprintf(buf, sizeof buf, "%.4g", v.run.stderrs[i]);
        out << buf << ',' << v.w.values[i].str() << ','
            << (v.w.is_bound[i] ? 1 : 0) << ",\"" << v.status << "\"\n";
      }
    }
  }

  for (const Verdict& v : verdicts) {
    std::string path =
        (fs::path(directory) / (sanitize(v.component_id) + ".svg")).string();
    std::ofstream out(path, std::ios::binary);
    out << verdict_svg(v);
    paths.svgs.push_back(std::move(path));
  }
  return paths;
}

}  // namespace spectra
