#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spectra/catalog.hpp"
#include "spectra/cover.hpp"
#include "spectra/harness.hpp"
#include "spectra/hn.hpp"
#include "spectra/json_io.hpp"
#include "spectra/version.hpp"

using namespace spectra;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_run(const RunRecord& r) {
  std::printf("%s  (%s)\n", r.component_id.c_str(), r.permutation.c_str());
  std::printf("  steps=%lld x %zu seed(s), batches=%d, restarts=%d, theta1=%.6f\n",
              static_cast<long long>(r.steps), r.seeds.size(), r.batches,
              r.restarts, r.theta1);
  for (size_t i = 0; i < r.estimates.values.size(); ++i)
    std::printf("  lambda_%zu = %.6f  (stderr %.2e)\n", i + 1,
                r.estimates.values[i], r.stderrs[i]);
  std::printf("  sum = %.6f  (stderr %.2e)\n", r.sum_estimate(), r.sum_stderr());
}

int cmd_estimate(const std::string& stratum, long long steps, std::uint64_t seed,
                 int batches, const std::string& out_path,
                 const std::string& csv_path, bool full) {
  const Component& comp = find_component(stratum);
  EstimateOptions opt;
  opt.steps = steps;
  opt.seed = seed;
  opt.batches = batches;
  opt.track_full = full;
  RunRecord rec = estimate_spectrum(comp.representative, opt);
  rec.component_id = comp.id();
  print_run(rec);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    out << run_record_to_json(rec);
    std::printf("wrote %s\n", out_path.c_str());
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    out << run_record_csv(rec);
    std::printf("wrote %s\n", csv_path.c_str());
  }
  return 0;
}

int cmd_wspec(const std::string& stratum) {
  StratumRef ref = parse_stratum_text(stratum);
  if (ref.is_quadratic) {
    WSpectrum w = w_hyperelliptic(QStratum::of(ref.orders));
    std::printf("%s: w = %s  (sum = %s)\n", stratum.c_str(), w.str().c_str(),
                w.sum().str().c_str());
    return 0;
  }
  const Component& comp = find_component(stratum);
  WSpectrum w = w_catalog(comp);
  if (w.all_exact()) {
    std::printf("%s: w = %s  (sum = %s, bound (g+1)/2 %s)\n", comp.id().c_str(),
                w.str().c_str(), w.sum().str().c_str(),
                sum_bound_check(w, comp.stratum.genus()) ? "ok" : "VIOLATED");
    for (const SimplicityGap& gap : simplicity_gap(w))
      std::printf("  gap at %d: w_%d - w_%d = %s%s\n", gap.index, gap.index,
                  gap.index + 1, gap.gap.str().c_str(),
                  gap.forced ? "  (forced by the conjecture)" : "");
  } else {
    std::printf("%s: w %s  (upper bounds)\n", comp.id().c_str(), w.str().c_str());
  }
  return 0;
}

int cmd_verify(int genus, long long steps, std::vector<std::uint64_t> seeds,
               int batches, const std::string& report_dir) {
  if (seeds.empty()) seeds = {1, 2, 3, 4, 5};
  std::vector<Verdict> verdicts;
  int failures = 0;
  for (const Component* comp : components_of_genus(genus)) {
    Verdict v = verify_component(*comp, steps, seeds, batches);
    std::printf("%-16s %s  (sum residual %.2e, tol %.2e)\n",
                v.component_id.c_str(), v.status.c_str(), v.sum_residual,
                v.dominance_tol);
    if (v.w_exact && v.status != "dominates") ++failures;
    verdicts.push_back(std::move(v));
  }
  if (!report_dir.empty()) {
    ReportPaths paths = write_report(verdicts, report_dir);
    std::printf("report: %s, %s, %zu svg file(s)\n", paths.json.c_str(),
                paths.csv.c_str(), paths.svgs.size());
  }
  return failures == 0 ? 0 : 1;
}

int cmd_polygon(const std::string& lambda_path, const std::string& w_arg,
                const std::string& svg_path, const std::string& csv_path) {
  RunRecord rec = run_record_from_json(slurp(lambda_path));
  const std::string id = (w_arg == "auto") ? rec.component_id : w_arg;
  if (id.empty())
    throw Error("run has no component id; pass --w <stratum> explicitly");
  const Component& comp = find_component(id);
  Verdict v = verdict_from_run(comp, rec);
  std::printf("%s: %s\n", v.component_id.c_str(), v.status.c_str());
  if (!csv_path.empty()) {
    const int g = int(rec.estimates.values.size());
    Eigen::VectorXd lambda(g);
    Vec<Rational> w(g);
    for (int i = 0; i < g; ++i) {
      lambda[i] = rec.estimates.values[i];
      w[i] = v.w.values[i];
    }
    std::ofstream out(csv_path, std::ios::binary);
    out << "# P_lambda\n" << polygon_csv(polygon_of<double>(lambda));
    out << "# P_w\n" << polygon_csv(polygon_of<Rational>(w));
    std::printf("wrote %s\n", csv_path.c_str());
  }
  if (!svg_path.empty()) {
    std::vector<Verdict> one{v};
    // reuse the report writer for a single overlay
    std::string dir = svg_path + ".tmp.d";
    ReportPaths paths = write_report(one, dir);
    std::ifstream in(paths.svgs[0], std::ios::binary);
    std::ofstream out(svg_path, std::ios::binary);
    out << in.rdbuf();
    std::filesystem::remove_all(dir);
    std::printf("wrote %s\n", svg_path.c_str());
  }
  return 0;
}

int cmd_cover(const std::string& q_text, const std::string& out_path) {
  StratumRef ref = parse_stratum_text(q_text);
  if (!ref.is_quadratic) throw Error("cover expects a Q(...) stratum");
  QStratum q = QStratum::of(ref.orders);
  WSpectrum w = w_hyperelliptic(q);
  CoverReport rep = cover_report(q, w.sum());
  std::printf("%s", rep.str().c_str());
  std::printf("w = %s\n", w.str().c_str());
  WSplitResult split = split_w(q, w);
  for (const WSplit& s : split.splits) {
    std::string plus, minus;
    for (const Rational& r : s.w_plus) plus += (plus.empty() ? "" : ", ") + r.str();
    for (const Rational& r : s.w_minus) minus += (minus.empty() ? "" : ", ") + r.str();
    std::printf("w^+ = (%s), w^- = (%s)%s\n", plus.c_str(), minus.c_str(),
                split.ambiguous ? "  [ambiguous]" : "");
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    out << cover_report_to_json(rep, &w, &split);
    std::printf("wrote %s\n", out_path.c_str());
  }
  return 0;
}

int cmd_sv(const std::string& stratum, const std::string& from_path) {
  StratumRef ref = parse_stratum_text(stratum);
  Stratum s = Stratum::of(ref.orders);
  RunRecord rec = run_record_from_json(slurp(from_path));
  SiegelVeech sv = siegel_veech_from_sum(s, rec.sum_estimate(), rec.sum_stderr());
  std::printf("%s: kappa = %s, measured sum = %.6f (stderr %.2e)\n",
              s.str().c_str(), sv.kappa.str().c_str(), rec.sum_estimate(),
              rec.sum_stderr());
  std::printf("c_area = %.6f +- %.2e%s\n", sv.c_area, sv.c_area_stderr,
              sv.negative_estimate ? "  [negative estimate]" : "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyapunov spectra, Harder-Narasimhan slopes and polygon checks"};
  app.set_version_flag("--version", kToolkitVersion);
  app.require_subcommand(1);

  std::string stratum, out_path, csv_path, report_dir = "reports";
  std::string lambda_path, w_arg = "auto", svg_path, q_text, from_path;
  long long steps = 10'000'000;
  std::uint64_t seed = 1;
  int batches = 20, genus = 3;
  bool full = false;
  std::vector<std::uint64_t> seeds;

  auto* est = app.add_subcommand("estimate", "Monte-Carlo Lyapunov spectrum");
  est->add_option("--stratum", stratum, "component, e.g. \"H(4)^hyp\"")->required();
  est->add_option("--steps", steps, "accelerated induction steps");
  est->add_option("--seed", seed, "rng seed");
  est->add_option("--batches", batches, "batch-means batches");
  est->add_option("--out", out_path, "write the run record as JSON");
  est->add_option("--csv", csv_path, "write (component, lambda_i, stderr) CSV rows");
  est->add_flag("--full", full, "track the full 2g-dimensional spectrum");

  auto* wspec = app.add_subcommand("wspec", "exact slope spectrum / bounds");
  wspec->add_option("--stratum", stratum, "\"H(4)^hyp\" or \"Q(1,2,-1,-1,-1)\"")
      ->required();

  auto* verify = app.add_subcommand("verify", "conjecture check per component");
  verify->add_option("--genus", genus, "catalog genus to verify")->required();
  verify->add_option("--steps", steps, "accelerated steps per seed");
  verify->add_option("--seeds", seeds, "comma-separated seeds")->delimiter(',');
  verify->add_option("--batches", batches, "batch-means batches");
  verify->add_option("--report-dir", report_dir, "output directory for reports");

  auto* poly = app.add_subcommand("polygon", "polygon overlay for a stored run");
  poly->add_option("--lambda", lambda_path, "run record JSON")->required();
  poly->add_option("--w", w_arg, "\"auto\" or an explicit component id");
  poly->add_option("--svg", svg_path, "output SVG path");
  poly->add_option("--csv", csv_path, "output CSV vertex lists");

  auto* cover = app.add_subcommand("cover", "double-cover slope bookkeeping");
  cover->add_option("--q", q_text, "quadratic stratum, e.g. \"Q(1,2,-1,-1,-1)\"")
      ->required();
  cover->add_option("--out", out_path, "write the cover report as JSON");

  auto* sv = app.add_subcommand("sv", "Siegel-Veech constant from a measured sum");
  sv->add_option("--stratum", stratum, "abelian stratum, e.g. \"H(4)\"")->required();
  sv->add_option("--from", from_path, "run record JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (est->parsed())
      return cmd_estimate(stratum, steps, seed, batches, out_path, csv_path, full);
    if (wspec->parsed()) return cmd_wspec(stratum);
    if (verify->parsed()) return cmd_verify(genus, steps, seeds, batches, report_dir);
    if (poly->parsed()) return cmd_polygon(lambda_path, w_arg, svg_path, csv_path);
    if (cover->parsed()) return cmd_cover(q_text, out_path);
    if (sv->parsed()) return cmd_sv(stratum, from_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
