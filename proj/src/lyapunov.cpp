#include "spectra/lyapunov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "spectra/iet.hpp"
#include "spectra/version.hpp"

namespace spectra {

namespace {

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;  // [0,1)
}

double gaussian(std::mt19937_64& rng) {
  double u1 = 1.0 - uniform01(rng);
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Uniform on the simplex via normalized exponentials.
Eigen::VectorXd random_simplex(int n, std::mt19937_64& rng) {
  Eigen::VectorXd len(n);
  for (int i = 0; i < n; ++i) len[i] = -std::log(1.0 - uniform01(rng));
  len /= len.sum();
  return len;
}

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// The induction walker used by the estimator. Tracked cohomology vectors
// (columns of V, rows indexed by label) are transported by the transposed
// cocycle: one elementary move with winner w and loser l sends
// V.row(l) += V.row(w), which is v <- M^T v for M = I + E_{w,l}.
struct Walker {
  int n;
  std::vector<int> top, bottom;
  Eigen::VectorXd len;
  RowMat V;
  double time = 0.0;  // accumulated Teichmüller time

  Walker(const Permutation& p, Eigen::VectorXd lengths, RowMat basis)
      : n(p.size()), top(p.top()), bottom(p.bottom()), len(std::move(lengths)),
        V(std::move(basis)) {}

  // One accelerated step. Same-type runs can be astronomically long (the
  // acceleration counts have a heavy tail), so whole cycles through the
  // segment after the winner are applied in one shot: a full cycle of m
  // moves restores the arrangement, subtracts the segment sum from the
  // winner's length, and adds the winner's tracked row once to every
  // segment row. The winner's own length and row are untouched until the
  // run ends, which is what makes the batching exact.
  void step() {
    const int last_top = top.back();
    const int last_bottom = bottom.back();
    double lt = len[last_top];
    double lb = len[last_bottom];
    if (std::abs(lt - lb) <= kTieRelTol * std::max(lt, lb))
      throw TieError("competing lengths tie within tolerance");
    int w;
    std::vector<int>* loser_row;
    if (lt > lb) {
      w = last_top;
      loser_row = &bottom;
    } else {
      w = last_bottom;
      loser_row = &top;
    }
    double lw = len[w];
    const int pw = int(std::find(loser_row->begin(), loser_row->end(), w) -
                       loser_row->begin());
    const int m = int(loser_row->size()) - 1 - pw;  // segment after the winner
    if (m <= 0) throw TieError("degenerate arrangement");
    int phase = m;  // moves left until the arrangement recurs
    while (true) {
      if (phase == m) {
        double seg_sum = 0.0, seg_max = 0.0;
        for (int k = pw + 1; k < int(loser_row->size()); ++k) {
          const double v = len[(*loser_row)[k]];
          seg_sum += v;
          seg_max = std::max(seg_max, v);
        }
        if (seg_sum > 0.0 && lw > seg_sum + seg_max) {
          const double q = std::floor((lw - seg_max) / seg_sum);
          if (q >= 1.0) {
            lw -= q * seg_sum;
            for (int k = pw + 1; k < int(loser_row->size()); ++k)
              V.row((*loser_row)[k]) += q * V.row(w);
          }
        }
      }
      const int l = loser_row->back();
      const double ll = len[l];
      if (std::abs(lw - ll) <= kTieRelTol * std::max(lw, ll))
        throw TieError("competing lengths tie within tolerance");
      if (lw < ll) break;
      lw -= ll;
      V.row(l) += V.row(w);
      loser_row->pop_back();
      loser_row->insert(loser_row->begin() + pw + 1, l);
      if (--phase == 0) phase = m;
      if (!(lw > 0.0)) throw TieError("winner length underflow");
    }
    len[w] = lw;
    const double total = len.sum();
    time += -std::log(total);
    len /= total;
    if (!(len.minCoeff() > 0.0)) throw TieError("interval length underflow");
  }
};

}  // namespace

double RunRecord::sum_estimate() const {
  return std::accumulate(estimates.values.begin(), estimates.values.end(), 0.0);
}

double RunRecord::sum_stderr() const {
  return partial_sum_stderrs.empty() ? 0.0 : partial_sum_stderrs.back();
}

SpectrumVector enforce_spectrum(const std::vector<double>& raw) {
  if (raw.empty()) throw Error("enforce_spectrum: empty input");
  if (!(raw[0] > 0.0)) throw ZeroLeadError("leading entry must be positive");
  SpectrumVector out;
  out.values.resize(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    double v = raw[i] / raw[0];
    if (v < 0.0 || v > 1.0) {
      v = std::clamp(v, 0.0, 1.0);
      out.clamped = true;
    }
    out.values[i] = v;
  }
  if (!std::is_sorted(out.values.begin(), out.values.end(), std::greater<double>())) {
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    out.reordered = true;
  }
  return out;
}

RunRecord estimate_spectrum(const Permutation& perm, std::int64_t steps,
                            std::uint64_t seed, int batches) {
  EstimateOptions opt;
  opt.steps = steps;
  opt.seed = seed;
  opt.batches = batches;
  return estimate_spectrum(perm, opt);
}

RunRecord estimate_spectrum(const Permutation& perm, const EstimateOptions& opt) {
  if (!perm.irreducible())
    throw ReducibleError("estimate_spectrum requires an irreducible permutation");
  if (opt.steps < 10'000) throw Error("estimate_spectrum: need at least 1e4 steps");
  if (opt.batches < 10) throw Error("estimate_spectrum: need at least 10 batches");
  const auto t0 = std::chrono::steady_clock::now();

  const int n = perm.size();
  const Mat64 omega_int = intersection_form(perm);
  const Eigen::MatrixXd omega = omega_int.cast<double>();
  const int two_g = exact_rank(omega_int);
  if (two_g < 2 || two_g % 2 != 0)
    throw Error("estimate_spectrum: intersection form has invalid rank");
  const int g = two_g / 2;
  const int tracked = opt.track_full ? two_g : g;

  const int R = opt.renorm_every;
  const std::int64_t total_events = opt.steps / R;
  const std::int64_t burn_events =
      std::max<std::int64_t>(1, std::int64_t(double(total_events) * opt.burn_in_fraction));
  const std::int64_t measured_events = total_events - burn_events;
  if (measured_events < 2 * opt.batches)
    throw Error("estimate_spectrum: too few renormalization events per batch");

  std::mt19937_64 rng(opt.seed);
  int restarts = 0;

  Eigen::VectorXd logsum;
  double measured_time = 0.0;
  std::vector<Eigen::VectorXd> batch_logs;  // cumulative snapshots
  std::vector<double> batch_times;

  for (;;) {  // restart loop (ties / degenerate bases are measure-zero)
    try {
      // Basis inside the symplectic subspace Im(omega).
      RowMat gauss(n, tracked);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < tracked; ++j) gauss(i, j) = gaussian(rng);
      RowMat basis = omega * gauss;
      {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(basis)};
        basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, tracked);
      }

      Walker walker(perm, random_simplex(n, rng), std::move(basis));
      logsum = Eigen::VectorXd::Zero(tracked);
      batch_logs.clear();
      batch_times.clear();
      double time_at_reset = 0.0;
      std::int64_t next_batch = 0;

      for (std::int64_t event = 0; event < total_events; ++event) {
        for (int s = 0; s < R; ++s) walker.step();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(walker.V)};
        for (int j = 0; j < tracked; ++j) {
          const double d = std::abs(qr.matrixQR()(j, j));
          if (!(d > 1e-280))
            throw DegenerateBasisError("rank collapse during renormalization");
          logsum[j] += std::log(d);
        }
        walker.V = qr.householderQ() * Eigen::MatrixXd::Identity(n, tracked);

        if (event + 1 == burn_events) {
          logsum.setZero();
          time_at_reset = walker.time;
          next_batch = 1;
          continue;
        }
        if (event + 1 > burn_events) {
          const std::int64_t done = event + 1 - burn_events;
          if (done == (measured_events * next_batch) / opt.batches &&
              next_batch <= opt.batches) {
            batch_logs.push_back(logsum);
            batch_times.push_back(walker.time - time_at_reset);
            ++next_batch;
          }
        }
      }
      measured_time = batch_times.back();
      break;
    } catch (const TieError&) {
      if (++restarts > 100) throw;
    } catch (const DegenerateBasisError&) {
      if (++restarts > 100) throw;
    }
  }

  // Raw exponents over the whole measured window.
  const Eigen::VectorXd theta = batch_logs.back() / measured_time;
  std::vector<double> theta_top(theta.data(), theta.data() + g);
  RunRecord rec;
  rec.permutation = perm.str();
  rec.seeds = {opt.seed};
  rec.steps = opt.steps;
  rec.batches = opt.batches;
  rec.renorm_every = R;
  rec.estimates = enforce_spectrum(theta_top);
  rec.theta1 = theta[0];
  rec.teich_time = measured_time;
  rec.restarts = restarts;
  rec.version = kToolkitVersion;
  if (opt.track_full)
    rec.full_theta.assign(theta.data(), theta.data() + theta.size());

  // Batch means for the normalized exponents and their partial sums.
  const int B = opt.batches;
  std::vector<std::vector<double>> lam_b(B, std::vector<double>(g));
  std::vector<double> theta1_b(B);
  for (int b = 0; b < B; ++b) {
    Eigen::VectorXd dlog = batch_logs[b];
    double dt = batch_times[b];
    if (b > 0) {
      dlog -= batch_logs[b - 1];
      dt -= batch_times[b - 1];
    }
    theta1_b[b] = dlog[0] / dt;
    for (int i = 0; i < g; ++i) lam_b[b][i] = dlog[i] / dlog[0];
  }
  auto stderr_of = [B](auto value_at) {
    double mean = 0.0;
    for (int b = 0; b < B; ++b) mean += value_at(b);
    mean /= B;
    double var = 0.0;
    for (int b = 0; b < B; ++b) {
      const double d = value_at(b) - mean;
      var += d * d;
    }
    var /= (B - 1);
    return std::sqrt(var / B);
  };
  rec.stderrs.resize(g);
  rec.stderrs[0] = stderr_of([&](int b) { return theta1_b[b]; });
  for (int i = 1; i < g; ++i)
    rec.stderrs[i] = stderr_of([&](int b) { return lam_b[b][i]; });
  rec.partial_sum_stderrs.resize(g);
  for (int i = 0; i < g; ++i)
    rec.partial_sum_stderrs[i] = stderr_of([&](int b) {
      double s = 0.0;
      for (int k = 0; k <= i; ++k) s += lam_b[b][k];
      return s;
    });

  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

RunRecord merge_runs(const std::vector<RunRecord>& records) {
  if (records.empty()) throw MixedConfigError("merge_runs: no records");
  const RunRecord& head = records.front();
  std::vector<std::uint64_t> seeds;
  for (const RunRecord& r : records) {
    if (r.permutation != head.permutation)
      throw MixedConfigError("merge_runs: mismatched permutations");
    if (r.steps != head.steps || r.batches != head.batches ||
        r.renorm_every != head.renorm_every)
      throw MixedConfigError("merge_runs: mismatched step regimen");
    seeds.insert(seeds.end(), r.seeds.begin(), r.seeds.end());
  }
  {
    auto sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MixedConfigError("merge_runs: duplicate seeds");
  }

  const size_t g = head.estimates.values.size();
  const double R = double(records.size());
  RunRecord out;
  out.component_id = head.component_id;
  out.permutation = head.permutation;
  out.seeds = std::move(seeds);
  out.steps = head.steps;
  out.batches = head.batches;
  out.renorm_every = head.renorm_every;
  out.version = head.version;

  std::vector<double> mean(g, 0.0);
  out.stderrs.assign(g, 0.0);
  out.partial_sum_stderrs.assign(g, 0.0);
  for (const RunRecord& r : records) {
    if (r.estimates.values.size() != g)
      throw MixedConfigError("merge_runs: mismatched spectrum sizes");
    for (size_t i = 0; i < g; ++i) {
      mean[i] += r.estimates.values[i] / R;
      out.stderrs[i] += r.stderrs[i] * r.stderrs[i];
      out.partial_sum_stderrs[i] += r.partial_sum_stderrs[i] * r.partial_sum_stderrs[i];
    }
    out.theta1 += r.theta1 / R;
    out.teich_time += r.teich_time;
    out.restarts += r.restarts;
    out.wall_seconds += r.wall_seconds;
    out.estimates.reordered |= r.estimates.reordered;
    out.estimates.clamped |= r.estimates.clamped;
  }
  for (size_t i = 0; i < g; ++i) {
    out.stderrs[i] = std::sqrt(out.stderrs[i]) / R;
    out.partial_sum_stderrs[i] = std::sqrt(out.partial_sum_stderrs[i]) / R;
  }
  SpectrumVector pooled = enforce_spectrum(mean);
  pooled.reordered = out.estimates.reordered || pooled.reordered;
  pooled.clamped = out.estimates.clamped || pooled.clamped;
  out.estimates = pooled;
  return out;
}

std::string run_record_csv(const RunRecord& record) {
  std::ostringstream out;
  out << "component,i,lambda,stderr\n";
  const std::string id =
      record.component_id.empty() ? record.permutation : record.component_id;
  for (size_t i = 0; i < record.estimates.values.size(); ++i) {
    out << '"' << id << "\"," << (i + 1) << ',';
    out.precision(12);
    out << record.estimates.values[i] << ',' << record.stderrs[i] << '\n';
  }
  return out.str();
}

}  // namespace spectra
