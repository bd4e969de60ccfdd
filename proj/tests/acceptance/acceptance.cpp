// Acceptance suite: one PASS/FAIL line per criterion.
//
// Monte-Carlo criteria pool 5 fixed seeds x 1e7 accelerated steps per
// component; every tolerance is fixed here, in code.

#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <vector>

#include "acceptance_shared.hpp"
#include "spectra/catalog.hpp"
#include "spectra/cover.hpp"
#include "spectra/harness.hpp"
#include "spectra/hn.hpp"
#include "spectra/iet.hpp"
#include "spectra/polygon.hpp"

using namespace spectra;
using acceptance::Checker;
using acceptance::Stopwatch;

namespace {

const std::vector<std::uint64_t> kSeeds{101, 102, 103, 104, 105};
constexpr std::int64_t kSteps = 10'000'000;
constexpr double kLambdaTol = 0.02;  // per-exponent tolerance vs the 4-digit values

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

// ---- criterion 1: exact w rows of the genus 3..5 catalog -------------------

struct ExactRow {
  const char* id;
  const char* w_tail;  // w_2..w_g, normalized
  const char* sum;
};

const std::vector<ExactRow> kExactRows = {
    {"H(4)^hyp", "3/5, 1/5", "9/5"},
    {"H(4)^odd", "2/5, 1/5", "8/5"},
    {"H(3,1)", "1/2, 1/4", "7/4"},
    {"H(2,2)^hyp", "2/3, 1/3", "2"},
    {"H(2,2)^odd", "1/3, 1/3", "5/3"},
    {"H(2,1,1)", "1/2, 1/3", "11/6"},
    {"H(6)^hyp", "5/7, 3/7, 1/7", "16/7"},
    {"H(6)^even", "4/7, 2/7, 1/7", "2"},
    {"H(6)^odd", "3/7, 2/7, 1/7", "13/7"},
    {"H(5,1)", "1/2, 1/3, 1/6", "2"},
    {"H(3,3)^hyp", "3/4, 1/2, 1/4", "5/2"},
    {"H(3,3)^nonhyp", "1/2, 1/4, 1/4", "2"},
    {"H(4,2)^even", "3/5, 1/3, 1/5", "32/15"},
    {"H(4,2)^odd", "2/5, 1/3, 1/5", "29/15"},
    {"H(2,2,2)^odd", "1/3, 1/3, 1/3", "2"},
    {"H(3,2,1)", "1/2, 1/3, 1/4", "25/12"},
    {"H(8)^hyp", "7/9, 5/9, 1/3, 1/9", "25/9"},
    {"H(8)^even", "5/9, 1/3, 2/9, 1/9", "20/9"},
    {"H(8)^odd", "4/9, 1/3, 2/9, 1/9", "19/9"},
    {"H(5,3)", "1/2, 1/3, 1/4, 1/6", "9/4"},
    {"H(6,2)^odd", "3/7, 1/3, 2/7, 1/7", "46/21"},
    {"H(4,4)^hyp", "4/5, 3/5, 2/5, 1/5", "3"},
};

void criterion_exact_rows(Checker& c) {
  Stopwatch timer;
  int bad = 0;
  std::string first_bad;
  for (const ExactRow& row : kExactRows) {
    WSpectrum w = w_catalog(find_component(row.id));
    const std::string expected = std::string("1, ") + row.w_tail;
    if (!w.all_exact() || w.str() != expected || w.sum().str() != row.sum) {
      ++bad;
      if (first_bad.empty())
        first_bad = std::string(row.id) + " -> " + w.str() + " (sum " +
                    (w.all_exact() ? w.sum().str() : "?") + ")";
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail, "%zu/%zu rows byte-exact in %.3fs%s%s",
                kExactRows.size() - bad, kExactRows.size(), timer.seconds(),
                bad ? "; first mismatch " : "", first_bad.c_str());
  c.report("criterion 1: exact w-spectra of the genus 3-5 non-varying rows",
           bad == 0 && timer.seconds() < 1.0, detail);
}

// ---- criterion 2: upper-bound rows -----------------------------------------

struct BoundRow {
  const char* id;
  const char* tail;  // "<=..." entries
  const char* sum;   // sum of the bound entries
};

const std::vector<BoundRow> kBoundRows = {
    {"H(1,1,1,1)", "<=1/2, <=1/2", "2"},
    {"H(2,2,2)^even", "<=2/3, <=1/3, <=1/3", "7/3"},
    {"H(1,1,1,3)", "<=1/2, <=1/2, <=1/4", "9/4"},
    {"H(1,1,2,2)", "<=2/3, <=1/2, <=1/3", "5/2"},
    {"H(1,1,1,1,2)", "<=1/2, <=1/2, <=1/3", "7/3"},
    {"H(1,1,1,1,1,1)", "<=1/2, <=1/2, <=1/2", "5/2"},
    {"H(7,1)", "<=3/4, <=1/2, <=3/8, <=1/8", "11/4"},
    {"H(6,2)^even", "<=5/7, <=4/7, <=1/3, <=1/7", "58/21"},
    {"H(6,1,1)", "<=5/7, <=1/2, <=3/7, <=1/7", "39/14"},
    {"H(5,2,1)", "<=2/3, <=1/2, <=1/3, <=1/6", "8/3"},
    {"H(5,1,1,1)", "<=2/3, <=1/2, <=1/2, <=1/6", "17/6"},
};

void criterion_bound_rows(Checker& c) {
  Stopwatch timer;
  int bad = 0;
  std::string first_bad;
  for (const BoundRow& row : kBoundRows) {
    const Component& comp = find_component(row.id);
    WSpectrum w = w_upper_bounds(comp.stratum);
    Rational sum(0);
    for (const Rational& v : w.values) sum += v;
    const std::string expected = std::string("1, ") + row.tail;
    if (w.str() != expected || sum.str() != row.sum) {
      ++bad;
      if (first_bad.empty()) first_bad = std::string(row.id) + " -> " + w.str();
    }
    // the catalog must serve these rows as bounds, never as exact data
    if (w_catalog(comp).all_exact()) ++bad;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail, "%zu/%zu rows match in %.3fs%s%s",
                kBoundRows.size() - bad, kBoundRows.size(), timer.seconds(),
                bad ? "; first mismatch " : "", first_bad.c_str());
  c.report("criterion 2: upper-bound rows of the genus 3-5 catalog",
           bad == 0 && timer.seconds() < 1.0, detail);
}

// ---- criterion 3: WSpec closed forms ---------------------------------------

void criterion_wspec(Checker& c) {
  bool ok = true;
  for (int g = 2; g <= 10 && ok; ++g) {
    ok &= w_hyperelliptic(hyperelliptic_source(Stratum::of({2 * g - 2}))).values ==
          wspec_minimal(g).values;
    ok &= w_hyperelliptic(hyperelliptic_source(Stratum::of({g - 1, g - 1}))).values ==
          wspec_two_zeros(g).values;
  }
  c.report("criterion 3: WSpec closed forms for g = 2..10", ok);
}

// ---- criteria 4-6: Monte-Carlo estimates -----------------------------------

struct LambdaRow {
  const char* id;
  std::vector<double> lambda_tail;  // lambda_2..lambda_g from the tables
};

const std::vector<LambdaRow> kGenus3Lambda = {
    {"H(4)^hyp", {0.6156, 0.1844}},   {"H(4)^odd", {0.4179, 0.1821}},
    {"H(3,1)", {0.5202, 0.2298}},     {"H(2,2)^hyp", {0.6883, 0.3117}},
    {"H(2,2)^odd", {0.4218, 0.2449}}, {"H(2,1,1)", {0.5397, 0.2936}},
    {"H(1,1,1,1)", {0.5517, 0.3411}},
};

void criterion_genus3(Checker& c, std::map<std::string, Verdict>& verdicts) {
  Stopwatch timer;
  for (const Component* comp : components_of_genus(3)) {
    Verdict v = verify_component(*comp, kSteps, kSeeds);
    verdicts.emplace(v.component_id, std::move(v));
  }

  // criterion 4: per-exponent reproduction at +-0.02
  int bad = 0;
  std::string first_bad;
  for (const LambdaRow& row : kGenus3Lambda) {
    const Verdict& v = verdicts.at(row.id);
    for (size_t i = 0; i < row.lambda_tail.size(); ++i) {
      const double got = v.run.estimates.values[i + 1];
      if (std::abs(got - row.lambda_tail[i]) > kLambdaTol) {
        ++bad;
        if (first_bad.empty()) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "%s lambda_%zu = %.4f vs %.4f", row.id,
                        i + 2, got, row.lambda_tail[i]);
          first_bad = buf;
        }
      }
    }
  }
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "7 components x 5 seeds x 1e7 steps in %.0fs, all exponents "
                "within +-%.2f%s%s",
                timer.seconds(), kLambdaTol, bad ? "; first offender " : "",
                first_bad.c_str());
  c.report("criterion 4: genus-3 Lyapunov reproduction", bad == 0, detail);
}

void criterion_sum_law(Checker& c, const std::map<std::string, Verdict>& verdicts) {
  int checked = 0, bad = 0;
  std::string first_bad;
  double worst = 0.0;
  for (const auto& [id, v] : verdicts) {
    if (!v.w_exact) continue;
    ++checked;
    const double limit = 3.0 * v.run.sum_stderr();
    worst = std::max(worst, v.sum_residual / limit);
    if (!v.sum_within_tol) {
      ++bad;
      if (first_bad.empty()) first_bad = id;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d non-varying components, |sum residual| < 3*stderr "
                "(worst ratio %.2f)%s%s",
                checked, worst, bad ? "; first offender " : "", first_bad.c_str());
  c.report("criterion 5: sum law vs exact totals", bad == 0 && checked >= 12, detail);
}

void compute_genus5_exact(std::map<std::string, Verdict>& verdicts) {
  for (const Component* comp : components_of_genus(5)) {
    if (!w_catalog(*comp).all_exact()) continue;
    Verdict v = verify_component(*comp, kSteps, kSeeds);
    verdicts.emplace(v.component_id, std::move(v));
  }
}

void criterion_conjecture(Checker& c, const std::map<std::string, Verdict>& verdicts) {
  int bad = 0;
  std::string first_bad;
  for (const auto& [id, v] : verdicts) {
    const bool ok = v.w_exact ? (v.status == "dominates" && v.forms_agree)
                              : (v.status == "tail-sum bound check only" &&
                                 v.tail_form_ok);
    if (!ok) {
      ++bad;
      if (first_bad.empty()) first_bad = id + " -> " + v.status;
    }
  }

  // the worked genus-5 chain: partial sums of H(6,2)^odd vs
  // (1, 10/7, 37/21, 43/21, 46/21)
  const Verdict& ex = verdicts.at("H(6,2)^odd");
  const std::vector<Rational> w_partial{Rational(1), Rational(10, 7), Rational(37, 21),
                                        Rational(43, 21), Rational(46, 21)};
  bool chain_ok = true;
  double partial = 0.0;
  for (int i = 0; i < 5; ++i) {
    partial += ex.run.estimates.values[i];
    const double tol = (i == 4) ? 3.0 * ex.run.sum_stderr() : ex.dominance_tol;
    if (i == 4) {
      chain_ok &= std::abs(partial - w_partial[i].to_double()) <= tol;
    } else {
      chain_ok &= partial >= w_partial[i].to_double() - tol;
    }
  }
  if (!chain_ok) {
    ++bad;
    if (first_bad.empty()) first_bad = "H(6,2)^odd partial-sum chain";
  }

  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%zu verdicts (genus 3 full + genus 5 exact rows), "
                "H(6,2)^odd chain vs 10/7, 37/21, 43/21, 46/21%s%s",
                verdicts.size(), bad ? "; first offender " : "", first_bad.c_str());
  c.report("criterion 6: conjecture harness dominance", bad == 0, detail);
}

// ---- criterion 7: cover arithmetic ----------------------------------------

void criterion_cover(Checker& c) {
  QStratum q = QStratum::of({1, 2, -1, -1, -1});
  bool ok = cover_deficit(q) == Rational(5, 6);
  ok &= double_cover_image(q) == Stratum::of({2, 1, 1});
  WSpectrum w = w_hyperelliptic(q);
  ok &= w.values == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3)};
  auto [lp, lm] = split_totals(q, w.sum());
  ok &= lp == Rational(1, 2) && lm == Rational(4, 3);
  WSplitResult split = split_w(q, w);
  ok &= split.splits.size() == 1 && !split.ambiguous;
  ok &= split.splits[0].w_plus == std::vector<Rational>{Rational(1, 2)};
  ok &= split.splits[0].w_minus ==
        std::vector<Rational>{Rational(1), Rational(1, 3)};
  c.report("criterion 7: Q(1,2,-1,-1,-1) cover arithmetic", ok,
           "deficit 5/6, (L+, L-) = (1/2, 4/3), w+ = (1/2), w- = (1, 1/3)");
}

// ---- criterion 8: property suites ------------------------------------------

std::pair<Eigen::VectorXd, Eigen::VectorXd> majorizing_pair(int n,
                                                            std::mt19937_64& rng) {
  Eigen::VectorXd lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = u01(rng);
  std::sort(lambda.data(), lambda.data() + n, std::greater<double>());
  Eigen::VectorXd mu = lambda;
  const int moves = 1 + int(rng() % 4);
  for (int k = 0; k < moves; ++k) {
    int i = int(rng() % n), j = int(rng() % n);
    if (mu[i] < mu[j]) std::swap(i, j);
    const double t = 0.5 * u01(rng) * (mu[i] - mu[j]);
    mu[i] -= t;
    mu[j] += t;
  }
  std::sort(mu.data(), mu.data() + n, std::greater<double>());
  return {lambda, mu};
}

Eigen::MatrixXd t_transform_certificate(const Eigen::VectorXd& lambda,
                                        const Eigen::VectorXd& mu) {
  const int n = int(lambda.size());
  Eigen::VectorXd x = lambda;
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  for (int guard = 0; guard < 4 * n * n; ++guard) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (x[k] > mu[k] + 1e-13) {
        i = k;
        break;
      }
    if (i < 0) break;
    int j = -1;
    for (int k = i + 1; k < n; ++k)
      if (x[k] < mu[k] - 1e-13) {
        j = k;
        break;
      }
    if (j < 0) break;
    const double delta = std::min(x[i] - mu[i], mu[j] - x[j]);
    const double t = delta / (x[i] - x[j]);
    Eigen::MatrixXd T = Eigen::MatrixXd::Identity(n, n);
    T(i, i) = T(j, j) = 1.0 - t;
    T(i, j) = T(j, i) = t;
    x = T * x;
    P = T * P;
  }
  return P;
}

void criterion_properties(Checker& c) {
  // (a) 1000-case equivalence of the three majorization criteria
  {
    std::mt19937_64 rng(88001);
    int failures = 0;
    for (int iter = 0; iter < 1000; ++iter) {
      const int n = 2 + int(rng() % 5);
      auto [lambda, mu] = majorizing_pair(n, rng);
      if (!bool(dominates<double>(lambda, mu, 1e-11))) ++failures;
      if (!convex_function_test(lambda, mu)) ++failures;
      Eigen::MatrixXd P = t_transform_certificate(lambda, mu);
      if ((P * lambda - mu).lpNorm<Eigen::Infinity>() > 1e-9) ++failures;
      auto terms = birkhoff_decompose(P);
      Eigen::MatrixXd back = Eigen::MatrixXd::Zero(n, n);
      for (const auto& t : terms)
        for (int r = 0; r < n; ++r) back(r, t.perm[r]) += t.weight;
      if ((back - P).lpNorm<Eigen::Infinity>() > 1e-9) ++failures;
      // a perturbed non-dominating pair must fail both criteria alike
      Eigen::VectorXd spoiled = mu;
      spoiled[n - 1] += 0.5;
      std::sort(spoiled.data(), spoiled.data() + n, std::greater<double>());
      const bool dom = bool(dominates<double>(spoiled, lambda, 1e-11));
      bool convex_ok;
      try {
        convex_ok = convex_function_test(spoiled, lambda, {}, 1e-11);
      } catch (const SumMismatch&) {
        convex_ok = false;  // sums differ by 0.5: not comparable, like dominates
      }
      if (dom != convex_ok) ++failures;
    }
    c.report("criterion 8a: majorization criteria equivalence (1000 cases)",
             failures == 0);
  }
  // (b) 500 random Hermitian matrices, n <= 8
  {
    std::mt19937_64 rng(88002);
    int failures = 0;
    for (int iter = 0; iter < 500; ++iter) {
      const int n = 2 + int(rng() % 7);
      Eigen::MatrixXcd a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          a(i, j) = std::complex<double>(2 * u01(rng) - 1, 2 * u01(rng) - 1);
      if (!schur_diagonal_check(a + a.adjoint())) ++failures;
    }
    c.report("criterion 8b: Schur diagonal majorization (500 cases)", failures == 0);
  }
  // (c) 1e4 random complex symmetric form inequalities, n <= 6
  {
    std::mt19937_64 rng(88003);
    int failures = 0;
    for (int iter = 0; iter < 10'000; ++iter) {
      const int n = 2 + int(rng() % 5);
      Eigen::MatrixXcd b(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          b(i, j) = std::complex<double>(2 * u01(rng) - 1, 2 * u01(rng) - 1);
          b(j, i) = b(i, j);
        }
      Eigen::RowVectorXcd alpha(n);
      for (int i = 0; i < n; ++i)
        alpha[i] = std::complex<double>(2 * u01(rng) - 1, 2 * u01(rng) - 1);
      alpha /= alpha.norm();
      if (!symmetric_form_inequality(b, alpha).ok) ++failures;
    }
    c.report("criterion 8c: complex symmetric form inequality (1e4 cases)",
             failures == 0);
  }
  // (d) unimodularity + length consistency along 1e5-step trajectories
  {
    std::mt19937_64 rng(88004);
    int failures = 0;
    long long steps_done = 0;
    for (const char* text : {"A B C D / D C B A", "A B C D E / E D C B A"}) {
      Permutation perm = Permutation::parse(text);
      Eigen::VectorXd len(perm.size());
      for (int i = 0; i < perm.size(); ++i) len[i] = -std::log(1.0 - u01(rng));
      len /= len.sum();
      Iet iet(perm, len);
      for (int step = 0; step < 50'000; ++step, ++steps_done) {
        RauzyResult r = rauzy_step(iet);
        if (exact_determinant(r.matrix) != 1) ++failures;
        Eigen::VectorXd back = r.matrix.cast<double>() * r.iet.lengths;
        if ((back - iet.lengths).norm() > 1e-12 * iet.lengths.norm()) ++failures;
        iet = r.iet;
        iet.lengths /= iet.lengths.sum();
      }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%lld elementary steps, det = 1 exactly",
                  steps_done);
    c.report("criterion 8d: cocycle unimodularity + length consistency (1e5 steps)",
             failures == 0, detail);
  }
  // (e) acceleration equivalence, exact integer matrix identity
  {
    std::mt19937_64 rng(88005);
    int failures = 0;
    int accelerated = 0;
    for (const char* text : {"A B C D E / E D C B A", "A B C D E F / F E D C B A"}) {
      Permutation perm = Permutation::parse(text);
      Eigen::VectorXd len(perm.size());
      for (int i = 0; i < perm.size(); ++i) len[i] = -std::log(1.0 - u01(rng));
      len /= len.sum();
      Iet iet(perm, len);
      for (int step = 0; step < 110; ++step, ++accelerated) {
        ZorichResult z = zorich_step(iet);
        Mat64 product = Mat64::Identity(perm.size(), perm.size());
        Iet cursor = iet;
        for (std::int64_t k = 0; k < z.count; ++k) {
          RauzyResult r = rauzy_step(cursor);
          product = (product * r.matrix).eval();
          cursor = r.iet;
        }
        if (product != z.matrix || !(cursor.perm == z.iet.perm)) ++failures;
        iet = z.iet;
        iet.lengths /= iet.lengths.sum();
      }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%d accelerated steps, exact factorization",
                  accelerated);
    c.report("criterion 8e: acceleration equivalence (>=100-step trajectories)",
             failures == 0, detail);
  }
}

// ---- criterion 9: the only in-scope Siegel-Veech remnant -------------------

void criterion_sv(Checker& c) {
  const bool ok = siegel_veech_kappa(Stratum::of({4})) == Rational(2, 5);
  c.report("criterion 9: kappa(H(4)) = 2/5 exact (inversion consistency)", ok);
}

}  // namespace

int main() {
  Checker c;
  criterion_exact_rows(c);
  criterion_bound_rows(c);
  criterion_wspec(c);
  std::map<std::string, Verdict> verdicts;
  criterion_genus3(c, verdicts);
  compute_genus5_exact(verdicts);
  criterion_sum_law(c, verdicts);
  criterion_conjecture(c, verdicts);
  criterion_cover(c);
  criterion_properties(c);
  criterion_sv(c);
  return c.exit_code();
}
