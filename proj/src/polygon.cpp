#include "spectra/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace spectra {

bool convex_function_test(const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                          const std::vector<std::function<double(double)>>& funcs,
                          double tol) {
  if (lambda.size() != mu.size())
    throw LengthMismatch("convex_function_test needs equal-length vectors");
  if (std::abs(lambda.sum() - mu.sum()) > std::max(tol, 1e-9 * (1.0 + std::abs(lambda.sum()))))
    throw SumMismatch("convex_function_test needs equal sums");

  std::vector<std::function<double(double)>> all = funcs;
  if (all.empty()) {
    all.emplace_back([](double x) { return x * x; });
    all.emplace_back([](double x) { return std::exp(x); });
    for (int i = 0; i < lambda.size(); ++i) {
      const double c1 = lambda[i], c2 = mu[i];
      all.emplace_back([c1](double x) { return std::abs(x - c1); });
      all.emplace_back([c2](double x) { return std::abs(x - c2); });
    }
  }
  for (const auto& f : all) {
    double fl = 0.0, fm = 0.0;
    for (int i = 0; i < lambda.size(); ++i) {
      fl += f(lambda[i]);
      fm += f(mu[i]);
    }
    if (fm > fl + tol) return false;
  }
  return true;
}

namespace {

constexpr double kEntryZero = 1e-13;

// Kuhn's augmenting-path matching on the boolean graph of entries >= thr
// restricted to `allowed` rows. Column order is ascending, which keeps the
// search deterministic.
bool perfect_matching(const Eigen::MatrixXd& P, double thr,
                      const std::vector<int>& rows, std::vector<int>& match_col) {
  const int n = int(P.cols());
  match_col.assign(n, -1);
  std::vector<char> visited(n);
  std::function<bool(int)> try_row = [&](int r) -> bool {
    for (int c = 0; c < n; ++c) {
      if (P(r, c) < thr || visited[c]) continue;
      visited[c] = 1;
      if (match_col[c] < 0 || try_row(match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r : rows) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_row(r)) return false;
  }
  return true;
}

// Lexicographically smallest perfect matching using entries >= thr.
std::vector<int> lex_matching(const Eigen::MatrixXd& P, double thr) {
  const int n = int(P.rows());
  std::vector<int> perm(n, -1);
  std::vector<char> used_col(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (used_col[c] || P(r, c) < thr) continue;
      // feasibility of completing rows r+1..n-1 on the remaining columns
      Eigen::MatrixXd sub = P;
      for (int cc = 0; cc < n; ++cc)
        if (used_col[cc] || cc == c) sub.col(cc).setConstant(-1.0);
      std::vector<int> rest;
      for (int rr = r + 1; rr < n; ++rr) rest.push_back(rr);
      std::vector<int> match;
      if (perfect_matching(sub, thr, rest, match)) {
        perm[r] = c;
        used_col[c] = 1;
        break;
      }
    }
    if (perm[r] < 0) return {};
  }
  return perm;
}

}  // namespace

std::vector<BirkhoffTerm> birkhoff_decompose(const Eigen::MatrixXd& P) {
  const int n = int(P.rows());
  if (P.cols() != n) throw NotDoublyStochastic("matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (std::abs(P.row(i).sum() - 1.0) > 1e-12)
      throw NotDoublyStochastic("row sums must equal 1");
    if (std::abs(P.col(i).sum() - 1.0) > 1e-12)
      throw NotDoublyStochastic("column sums must equal 1");
    for (int j = 0; j < n; ++j)
      if (P(i, j) < -1e-12) throw NotDoublyStochastic("entries must be nonnegative");
  }

  Eigen::MatrixXd rest = P;
  std::vector<BirkhoffTerm> terms;
  double remaining = 1.0;
  const int cap = (n - 1) * (n - 1) + 1;
  for (int iter = 0; iter < cap && remaining > 1e-10; ++iter) {
    // max-bottleneck threshold over the distinct residual entries
    std::vector<double> levels;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rest(i, j) > kEntryZero) levels.push_back(rest(i, j));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty()) break;

    std::vector<int> all_rows(n);
    for (int i = 0; i < n; ++i) all_rows[i] = i;
    int lo = 0, hi = int(levels.size()) - 1, best = -1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      std::vector<int> match;
      if (perfect_matching(rest, levels[mid], all_rows, match)) {
        best = mid;
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    if (best < 0) break;

    std::vector<int> perm = lex_matching(rest, levels[best]);
    if (perm.empty()) break;
    double weight = remaining;
    for (int r = 0; r < n; ++r) weight = std::min(weight, rest(r, perm[r]));
    for (int r = 0; r < n; ++r) rest(r, perm[r]) -= weight;
    remaining -= weight;
    terms.push_back({weight, std::move(perm)});
  }
  return terms;
}

bool schur_diagonal_check(const Eigen::MatrixXcd& H) {
  const int n = int(H.rows());
  if (H.cols() != n) throw NotHermitian("matrix must be square");
  const double scale = std::max(1.0, H.norm());
  if ((H - H.adjoint()).norm() > 1e-12 * scale)
    throw NotHermitian("matrix must be Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  Eigen::VectorXd eig = solver.eigenvalues();
  Eigen::VectorXd diag = H.diagonal().real();
  std::sort(eig.data(), eig.data() + n, std::greater<double>());
  std::sort(diag.data(), diag.data() + n, std::greater<double>());
  return bool(dominates<double>(eig, diag, 1e-9 * scale));
}

FormInequality symmetric_form_inequality(const Eigen::MatrixXcd& B,
                                         const Eigen::RowVectorXcd& alpha) {
  const int n = int(B.rows());
  if (B.cols() != n) throw NotSymmetric("matrix must be square");
  const double scale = std::max(1.0, B.norm());
  if ((B - B.transpose()).norm() > 1e-12 * scale)
    throw NotSymmetric("matrix must be complex symmetric");
  if (alpha.size() != n || std::abs(alpha.norm() - 1.0) > 1e-12)
    throw NotUnit("alpha must be a unit row vector");

  const Eigen::MatrixXcd H = B * B.conjugate().transpose();
  FormInequality out;
  out.lhs = (alpha * H * alpha.adjoint())(0, 0).real();
  const std::complex<double> q = (alpha * B * alpha.transpose())(0, 0);
  out.rhs = std::norm(q);
  out.ok = out.lhs >= out.rhs - 1e-10;
  return out;
}

std::string polygon_csv(const ConvexPolygon<double>& p) {
  std::string out = "i,height\n";
  char buf[48];
  for (int i = 0; i < p.heights.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.12g\n", i, p.heights[i]);
    out += buf;
  }
  return out;
}

std::string polygon_csv(const ConvexPolygon<Rational>& p) {
  std::string out = "i,height\n";
  for (int i = 0; i < p.heights.size(); ++i)
    out += std::to_string(i) + "," + p.heights[i].str() + "\n";
  return out;
}

ConvexPolygon<Rational> valuation_polygon(const std::vector<ValuationPoint>& points) {
  std::vector<ValuationPoint> pts = points;
  std::sort(pts.begin(), pts.end(),
            [](const ValuationPoint& a, const ValuationPoint& b) {
              return a.index < b.index;
            });
  if (pts.empty() || pts.front().index != 0 || !(pts.front().valuation == Rational(0)))
    throw MissingConstantTerm("valuation polygon needs (0, 0): R(0) = 1");
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i].index == pts[i - 1].index)
      throw Error("duplicate coefficient index in valuation data");

  // lower convex hull, monotone chain over increasing indices
  std::vector<ValuationPoint> hull;
  for (const ValuationPoint& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it lies strictly below segment a-p
      Rational lhs = (b.valuation - a.valuation) * Rational(p.index - a.index);
      Rational rhs = (p.valuation - a.valuation) * Rational(b.index - a.index);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }

  // slopes with multiplicity, increasing along the hull
  std::vector<Rational> slopes;
  for (size_t k = 1; k < hull.size(); ++k) {
    const int width = hull[k].index - hull[k - 1].index;
    const Rational s =
        (hull[k].valuation - hull[k - 1].valuation) / Rational(width);
    for (int i = 0; i < width; ++i) slopes.push_back(s);
  }
  // decreasing-slope convention
  std::reverse(slopes.begin(), slopes.end());
  Vec<Rational> mu(int(slopes.size()));
  for (int i = 0; i < int(slopes.size()); ++i) mu[i] = slopes[i];
  return polygon_of<Rational>(mu);
}

}  // namespace spectra
