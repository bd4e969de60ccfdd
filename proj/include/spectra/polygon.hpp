#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"

namespace spectra {

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Graph of the partial sums of a weakly decreasing type vector:
// heights[i] = mu_1 + ... + mu_i, heights[0] = 0. Decreasing slopes make
// the chain concave; "above" always refers to this convention.
template <class S>
struct ConvexPolygon {
  Vec<S> heights;

  int segments() const { return int(heights.size()) - 1; }
};

template <class S>
ConvexPolygon<S> polygon_of(const Vec<S>& mu) {
  for (int i = 1; i < mu.size(); ++i)
    if (mu[i] > mu[i - 1]) throw NotSorted("type vector must be weakly decreasing");
  ConvexPolygon<S> p;
  p.heights.resize(mu.size() + 1);
  p.heights[0] = S(0);
  for (int i = 0; i < mu.size(); ++i) p.heights[i + 1] = p.heights[i] + mu[i];
  return p;
}

enum class Dominance { dominates, fails_at, sum_mismatch };

template <class S>
struct DominanceVerdict {
  Dominance kind = Dominance::dominates;
  int index = -1;  // first failing partial sum (1-based), when fails_at
  S delta = S(0);  // shortfall at that index, or the total-sum discrepancy

  explicit operator bool() const { return kind == Dominance::dominates; }
};

// Partial ordering of type vectors: every partial sum of `lambda` at least
// the one of `mu` (with slack tol), equal totals (within tol). Use tol = 0
// for exact scalars.
template <class S>
DominanceVerdict<S> dominates(const Vec<S>& lambda, const Vec<S>& mu, const S& tol) {
  if (lambda.size() != mu.size())
    throw LengthMismatch("dominance needs equal-length vectors");
  const int n = int(lambda.size());
  DominanceVerdict<S> verdict;
  S pl(0), pm(0);
  for (int i = 0; i < n - 1; ++i) {
    pl += lambda[i];
    pm += mu[i];
    if (pl < pm - tol) {
      verdict.kind = Dominance::fails_at;
      verdict.index = i + 1;
      verdict.delta = pm - pl;
      return verdict;
    }
  }
  pl += lambda[n - 1];
  pm += mu[n - 1];
  S diff = pl >= pm ? S(pl - pm) : S(pm - pl);
  if (diff > tol) {
    verdict.kind = Dominance::sum_mismatch;
    verdict.delta = pl - pm;
    return verdict;
  }
  return verdict;
}

// Pointwise comparison of the piecewise-linear interpolants at the integer
// abscissae (which are exactly the vertices).
template <class S>
bool polygon_above(const ConvexPolygon<S>& upper, const ConvexPolygon<S>& lower,
                   const S& tol) {
  if (upper.heights.size() != lower.heights.size())
    throw EndpointMismatch("polygons must span the same abscissae");
  const int n = int(upper.heights.size());
  S end_diff = upper.heights[n - 1] - lower.heights[n - 1];
  if ((end_diff > tol) || (end_diff < S(0) - tol))
    throw EndpointMismatch("polygons must share their endpoints");
  for (int i = 0; i < n; ++i)
    if (upper.heights[i] < lower.heights[i] - tol) return false;
  return true;
}

// Majorization via Eq-style convex test functions: true iff
// sum f(mu_i) <= sum f(lambda_i) for every supplied convex f.
// Defaults (x^2, e^x, hinge |x - c| on the data grid) are appended when
// `funcs` is empty.
bool convex_function_test(const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                          const std::vector<std::function<double(double)>>& funcs = {},
                          double tol = 1e-9);

// Birkhoff-von Neumann: positive weights summing to 1 and permutations
// (images by row) reconstructing the doubly stochastic input. Extraction is
// deterministic: max-bottleneck matching, lexicographically smallest.
struct BirkhoffTerm {
  double weight;
  std::vector<int> perm;  // row i -> column perm[i]
};
std::vector<BirkhoffTerm> birkhoff_decompose(const Eigen::MatrixXd& P);

// Schur majorization: the eigenvalue vector of a Hermitian matrix dominates
// its diagonal.
bool schur_diagonal_check(const Eigen::MatrixXcd& H);

// alpha H conj(alpha)^T >= |alpha B alpha^T|^2 for complex symmetric B,
// H = B conj(B)^T, |alpha| = 1.
struct FormInequality {
  double lhs;
  double rhs;
  bool ok;
};
FormInequality symmetric_form_inequality(const Eigen::MatrixXcd& B,
                                         const Eigen::RowVectorXcd& alpha);

// Valuation (Newton-type) polygon: lower convex hull of (j, v_j), re-read
// with decreasing slopes. Coefficients with infinite valuation are simply
// absent from the input.
struct ValuationPoint {
  int index;
  Rational valuation;
};
ConvexPolygon<Rational> valuation_polygon(const std::vector<ValuationPoint>& points);

// Vertex list as CSV rows "i,height".
std::string polygon_csv(const ConvexPolygon<double>& p);
std::string polygon_csv(const ConvexPolygon<Rational>& p);

}  // namespace spectra
