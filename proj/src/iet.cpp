#include "spectra/iet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectra/rational.hpp"

namespace spectra {

Iet::Iet(Permutation p, Eigen::VectorXd len) : perm(std::move(p)), lengths(std::move(len)) {
  if (lengths.size() != perm.size())
    throw ParseError("length vector size must match the permutation");
  for (int i = 0; i < lengths.size(); ++i)
    if (!(lengths[i] > 0.0)) throw ParseError("interval lengths must be positive");
}

namespace {

struct Move {
  int winner;
  int loser;
  StepType type;
};

Move pick_move(const Permutation& perm, const Eigen::VectorXd& len) {
  const int last_top = perm.top().back();
  const int last_bottom = perm.bottom().back();
  const double lt = len[last_top];
  const double lb = len[last_bottom];
  if (std::abs(lt - lb) <= kTieRelTol * std::max(lt, lb))
    throw TieError("competing lengths tie within tolerance");
  // The loser's row is the one that gets induced; the step is named after it.
  if (lt > lb) return {last_top, last_bottom, StepType::bottom};
  return {last_bottom, last_top, StepType::top};
}

// Remove the loser from the end of `row` and reinsert it right after the
// winner's position in the same row.
void reinsert_after_winner(std::vector<int>& row, int winner) {
  const int loser = row.back();
  row.pop_back();
  auto it = std::find(row.begin(), row.end(), winner);
  row.insert(it + 1, loser);
}

}  // namespace

RauzyResult rauzy_step(const Iet& iet) {
  if (!iet.perm.irreducible())
    throw ReducibleError("rauzy_step requires an irreducible permutation");
  const int n = iet.perm.size();
  Move mv = pick_move(iet.perm, iet.lengths);

  Eigen::VectorXd len = iet.lengths;
  len[mv.winner] -= len[mv.loser];

  std::vector<int> top = iet.perm.top();
  std::vector<int> bottom = iet.perm.bottom();
  reinsert_after_winner(mv.type == StepType::top ? top : bottom, mv.winner);

  Permutation next(iet.perm.names(), std::move(top), std::move(bottom));
  if (!next.irreducible())
    throw ReducibleError("induction produced a reducible permutation");

  Mat64 m = Mat64::Identity(n, n);
  m(mv.winner, mv.loser) = 1;
  return RauzyResult{Iet(std::move(next), std::move(len)), std::move(m), mv.type};
}

ZorichResult zorich_step(const Iet& iet) {
  RauzyResult first = rauzy_step(iet);
  Mat64 product = first.matrix;
  Iet current = first.iet;
  std::int64_t count = 1;
  while (true) {
    const int last_top = current.perm.top().back();
    const int last_bottom = current.perm.bottom().back();
    const double lt = current.lengths[last_top];
    const double lb = current.lengths[last_bottom];
    if (std::abs(lt - lb) <= kTieRelTol * std::max(lt, lb))
      throw TieError("competing lengths tie within tolerance");
    StepType next_type = lt > lb ? StepType::bottom : StepType::top;
    if (next_type != first.type) break;
    RauzyResult step = rauzy_step(current);
    product = (product * step.matrix).eval();
    current = std::move(step.iet);
    if (++count > kZorichRunCap)
      throw UnboundedRunError("accelerated run exceeded the repetition cap");
  }
  return ZorichResult{std::move(current), std::move(product), first.type, count};
}

Mat64 intersection_form(const Permutation& perm) {
  if (!perm.irreducible())
    throw ReducibleError("intersection_form requires an irreducible permutation");
  const int n = perm.size();
  std::vector<int> top_pos(n), bottom_pos(n);
  for (int i = 0; i < n; ++i) {
    top_pos[perm.top()[i]] = i;
    bottom_pos[perm.bottom()[i]] = i;
  }
  Mat64 omega = Mat64::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (top_pos[a] < top_pos[b] && bottom_pos[a] > bottom_pos[b]) omega(a, b) = 1;
      else if (top_pos[a] > top_pos[b] && bottom_pos[a] < bottom_pos[b]) omega(a, b) = -1;
    }
  return omega;
}

int exact_rank(const Mat64& m) {
  const int rows = int(m.rows()), cols = int(m.cols());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!(a[r][col] == Rational(0))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == Rational(0)) continue;
      Rational f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::int64_t exact_determinant(const Mat64& m) {
  if (m.rows() != m.cols()) throw Error("determinant needs a square matrix");
  const int n = int(m.rows());
  using i128 = __int128;
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  // Bareiss fraction-free elimination; divisions stay exact.
  i128 prev = 1;
  int sign = 1;
  constexpr i128 kLimit = i128(1) << 100;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        i128 v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        if (v > kLimit || v < -kLimit)
          throw Error("exact_determinant: 128-bit overflow");
        a[i][j] = v / prev;
      }
    prev = a[k][k];
  }
  i128 det = sign * a[n - 1][n - 1];
  if (det > INT64_MAX || det < INT64_MIN)
    throw Error("exact_determinant: result exceeds 64 bits");
  return std::int64_t(det);
}

Stratum singularity_data(const Permutation& perm) {
  if (!perm.irreducible())
    throw ReducibleError("singularity_data requires an irreducible permutation");
  const int n = perm.size();
  // Division points of the suspension polygon: T_0..T_n on top, B_0..B_n on
  // the bottom. Gluing the two copies of each labelled edge identifies left
  // endpoints with left endpoints and right with right; the extreme points
  // coincide outright. Each resulting class is one singularity, and its
  // order is (number of interior top points in the class) - 1, i.e. cone
  // angle 2*pi*(count).
  std::vector<int> parent(2 * (n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  auto T = [&](int k) { return k; };
  auto B = [&](int k) { return n + 1 + k; };

  unite(T(0), B(0));
  unite(T(n), B(n));
  std::vector<int> bpos = perm.bottom_positions();
  for (int k = 1; k <= n; ++k) {
    const int b = bpos[k - 1] + 1;
    unite(T(k), B(b));
    unite(T(k - 1), B(b - 1));
  }

  std::vector<int> interior_tops(2 * (n + 1), 0);
  for (int k = 1; k <= n - 1; ++k) interior_tops[find(T(k))]++;
  std::vector<int> orders;
  std::vector<char> seen(2 * (n + 1), 0);
  for (int k = 0; k <= n; ++k) {
    int root = find(T(k));
    if (seen[root]) continue;
    seen[root] = 1;
    orders.push_back(interior_tops[root] - 1);
  }
  return Stratum::of(std::move(orders));
}

}  // namespace spectra
