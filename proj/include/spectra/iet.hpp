#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "spectra/permutation.hpp"
#include "spectra/stratum.hpp"

namespace spectra {

using Mat64 = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// An interval exchange transformation: permutation pair plus positive
// lengths indexed by label.
struct Iet {
  Permutation perm;
  Eigen::VectorXd lengths;

  Iet(Permutation p, Eigen::VectorXd len);
};

// Which row the induction modified (the loser's row). Fixed convention of
// this toolkit: the winner is the longer of the two last intervals, the
// loser is the last label of the *other* row; the loser is removed from
// the end of its row and reinserted right after the winner in that row.
enum class StepType { top, bottom };

// Relative tolerance below which the two competing lengths count as tied.
inline constexpr double kTieRelTol = 1e-14;

// Cap on same-type repetitions inside one accelerated step.
inline constexpr std::int64_t kZorichRunCap = 1'000'000;

struct RauzyResult {
  Iet iet;
  Mat64 matrix;  // input lengths == matrix * output lengths; det == +1
  StepType type;
};

struct ZorichResult {
  Iet iet;
  Mat64 matrix;  // product of the elementary matrices of the run
  StepType type;
  std::int64_t count;  // number of elementary steps composed
};

RauzyResult rauzy_step(const Iet& iet);
ZorichResult zorich_step(const Iet& iet);

// Antisymmetric incidence form of the suspension: omega(a,b) = +1 when a
// precedes b on top and follows it on the bottom. Its rank is twice the
// genus of the suspended translation surface, and it transforms by
// congruence omega' = M^T omega M along the induction.
Mat64 intersection_form(const Permutation& perm);

// Exact rank over the rationals (entries are tiny; exact elimination).
int exact_rank(const Mat64& m);

// Exact determinant via fraction-free elimination in 128-bit arithmetic;
// throws on overflow. Intended for the small per-step matrices.
std::int64_t exact_determinant(const Mat64& m);

// Zero orders of the suspended translation surface, from the cycles of the
// division-point identification. Keeps order-0 entries (marked points).
Stratum singularity_data(const Permutation& perm);

}  // namespace spectra
