#pragma once

#include <vector>

#include "spectra/hn.hpp"
#include "spectra/rational.hpp"
#include "spectra/stratum.hpp"

namespace spectra {

// Exact bookkeeping of the canonical double cover of a quadratic stratum.
struct CoverReport {
  QStratum source;
  Stratum image;
  int base_genus = 0;   // g(Y)
  int cover_genus = 0;  // g(X)
  int g_eff = 0;        // g(X) - g(Y)
  Rational deficit;     // L^- - L^+
  bool has_totals = false;
  Rational l_plus;
  Rational l_minus;

  std::string str() const;  // "L^- = 4/3, L^+ = 1/2" style text
};

// (1/4) * sum over odd-order singularities (poles included) of 1/(d_j + 2).
Rational cover_deficit(const QStratum& q);

// Split the known total sum of slopes into the invariant and anti-invariant
// parts: l_plus = (total - deficit)/2, l_minus = (total + deficit)/2.
std::pair<Rational, Rational> split_totals(const QStratum& q, const Rational& total);

CoverReport cover_report(const QStratum& q);
CoverReport cover_report(const QStratum& q, const Rational& total);

// One partition of the slope multiset into the invariant part (g(Y) values
// summing to l_plus) and the anti-invariant part (g_eff values summing to
// l_minus).
struct WSplit {
  std::vector<Rational> w_plus;
  std::vector<Rational> w_minus;
};

// All value-distinct partitions. Empty result never returned: no partition
// throws NoValidPartition; several distinct ones set `ambiguous`.
struct WSplitResult {
  std::vector<WSplit> splits;
  bool ambiguous = false;
};

WSplitResult split_w(const QStratum& q, const WSpectrum& w);

// Per-zero self-intersection coefficient: D_i^2 = -(1/(m_i+1)) (chi/2), so
// the stored coefficient of chi is -1/(2(m_i+1)).
struct SelfIntersection {
  int order;
  Rational chi_coefficient;
};

std::vector<SelfIntersection> self_intersections(const Stratum& stratum);

}  // namespace spectra
