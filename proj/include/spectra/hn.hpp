#pragma once

#include <vector>

#include "spectra/rational.hpp"
#include "spectra/stratum.hpp"

namespace spectra {

// Normalized Harder-Narasimhan slope vector of a Teichmüller curve:
// w_1 = 1 >= w_2 >= ... >= w_g >= 0, exact rationals. Entries can be either
// exact values or upper bounds; the two kinds never mix in practice (exact
// catalog rows vs bound-only rows).
struct WSpectrum {
  std::vector<Rational> values;
  std::vector<bool> is_bound;  // per entry: true = "<=" bound, false = exact

  bool all_exact() const;
  Rational sum() const;  // throws BoundsOnly when any entry is a bound
  std::string str() const;

  static WSpectrum exact(std::vector<Rational> values);
  static WSpectrum bounds(std::vector<Rational> values);
};

// Slope spectrum of curves in the hyperelliptic locus over a quadratic
// stratum: the g largest elements of {1} u {1 - 2k/(d_j+2) : 0 < 2k <= d_j+1}
// where g is the genus of the double-cover image.
WSpectrum w_hyperelliptic(const QStratum& q);

// Entrywise upper bounds for any Teichmüller curve of a stratum:
// w_i <= 1 - a_{2i-2}, where a_m is the m-th smallest element of
// {l/(m_j+1) : 1 <= l <= m_j} and a_0 = 0.
WSpectrum w_upper_bounds(const Stratum& stratum);

// Source quadratic stratum of the hyperelliptic component:
// H^hyp(2g-2) <- Q(2g-3, -1^{2g+1}); H^hyp(g-1,g-1) <- Q(2g-2, -1^{2g+2}).
QStratum hyperelliptic_source(const Stratum& stratum);

// Exact w-vector for the catalogued non-varying components (genus 2-5);
// bound vector for the rest of the catalog.
WSpectrum w_catalog(const Component& component);

// Sum bound of the slope spectrum: sum w_i <= (g+1)/2.
bool sum_bound_check(const WSpectrum& w, int genus);

// Closed-form WSpec of the two hyperelliptic families:
// (1/N, 3/N, ..., N/N) with N = 2g-1, and (2/N, 4/N, ..., N/N) with N = 2g,
// both sorted decreasing.
WSpectrum wspec_minimal(int genus);     // H^hyp(2g-2)
WSpectrum wspec_two_zeros(int genus);   // H^hyp(g-1,g-1)

}  // namespace spectra
