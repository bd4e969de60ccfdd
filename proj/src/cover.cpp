#include "spectra/cover.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace spectra {

Rational cover_deficit(const QStratum& q) {
  Rational sum(0);
  for (int d : q.orders)
    if (d % 2 != 0) sum += Rational(1, d + 2);
  return sum * Rational(1, 4);
}

std::pair<Rational, Rational> split_totals(const QStratum& q, const Rational& total) {
  const Rational deficit = cover_deficit(q);
  if (deficit > total)
    throw NegativePart("deficit " + deficit.str() + " exceeds total " + total.str());
  const Rational l_plus = (total - deficit) / Rational(2);
  const Rational l_minus = (total + deficit) / Rational(2);
  return {l_plus, l_minus};
}

CoverReport cover_report(const QStratum& q) {
  CoverReport r;
  r.source = q;
  r.image = double_cover_image(q);
  r.base_genus = q.base_genus();
  r.cover_genus = r.image.genus();
  r.g_eff = r.cover_genus - r.base_genus;
  r.deficit = cover_deficit(q);
  return r;
}

CoverReport cover_report(const QStratum& q, const Rational& total) {
  CoverReport r = cover_report(q);
  auto [lp, lm] = split_totals(q, total);
  r.has_totals = true;
  r.l_plus = lp;
  r.l_minus = lm;
  return r;
}

std::string CoverReport::str() const {
  std::string out = source.str() + " -> " + image.str();
  out += "  (g(Y)=" + std::to_string(base_genus) +
         ", g(X)=" + std::to_string(cover_genus) +
         ", g_eff=" + std::to_string(g_eff) + ")\n";
  out += "L^- - L^+ = " + deficit.str();
  if (has_totals) {
    out += ", L^- + L^+ = " + (l_plus + l_minus).str();
    out += "\nL^- = " + l_minus.str() + ", L^+ = " + l_plus.str();
  }
  out += "\n";
  return out;
}

WSplitResult split_w(const QStratum& q, const WSpectrum& w) {
  if (!w.all_exact())
    throw BoundsOnly("split_w needs an exact slope spectrum");
  const CoverReport rep = cover_report(q);
  const int g = rep.base_genus;
  const int total_entries = g + rep.g_eff;
  if (int(w.values.size()) != total_entries)
    throw ArityMismatch("slope spectrum must have g + g_eff = " +
                        std::to_string(total_entries) + " entries");
  auto [l_plus, l_minus] = split_totals(q, w.sum());

  // exhaustive over g-element index subsets; dedupe by value multisets
  const int n = total_entries;
  std::set<std::pair<std::vector<Rational>, std::vector<Rational>>> seen;
  WSplitResult result;

  std::vector<int> choose(g, 0);
  std::function<void(int, int, Rational)> rec = [&](int start, int taken,
                                                    Rational sum_taken) {
    if (taken == g) {
      if (!(sum_taken == l_plus)) return;
      std::vector<Rational> plus, minus;
      std::vector<char> in_plus(n, 0);
      for (int i = 0; i < g; ++i) in_plus[choose[i]] = 1;
      for (int i = 0; i < n; ++i)
        (in_plus[i] ? plus : minus).push_back(w.values[i]);
      auto key = std::make_pair(plus, minus);
      if (seen.insert(key).second) result.splits.push_back({plus, minus});
      return;
    }
    for (int i = start; i <= n - (g - taken); ++i) {
      choose[taken] = i;
      rec(i + 1, taken + 1, sum_taken + w.values[i]);
    }
  };
  rec(0, 0, Rational(0));

  if (result.splits.empty())
    throw NoValidPartition("no partition of the slopes matches (" +
                           l_plus.str() + ", " + l_minus.str() + ")");
  result.ambiguous = result.splits.size() > 1;
  return result;
}

std::vector<SelfIntersection> self_intersections(const Stratum& stratum) {
  std::vector<SelfIntersection> out;
  out.reserve(stratum.orders.size());
  for (int m : stratum.orders)
    out.push_back({m, Rational(-1, 2 * (m + 1))});
  return out;
}

}  // namespace spectra
