#include "spectra/hn.hpp"

#include <algorithm>
#include <map>

namespace spectra {

bool WSpectrum::all_exact() const {
  return std::none_of(is_bound.begin(), is_bound.end(), [](bool b) { return b; });
}

Rational WSpectrum::sum() const {
  if (!all_exact())
    throw BoundsOnly("sum of a bound-only spectrum is not well-defined");
  Rational s(0);
  for (const Rational& v : values) s += v;
  return s;
}

std::string WSpectrum::str() const {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    if (is_bound[i]) out += "<=";
    out += values[i].str();
  }
  return out;
}

WSpectrum WSpectrum::exact(std::vector<Rational> values) {
  WSpectrum w;
  w.is_bound.assign(values.size(), false);
  w.values = std::move(values);
  return w;
}

WSpectrum WSpectrum::bounds(std::vector<Rational> values) {
  WSpectrum w;
  w.is_bound.assign(values.size(), true);
  if (!w.is_bound.empty()) w.is_bound[0] = false;  // w_1 = 1 is exact
  w.values = std::move(values);
  return w;
}

WSpectrum w_hyperelliptic(const QStratum& q) {
  std::vector<Rational> pool;
  pool.push_back(Rational(1));
  for (int d : q.orders)
    for (int k = 1; 2 * k <= d + 1; ++k)
      pool.push_back(Rational(1) - Rational(2 * k, d + 2));
  const int g = double_cover_image(q).genus();
  if (int(pool.size()) < g)
    throw ArityMismatch(q.str() + ": slope set has fewer than g=" +
                        std::to_string(g) + " elements");
  std::sort(pool.begin(), pool.end(), std::greater<Rational>());
  pool.resize(g);
  return WSpectrum::exact(std::move(pool));
}

WSpectrum w_upper_bounds(const Stratum& stratum) {
  const int g = stratum.genus();
  if (g < 2) throw Error("w_upper_bounds needs genus >= 2");
  std::vector<Rational> a;
  a.push_back(Rational(0));  // a_0 = 0 makes the i = 1 bound read w_1 <= 1
  for (int m : stratum.orders)
    for (int l = 1; l <= m; ++l) a.push_back(Rational(l, m + 1));
  std::sort(a.begin(), a.end());
  std::vector<Rational> w(g);
  for (int i = 1; i <= g; ++i) w[i - 1] = Rational(1) - a[2 * i - 2];
  return WSpectrum::bounds(std::move(w));
}

QStratum hyperelliptic_source(const Stratum& stratum) {
  const int g = stratum.genus();
  if (stratum.orders == std::vector<int>{2 * g - 2}) {
    std::vector<int> orders{2 * g - 3};
    orders.insert(orders.end(), 2 * g + 1, -1);
    return QStratum::of(std::move(orders));
  }
  if (stratum.orders == std::vector<int>{g - 1, g - 1}) {
    std::vector<int> orders{2 * g - 2};
    orders.insert(orders.end(), 2 * g + 2, -1);
    return QStratum::of(std::move(orders));
  }
  throw UnknownComponent(stratum.str() + " has no hyperelliptic component");
}

WSpectrum wspec_minimal(int genus) {
  const int N = 2 * genus - 1;
  std::vector<Rational> w;
  for (int k = N; k >= 1; k -= 2) w.push_back(Rational(k, N));
  return WSpectrum::exact(std::move(w));
}

WSpectrum wspec_two_zeros(int genus) {
  const int N = 2 * genus;
  std::vector<Rational> w;
  for (int k = N; k >= 2; k -= 2) w.push_back(Rational(k, N));
  return WSpectrum::exact(std::move(w));
}

namespace {

// Exact rows of the low-genus non-varying catalog (w_2..w_g; w_1 = 1).
const std::map<std::string, std::vector<Rational>>& exact_w_rows() {
  static const std::map<std::string, std::vector<Rational>> rows = [] {
    std::map<std::string, std::vector<Rational>> t;
    auto R = [](std::int64_t p, std::int64_t q) { return Rational(p, q); };
    // genus 2
    t["H(2)^hyp"] = {R(1, 3)};
    t["H(1,1)^hyp"] = {R(1, 2)};
    // genus 3
    t["H(4)^hyp"] = {R(3, 5), R(1, 5)};
    t["H(4)^odd"] = {R(2, 5), R(1, 5)};
    t["H(3,1)"] = {R(1, 2), R(1, 4)};
    t["H(2,2)^hyp"] = {R(2, 3), R(1, 3)};
    t["H(2,2)^odd"] = {R(1, 3), R(1, 3)};
    t["H(2,1,1)"] = {R(1, 2), R(1, 3)};
    // genus 4
    t["H(6)^hyp"] = {R(5, 7), R(3, 7), R(1, 7)};
    t["H(6)^even"] = {R(4, 7), R(2, 7), R(1, 7)};
    t["H(6)^odd"] = {R(3, 7), R(2, 7), R(1, 7)};
    t["H(5,1)"] = {R(1, 2), R(1, 3), R(1, 6)};
    t["H(3,3)^hyp"] = {R(3, 4), R(1, 2), R(1, 4)};
    t["H(3,3)^nonhyp"] = {R(1, 2), R(1, 4), R(1, 4)};
    t["H(4,2)^even"] = {R(3, 5), R(1, 3), R(1, 5)};
    t["H(4,2)^odd"] = {R(2, 5), R(1, 3), R(1, 5)};
    t["H(2,2,2)^odd"] = {R(1, 3), R(1, 3), R(1, 3)};
    t["H(3,2,1)"] = {R(1, 2), R(1, 3), R(1, 4)};
    // genus 5
    t["H(8)^hyp"] = {R(7, 9), R(5, 9), R(3, 9), R(1, 9)};
    t["H(8)^even"] = {R(5, 9), R(3, 9), R(2, 9), R(1, 9)};
    t["H(8)^odd"] = {R(4, 9), R(3, 9), R(2, 9), R(1, 9)};
    t["H(5,3)"] = {R(1, 2), R(1, 3), R(1, 4), R(1, 6)};
    t["H(6,2)^odd"] = {R(3, 7), R(1, 3), R(2, 7), R(1, 7)};
    t["H(4,4)^hyp"] = {R(4, 5), R(3, 5), R(2, 5), R(1, 5)};
    return t;
  }();
  return rows;
}

}  // namespace

WSpectrum w_catalog(const Component& component) {
  const auto& rows = exact_w_rows();
  auto it = rows.find(component.id());
  if (it != rows.end()) {
    std::vector<Rational> values{Rational(1)};
    values.insert(values.end(), it->second.begin(), it->second.end());
    return WSpectrum::exact(std::move(values));
  }
  // catalogued but varying: only the entrywise bounds are known
  return w_upper_bounds(component.stratum);
}

bool sum_bound_check(const WSpectrum& w, int genus) {
  return w.sum() <= Rational(genus + 1, 2);
}

}  // namespace spectra
