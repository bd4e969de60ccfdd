#include "spectra/stratum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace spectra {

namespace {

std::string join_orders(const std::vector<int>& orders) {
  std::string out;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders[i]);
  }
  return out;
}

}  // namespace

Stratum Stratum::of(std::vector<int> orders) {
  if (orders.empty()) throw ParseError("stratum needs at least one zero order");
  for (int m : orders)
    if (m < 0) throw ParseError("abelian zero orders must be nonnegative");
  std::sort(orders.begin(), orders.end(), std::greater<int>());
  int sum = std::accumulate(orders.begin(), orders.end(), 0);
  if (sum % 2 != 0) throw NonIntegralGenus("sum of zero orders must be even");
  Stratum s;
  s.orders = std::move(orders);
  return s;
}

int Stratum::genus() const { return genus_of(*this); }

int genus_of(const Stratum& s) {
  int sum = std::accumulate(s.orders.begin(), s.orders.end(), 0);
  if (sum % 2 != 0) throw NonIntegralGenus("sum of zero orders must be even");
  return (sum + 2) / 2;
}

std::string Stratum::str() const { return "H(" + join_orders(orders) + ")"; }

QStratum QStratum::of(std::vector<int> orders) {
  if (orders.empty()) throw ParseError("Q-stratum needs at least one order");
  int sum = 0;
  for (int d : orders) {
    if (d < -1 || d == 0)
      throw ParseError("quadratic orders must be -1 (pole) or positive");
    sum += d;
  }
  if ((sum + 4) % 4 != 0 || sum < -4)
    throw ParseError("quadratic orders must sum to 4g-4");
  QStratum q;
  q.orders = std::move(orders);
  return q;
}

int QStratum::base_genus() const {
  int sum = std::accumulate(orders.begin(), orders.end(), 0);
  return (sum + 4) / 4;
}

std::string QStratum::str() const { return "Q(" + join_orders(orders) + ")"; }

bool QStratum::same_orders(const QStratum& o) const {
  auto a = orders, b = o.orders;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Stratum double_cover_image(const QStratum& q) {
  std::vector<int> orders;
  for (int d : q.orders) {
    if (d % 2 == 0) {
      if (d / 2 > 0) {
        orders.push_back(d / 2);
        orders.push_back(d / 2);
      }
    } else {
      if (d + 1 > 0) orders.push_back(d + 1);  // poles (d = -1) drop out
    }
  }
  if (orders.empty()) orders.push_back(0);  // unramified torus cover: H(0)
  return Stratum::of(std::move(orders));
}

const char* label_name(ComponentLabel l) {
  switch (l) {
    case ComponentLabel::hyp: return "hyp";
    case ComponentLabel::odd: return "odd";
    case ComponentLabel::even: return "even";
    case ComponentLabel::nonhyp: return "nonhyp";
    case ComponentLabel::unique: return "";
  }
  return "";
}

std::string Component::id() const {
  if (label == ComponentLabel::unique) return stratum.str();
  return stratum.str() + "^" + label_name(label);
}

StratumRef parse_stratum_text(const std::string& text) {
  StratumRef ref;
  size_t pos = 0;
  if (text.empty()) throw ParseError("empty stratum text");
  if (text[0] == 'H') {
    ref.is_quadratic = false;
  } else if (text[0] == 'Q') {
    ref.is_quadratic = true;
  } else {
    throw ParseError("stratum text must start with 'H' or 'Q': \"" + text + "\"");
  }
  pos = text.find('(');
  auto close = text.find(')');
  if (pos == std::string::npos || close == std::string::npos || close < pos)
    throw ParseError("malformed stratum text: \"" + text + "\"");

  std::istringstream in(text.substr(pos + 1, close - pos - 1));
  std::string item;
  while (std::getline(in, item, ',')) {
    int value = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || p != item.data() + item.size())
      throw ParseError("bad order \"" + item + "\" in \"" + text + "\"");
    ref.orders.push_back(value);
  }
  if (ref.orders.empty()) throw ParseError("no orders in \"" + text + "\"");

  std::string rest = text.substr(close + 1);
  if (!rest.empty()) {
    if (rest[0] != '^') throw ParseError("malformed suffix in \"" + text + "\"");
    std::string label = rest.substr(1);
    if (label == "hyp") ref.label = ComponentLabel::hyp;
    else if (label == "odd") ref.label = ComponentLabel::odd;
    else if (label == "even") ref.label = ComponentLabel::even;
    else if (label == "nonhyp") ref.label = ComponentLabel::nonhyp;
    else throw ParseError("unknown component label \"" + label + "\"");
  }
  return ref;
}

}  // namespace spectra
