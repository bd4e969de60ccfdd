#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/permutation.hpp"

namespace spectra {

// Stratum of abelian differentials: multiset of zero orders, kept weakly
// decreasing. Order 0 is allowed only as the torus marked point H(0).
struct Stratum {
  std::vector<int> orders;

  static Stratum of(std::vector<int> orders);
  int genus() const;  // (sum + 2) / 2
  std::string str() const;

  bool operator==(const Stratum& o) const { return orders == o.orders; }
};

int genus_of(const Stratum& s);

// Stratum of meromorphic quadratic differentials with at most simple poles.
// The order sequence is kept as given (printing is bit-exact round-trip);
// comparisons are multiset comparisons.
struct QStratum {
  std::vector<int> orders;

  static QStratum of(std::vector<int> orders);
  int base_genus() const;  // (sum + 4) / 4
  std::string str() const;

  bool same_orders(const QStratum& o) const;
};

// Image of the canonical double covering: an even order d contributes two
// zeros of order d/2, an odd order d one zero of order d+1; zeros of order
// 0 (and poles) drop out.
Stratum double_cover_image(const QStratum& q);

enum class ComponentLabel { hyp, odd, even, nonhyp, unique };

const char* label_name(ComponentLabel l);

// A connected component of a stratum together with the representative
// permutation used by the estimator.
struct Component {
  Stratum stratum;
  ComponentLabel label;
  Permutation representative;

  std::string id() const;  // "H(4)^hyp", "H(3,1)"
};

// Parsed form of the textual stratum syntax "H(4)^hyp" / "Q(1,2,-1,-1,-1)".
struct StratumRef {
  bool is_quadratic = false;
  std::vector<int> orders;
  std::optional<ComponentLabel> label;
};

StratumRef parse_stratum_text(const std::string& text);

}  // namespace spectra
