#include "spectra/catalog.hpp"

#include <sstream>

#include "spectra/iet.hpp"
#include "spectra/version.hpp"

namespace spectra {

namespace {

// stratum|label|permutation, one entry per line.
// Hyperelliptic components carry the reversal permutations. The remaining
// representatives were selected by seeded random search over irreducible
// permutations with matching singularity data and identified by their
// measured Lyapunov spectra; the acceptance suites re-verify both checks.
constexpr const char* kCatalogTable = R"(catalog.v1
H(2)|hyp|A B C D / D C B A
H(1,1)|hyp|A B C D E / E D C B A
H(4)|hyp|A B C D E F / F E D C B A
H(4)|odd|A B C D E F / D A F C B E
H(3,1)||A B C D E F G / G A E D B F C
H(2,2)|hyp|A B C D E F G / G F E D C B A
H(2,2)|odd|A B C D E F G / E G F A C B D
H(2,1,1)||A B C D E F G H / H A G D B F E C
H(1,1,1,1)||A B C D E F G H I / D I C G B F A H E
H(6)|hyp|A B C D E F G H / H G F E D C B A
H(6)|even|A B C D E F G H / E B F A D H G C
H(6)|odd|A B C D E F G H / C E D A G F H B
H(5,1)||A B C D E F G H I / H A E G D B I F C
H(3,3)|hyp|A B C D E F G H I / I H G F E D C B A
H(3,3)|nonhyp|A B C D E F G H I / I B E D H C G A F
H(4,2)|even|A B C D E F G H I / C G I D B H A F E
H(4,2)|odd|A B C D E F G H I / G E A F B I H D C
H(2,2,2)|even|A B C D E F G H I J / F D C I A J H G E B
H(2,2,2)|odd|A B C D E F G H I J / B H J C I D F E G A
H(3,2,1)||A B C D E F G H I J / G A E I D J F C B H
H(3,1,1,1)||A B C D E F G H I J K / G C B H F J E A D K I
H(2,2,1,1)||A B C D E F G H I J K / D H B K F A I G E C J
H(2,1,1,1,1)||A B C D E F G H I J K L / K J E D A I L G F C H B
H(1,1,1,1,1,1)||A B C D E F G H I J K L M / J I C H K G D M L E B A F
H(8)|hyp|A B C D E F G H I J / J I H G F E D C B A
H(8)|even|A B C D E F G H I J / H B A E D F I G J C
H(8)|odd|A B C D E F G H I J / F I H J G D B E C A
H(5,3)||A B C D E F G H I J K / C J F D K G I H B E A
H(6,2)|even|A B C D E F G H I J K / G E K I D J H A F C B
H(6,2)|odd|A B C D E F G H I J K / G I F C E A H J D K B
H(4,4)|hyp|A B C D E F G H I J K / K J I H G F E D C B A
H(7,1)||A B C D E F G H I J K / K I B J D H C A G F E
H(6,1,1)||A B C D E F G H I J K L / H L D B I A E C F K J G
H(5,2,1)||A B C D E F G H I J K L / H J C L A F D I E G B K
H(5,1,1,1)||A B C D E F G H I J K L M / E A D F H M J C B K I G L
)";

ComponentLabel parse_label(const std::string& text) {
  if (text.empty()) return ComponentLabel::unique;
  if (text == "hyp") return ComponentLabel::hyp;
  if (text == "odd") return ComponentLabel::odd;
  if (text == "even") return ComponentLabel::even;
  if (text == "nonhyp") return ComponentLabel::nonhyp;
  throw CatalogValidationError("unknown catalog label \"" + text + "\"");
}

std::vector<Component> load_catalog() {
  std::istringstream in(kCatalogTable);
  std::string line;
  std::getline(in, line);
  if (line != kCatalogVersion)
    throw CatalogValidationError("unexpected catalog version \"" + line + "\"");
  std::vector<Component> catalog;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto p1 = line.find('|');
    auto p2 = line.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw CatalogValidationError("malformed catalog line: " + line);
    StratumRef ref = parse_stratum_text(line.substr(0, p1));
    Component comp{Stratum::of(ref.orders),
                   parse_label(line.substr(p1 + 1, p2 - p1 - 1)),
                   Permutation::parse(line.substr(p2 + 1))};
    if (!(singularity_data(comp.representative) == comp.stratum))
      throw CatalogValidationError(comp.id() +
                                   ": representative has wrong singularity data");
    catalog.push_back(std::move(comp));
  }
  return catalog;
}

}  // namespace

const std::vector<Component>& component_catalog() {
  static const std::vector<Component> catalog = load_catalog();
  return catalog;
}

const Component& find_component(const std::string& text) {
  StratumRef ref = parse_stratum_text(text);
  if (ref.is_quadratic)
    throw UnknownComponent("catalog holds abelian components only: " + text);
  const Stratum stratum = Stratum::of(ref.orders);
  const Component* found = nullptr;
  for (const Component& c : component_catalog()) {
    if (!(c.stratum == stratum)) continue;
    if (ref.label) {
      if (c.label == *ref.label) return c;
    } else {
      if (found)
        throw UnknownComponent(text + " is ambiguous: give a component label");
      found = &c;
    }
  }
  if (!found) throw UnknownComponent("no catalogued component matches " + text);
  return *found;
}

std::vector<const Component*> components_of_genus(int genus) {
  std::vector<const Component*> out;
  for (const Component& c : component_catalog())
    if (c.stratum.genus() == genus) out.push_back(&c);
  return out;
}

}  // namespace spectra
