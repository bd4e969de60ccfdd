#pragma once

#include <vector>

#include "spectra/stratum.hpp"

namespace spectra {

// Components of the genus 2..5 strata with their representative
// permutations. Validated at load: every representative's singularity data
// must reproduce its stratum. Spin labels are data, not computed; the
// estimation suites cross-check them against the published exponent values.
const std::vector<Component>& component_catalog();

// Lookup by textual id ("H(4)^hyp", "H(3,1)"). A missing label resolves
// only when the stratum has a single catalogued component.
const Component& find_component(const std::string& text);

std::vector<const Component*> components_of_genus(int genus);

}  // namespace spectra
