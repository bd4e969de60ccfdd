#pragma once

#include <string>

#include "spectra/cover.hpp"
#include "spectra/harness.hpp"
#include "spectra/lyapunov.hpp"

namespace spectra {

std::string run_record_to_json(const RunRecord& record);
RunRecord run_record_from_json(const std::string& text);

std::string verdicts_to_json(const std::vector<Verdict>& verdicts);

std::string cover_report_to_json(const CoverReport& report, const WSpectrum* w,
                                 const WSplitResult* splits);

}  // namespace spectra
