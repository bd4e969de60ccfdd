#pragma once

namespace spectra {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Format tags written into serialized artifacts.
inline constexpr const char* kRunSchema = "spectra.run.v1";
inline constexpr const char* kReportSchema = "spectra.report.v1";
inline constexpr const char* kCatalogVersion = "catalog.v1";

}  // namespace spectra
