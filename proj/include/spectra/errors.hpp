#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Root of every error this toolkit raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- interval exchange / induction ---
struct TieError : Error {
  using Error::Error;
};
struct ReducibleError : Error {
  using Error::Error;
};
struct UnboundedRunError : Error {
  using Error::Error;
};

// --- spectrum estimation ---
struct DegenerateBasisError : Error {
  using Error::Error;
};
struct ZeroLeadError : Error {
  using Error::Error;
};
struct MixedConfigError : Error {
  using Error::Error;
};

// --- strata / catalog ---
struct NonIntegralGenus : Error {
  using Error::Error;
};
struct CatalogValidationError : Error {
  using Error::Error;
};
struct UnknownComponent : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// --- Harder-Narasimhan spectra ---
struct ArityMismatch : Error {
  using Error::Error;
};
struct BoundsOnly : Error {
  using Error::Error;
};

// --- polygons / majorization ---
struct NotSorted : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct SumMismatch : Error {
  using Error::Error;
};
struct NotDoublyStochastic : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct NotUnit : Error {
  using Error::Error;
};
struct MissingConstantTerm : Error {
  using Error::Error;
};
struct EndpointMismatch : Error {
  using Error::Error;
};

// --- covers ---
struct NegativePart : Error {
  using Error::Error;
};
struct NoValidPartition : Error {
  using Error::Error;
};

}  // namespace spectra
