#pragma once

// Single versioned table of run defaults shared by the library and the CLI.

#include <cstdint>

namespace landau::defaults {

inline constexpr int kSchemaVersion = 1;

// Accuracy.
inline constexpr double kRelTol = 1e-12;
inline constexpr double kAbsTol = 1e-14;
inline constexpr int kMaxTerms = 200000;

// Highest height at which zeta is evaluated on the critical line.
inline constexpr double kZetaCeiling = 500.0;

// Geometry: log(L^2 / (2 pi ell^2)) and the magnetic length.
inline constexpr double kLogRatio = 10.0;
inline constexpr double kEll = 1.0;

// Counting.
inline constexpr std::int64_t kMonteCarloSamples = 1'000'000;
inline constexpr std::uint64_t kSeed = 42;
inline constexpr double kZeroRefineTol = 1e-9;

// Spectrum.
inline constexpr double kPhaseTol = 1e-9;

// Wavefunctions.
inline constexpr double kWindowHalfWidth = 10.0;   // in units of ell
inline constexpr double kQuadratureWindow = 12.0;  // W, in units of ell
inline constexpr int kGridPoints = 200;

// Classical dynamics.
inline constexpr double kIntegratorTol = 1e-12;
inline constexpr int kTrajectorySamples = 1001;

}  // namespace landau::defaults
