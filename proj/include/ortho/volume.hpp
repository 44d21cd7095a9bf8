#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/orthoscheme.hpp"

namespace ortho {

enum class VolumeMethod { SchlafliIntegral, MonteCarlo };

const char* to_string(VolumeMethod m);

struct VolumeEstimate {
    double value = 0.0;
    VolumeMethod method = VolumeMethod::SchlafliIntegral;
    double error = 0.0;        // quadrature error bound + tail bound, or MC standard error
    long long count = 0;       // integrand evaluations, or MC samples
    std::uint64_t seed = 0;    // MC only
    double tail_cutoff = 0.0;  // Schlafli only: integration truncated at this h
    double tail_bound = 0.0;   // Schlafli only: bound on the dropped tail, < 1e-9
};

// V(h) = -integral of dV/dh from h to infinity, anchored at V(inf) = 0.
// Splits at the Lambert threshold for r > 1; the far range is integrated in
// reciprocal coordinates up to a cutoff H whose tail envelope is below 1e-9.
// Requires h > 1; use the Monte-Carlo oracle below 1.
VolumeEstimate volume_schlafli(const OrthoschemeParams& p, double tol = 1e-9);

// Rejection sampling over the bounding box of the truncated polytope with the
// projective-ball density (1 - |x|^2)^-2. Rejects configurations with ideal
// vertices, where the integrand is unbounded. Deterministic for a fixed seed
// and sample count; the stream is partitioned into fixed blocks so any thread
// count reproduces the serial result bit for bit.
VolumeEstimate volume_montecarlo(const OrthoschemeParams& p, long long samples,
                                 std::uint64_t seed, int threads = 1);

struct SweepRow {
    double h = 0.0;
    CombinatorialType regime = CombinatorialType::OrdinaryOrthoscheme;
    double dv_dh = 0.0;        // NaN when h <= 1
    double volume = 0.0;       // NaN when no method applies
    std::string method;        // "schlafli", "montecarlo" or "none"
    double error = 0.0;        // NaN when method is "none"
    std::string note;          // per-row diagnostics; empty when clean
};

// One row per grid value; the grid must be strictly increasing. h > 1 rows use
// the Schlafli integral (the ideal apex row by its one-sided limit), rows
// below 1 the Monte-Carlo oracle. Row-level failures are recorded in `note`
// and the sweep continues.
std::vector<SweepRow> sweep(double r, double theta, const std::vector<double>& h_grid,
                            long long mc_samples = 100000, std::uint64_t seed = 1);

} // namespace ortho
