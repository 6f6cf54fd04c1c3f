#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gqs/fft.hpp"
#include "gqs/sequences.hpp"

namespace gqs {

enum class Engine { Fast, Direct };

struct AnalysisOptions {
    Engine engine = Engine::Fast;
    int workers = 1;
    // Fraction of fast profiles re-checked against the direct engine
    // (must agree to 1e-9 * L elementwise).
    double spot_check_fraction = 0.0;
    std::uint64_t seed = 0;
};

// A_{a,b}(tau, nu): aperiodic ambiguity at integer delay tau and Doppler nu.
// Negative tau is evaluated as conj(A_{b,a}(-tau, -nu)); |tau| >= L yields 0.
cdouble ambiguity(const PolyphaseSequence& a, const PolyphaseSequence& b, std::int64_t tau,
                  std::int64_t nu);

// R_{a,b}(tau) = A_{a,b}(tau, 0); same code path, so the reduction is exact.
cdouble aperiodic_correlation(const PolyphaseSequence& a, const PolyphaseSequence& b,
                              std::int64_t tau);

struct CorrelationProfile {
    std::int64_t length = 0; // L
    std::int64_t nu = 0;     // Doppler used for the modulated profile (0 for plain)
    std::vector<cdouble> values; // index tau + L - 1, tau in [-(L-1), L-1]

    cdouble at(std::int64_t tau) const { return values[static_cast<std::size_t>(tau + length - 1)]; }
};

// Full profile over tau = -(L-1)..(L-1). Fast: zero-padded cyclic convolution
// at the next power of two >= 2L-1. Direct: literal summation (the normative
// oracle for the fast path).
CorrelationProfile correlation_profile(const PolyphaseSequence& a, const PolyphaseSequence& b,
                                       Engine engine = Engine::Fast);

// Profile of (a modulated by e(nu t/L), b). Matches |A_{a,b}(tau, nu)| for all
// tau; on the negative-tau side the complex value differs from A by the unit
// factor e(-nu tau / L).
CorrelationProfile ambiguity_profile(const PolyphaseSequence& a, const PolyphaseSequence& b,
                                     std::int64_t nu, Engine engine = Engine::Fast);

struct WitnessPoint {
    std::int64_t root1 = 0;
    std::int64_t root2 = 0;
    std::int64_t tau = 0;
    std::int64_t nu = 0;
};

struct ToleranceResult {
    double auto_tol = 0.0;
    double cross_tol = 0.0;
    double max_tol = 0.0;
    WitnessPoint witness;       // achieves max_tol
    WitnessPoint auto_witness;  // achieves auto_tol
    WitnessPoint cross_witness; // achieves cross_tol
    std::int64_t profiles = 0;
    std::int64_t spot_checks = 0;
};

// delta_a over members (0 < tau <= L-1) and delta_c over ordered distinct
// pairs (0 <= tau <= L-1). Witness ties break on smallest |tau|, then tau,
// then nu, then (root1, root2). Witnesses are re-evaluated pointwise and must
// reproduce the reported value to 1e-9 relative.
ToleranceResult delta_tolerances(std::span<const PolyphaseSequence> seqs,
                                 const AnalysisOptions& opts = {});
ToleranceResult delta_tolerances(const SequenceSet& set, const AnalysisOptions& opts = {});

// theta tolerances over the open window tau in (-z_x, z_x), nu in (-z_y, z_y);
// (0,0) is excluded for auto terms only.
ToleranceResult theta_tolerances(std::span<const PolyphaseSequence> seqs, const LazRegion& laz,
                                 const AnalysisOptions& opts = {});
ToleranceResult theta_tolerances(const SequenceSet& set, const LazRegion& laz,
                                 const AnalysisOptions& opts = {});

// L sqrt((K-1) / (K(2L-1) - 1)); 0 when K = 1.
double welch_bound(std::int64_t L, std::int64_t K);

// |sum_{t=0}^{N-1-tau} e(-r tau t / N)| = |sin(pi r tau^2/N) / sin(pi r tau/N)|,
// with the removable singularity r tau = 0 (mod N) returning the direct count N - tau.
double t_sum_magnitude(std::int64_t N, std::int64_t r, std::int64_t tau);

struct BrMax {
    double value = 0.0;
    std::int64_t tau = 0;
};
// Brute-force max of |T_N(r, tau)| over tau = 1..N-1.
BrMax b_r_search(std::int64_t N, std::int64_t r);

// CSV rows (tau, nu, re, im, magnitude) at 17 significant digits.
void emit_profile(const CorrelationProfile& profile, const std::string& path);

} // namespace gqs
