#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "gqs/numtheory.hpp"
#include "gqs/report.hpp"

namespace gqs {

using cdouble = std::complex<double>;

// e(frac) = exp(2*pi*i*frac)
cdouble expi2pi(double frac);

// Sign-normalized fraction num/den, den > 0, gcd(|num|, den) = 1.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    static Rational normalized(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Input to S_N(x, theta) = sum_{t=1..N} e(x t^2/2 + theta t).
// When x is rational the fraction is carried alongside so term phases can be
// reduced in exact integer arithmetic.
struct GaussSumInput {
    std::int64_t n = 1;
    double x = 0.5;
    double theta = 0.0;
    std::optional<Rational> x_rational;

    static GaussSumInput real(std::int64_t n, double x, double theta);
    static GaussSumInput fraction(std::int64_t n, std::int64_t a, std::int64_t q, double theta);
};

// Direct evaluation with pairwise (cascade) accumulation. n = 0 yields 0
// (empty-sum convention used by the decomposition).
cdouble gauss_sum_direct(const GaussSumInput& input);

// |S_q(2a/q, b/q)| in closed form: sqrt(q) for odd q,
// sqrt(q/2) * (1 + (-1)^(a*q/2 + b)) for even q. Requires gcd(a, q) = 1.
double gauss_closed_form_magnitude(std::int64_t q, std::int64_t a, std::int64_t b);

// E(x, theta) = e^{-pi i theta^2/x} erfc(e^{-pi i/4} theta sqrt(pi/x)).
// Continuous in theta on (-1/2, 1/2], E(x, 0) = 1. |E| <= 2.035 for theta >= 0;
// the global supremum over theta < 0 is ~2.3414 (reflected erfc ray).
cdouble error_function_E(double x, double theta);

// cot(pi t) - 1/(pi t) with g(0) = 0; series evaluation near 0.
double g_correction(double t);

struct ParisDecomposition {
    cdouble main_term;  // e^{-pi i theta^2/x + pi i/4}/sqrt(x) * S_M(-1/x, theta/x)
    cdouble mu_term;    // (mu - 1)/2
    cdouble E_term;     // e^{pi i/4}/(2 sqrt(x)) * (E(x,theta) - mu E(x,eps))
    cdouble g_term;     // (i/2) (g(theta) - mu g(eps))
    cdouble residual_R; // direct sum minus the four pieces; |R| < x
    std::int64_t M = 0;
    double epsilon = 0.0;

    cdouble reconstructed() const { return main_term + mu_term + E_term + g_term + residual_R; }
};

// Exact split of S_N(x, theta) with N x + theta = M + epsilon,
// epsilon in (-1/2, 1/2]. Requires 0 < x < 1. M = 0 degenerates to main_term = 0.
ParisDecomposition paris_decompose(const GaussSumInput& input);

// |T| where T = S_N(x,theta) - main_term; guaranteed (and verified) to satisfy
// |T| <= 2.035/sqrt(x) + 3. The inner sum is evaluated through the conjugation
// identity S_M(-1/x, theta/x) = conj(S_M(1/x, -theta/x)) with theta/x wrapped.
double main_term_remainder(const GaussSumInput& input);

// 20.07 sqrt(q) + 3
double explicit_gauss_bound(std::int64_t q);

// Telescoped numeric bound along the Euclid chain of a/q:
//   sqrt(q0) + 2.035 sqrt(q0) sum_{j=1..k+1} 1/sqrt(q_j)
//            + 3 sqrt(q0) sum_{j=1..k} 1/sqrt(q_j) + 3,
// always dominated by the Fibonacci-majorized form 20.07 sqrt(q) + 3.
struct BoundCertificate {
    EuclidChain chain;
    std::vector<double> per_level_terms; // 2.035*sqrt(q_{j-1}/q_j) + 3 per reduction level
    double telescoped_bound = 0.0;
    double explicit_gauss_bound = 0.0;
};

BoundCertificate reduction_certificate(const ReducedFraction& x);

// Sweep specification for one modulus q: every N <= q, a set of coprime
// residues (all of them when sample_a = 0), and a uniform theta grid over
// (-1/2, 1/2].
struct GaussBoundSweep {
    int theta_grid = 16;
    std::vector<double> explicit_thetas; // overrides the grid when nonempty
    std::int64_t sample_a = 0;           // 0 = exhaustive over coprime a
    std::uint64_t seed = 1;
    int workers = 1;
};

VerificationReport verify_gauss_bound(std::int64_t q, const GaussBoundSweep& sweep);

// max over N = 1..n of |S_N| for fixed (a/q, theta), plus the argmax N.
// Used by the sweep engines; Kahan-compensated running sum.
struct PrefixMax {
    double value = 0.0;
    std::int64_t n = 0;
};
PrefixMax gauss_prefix_max(std::int64_t q, std::int64_t a, double theta, std::int64_t n_max);

} // namespace gqs
