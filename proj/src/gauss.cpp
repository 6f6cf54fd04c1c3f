#include "gqs/gauss.hpp"

#include <cmath>
#include <numeric>

#include "gqs/parallel.hpp"
#include "gqs/rng.hpp"
#include "gqs/validation.hpp"

namespace gqs {

cdouble expi2pi(double frac) {
    const double ang = 2.0 * M_PI * frac;
    return {std::cos(ang), std::sin(ang)};
}

Rational Rational::normalized(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValidationError("rational.zero_den", "denominator must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

GaussSumInput GaussSumInput::real(std::int64_t n, double x, double theta) {
    GaussSumInput in;
    in.n = n;
    in.x = x;
    in.theta = theta;
    return in;
}

GaussSumInput GaussSumInput::fraction(std::int64_t n, std::int64_t a, std::int64_t q, double theta) {
    if (q < 1) throw ValidationError("gauss.fraction", "q must be >= 1");
    GaussSumInput in;
    in.n = n;
    in.x_rational = Rational::normalized(a, q);
    in.x = in.x_rational->value();
    in.theta = theta;
    return in;
}

namespace {

// x t^2/2 reduced mod 1 via integer arithmetic: (num (t^2 mod 2 den) mod 2 den)/(2 den).
double rational_quad_frac(const Rational& r, std::int64_t t) {
    const std::int64_t m = 2 * r.den;
    const std::int64_t tm = t % m;
    const std::int64_t sq = (tm * tm) % m;
    const std::int64_t nm = ((r.num % m) + m) % m;
    return static_cast<double>((nm * sq) % m) / static_cast<double>(m);
}

double term_frac(const GaussSumInput& in, std::int64_t t) {
    const double lin = std::fmod(in.theta * static_cast<double>(t), 1.0);
    if (in.x_rational) return rational_quad_frac(*in.x_rational, t) + lin;
    const double ft = static_cast<double>(t);
    return std::fmod(0.5 * in.x * ft * ft, 1.0) + lin;
}

cdouble pairwise_sum(const cdouble* p, std::size_t n) {
    if (n <= 32) {
        cdouble s{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) s += p[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(p, h) + pairwise_sum(p + h, n - h);
}

constexpr double kRayBranchRadius = 4.5;

// erfc(s e^{-i pi/4}) for 0 <= s <= branch radius: erf Taylor series in
// long double to absorb the cancellation (partial sums grow like e^{s^2}).
cdouble erfc_ray_taylor(double s) {
    using cl = std::complex<long double>;
    const long double sl = static_cast<long double>(s);
    const long double inv_sqrt2 = 0.7071067811865475244008443621048490393L;
    const cl z(sl * inv_sqrt2, -sl * inv_sqrt2);
    const cl mult(0.0L, sl * sl); // -z^2 = i s^2
    cl term = z;                  // (-1)^r z^{2r+1} / r!
    cl sum = term;                // / (2r+1) applied per term
    for (int r = 1; r < 600; ++r) {
        term *= mult / static_cast<long double>(r);
        const cl contrib = term / static_cast<long double>(2 * r + 1);
        sum += contrib;
        if (std::abs(contrib) < 1e-22L * (1.0L + std::abs(sum))) break;
    }
    const long double two_over_sqrt_pi = 1.1283791670955125738961589031215452L;
    const cl erf_val = two_over_sqrt_pi * sum;
    const cl result = cl(1.0L, 0.0L) - erf_val;
    return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

// erfc(s e^{-i pi/4}) for s above the branch radius via the optimally
// truncated asymptotic series. frac_s2 = s^2/(2 pi) mod 1 supplies the
// oscillatory factor e^{-z^2} = e^{i s^2} without large-angle reduction loss.
cdouble erfc_ray_asymptotic(double s, double frac_s2) {
    const double s2 = s * s;
    cdouble term{1.0, 0.0}; // a_0
    cdouble sum = term;
    double prev_mag = 1.0;
    for (int r = 1; r < 400; ++r) {
        // a_r = a_{r-1} * (-i (2r-1) / (2 s^2))
        term *= cdouble(0.0, -1.0) * (static_cast<double>(2 * r - 1) / (2.0 * s2));
        const double mag = std::abs(term);
        if (mag >= prev_mag) break; // optimal truncation point
        sum += term;
        prev_mag = mag;
        if (mag < 1e-20) break;
    }
    const cdouble phase = expi2pi(frac_s2);                  // e^{-z^2}
    const cdouble inv_z = expi2pi(0.125) / s;                // 1/z = e^{i pi/4}/s
    return phase * inv_z * sum / std::sqrt(M_PI);
}

cdouble erfc_ray(double s, double frac_s2) {
    if (s <= kRayBranchRadius) return erfc_ray_taylor(s);
    return erfc_ray_asymptotic(s, frac_s2);
}

} // namespace

cdouble gauss_sum_direct(const GaussSumInput& in) {
    if (in.n < 0) throw ValidationError("gauss.domain", "n must be >= 0");
    if (!std::isfinite(in.x) || !std::isfinite(in.theta))
        throw ValidationError("gauss.domain", "x and theta must be finite");
    if (in.n == 0) return {0.0, 0.0};
    std::vector<cdouble> terms(static_cast<std::size_t>(in.n));
    for (std::int64_t t = 1; t <= in.n; ++t)
        terms[static_cast<std::size_t>(t - 1)] = expi2pi(term_frac(in, t));
    return pairwise_sum(terms.data(), terms.size());
}

double gauss_closed_form_magnitude(std::int64_t q, std::int64_t a, std::int64_t b) {
    if (q < 1) throw ValidationError("gauss.closed_form", "q must be >= 1");
    const std::int64_t aa = a % q;
    if (std::gcd(aa < 0 ? -aa : aa, q) != 1 && q > 1)
        throw ValidationError("gauss.closed_form", "gcd(a, q) must be 1");
    if (q % 2 == 1) return std::sqrt(static_cast<double>(q));
    const std::int64_t exponent = a * (q / 2) + b;
    const double sign = (exponent % 2 == 0) ? 1.0 : -1.0;
    return std::sqrt(static_cast<double>(q) / 2.0) * (1.0 + sign);
}

cdouble error_function_E(double x, double theta) {
    if (!(x > 0.0 && x < 1.0))
        throw ValidationError("gauss.E.domain", "x must lie in (0,1)");
    const double t = wrap_half_open(theta);
    const double at = std::abs(t);
    const double s = at * std::sqrt(M_PI / x);
    const double frac_s2 = std::fmod(t * t / (2.0 * x), 1.0); // s^2/(2 pi) mod 1
    const cdouble ray = erfc_ray(s, frac_s2);
    const cdouble pre = expi2pi(-frac_s2); // e^{-pi i t^2/x}
    if (t >= 0.0) return pre * ray;
    return pre * (2.0 - ray);
}

double g_correction(double t) {
    if (t == 0.0) return 0.0;
    const double y = M_PI * t;
    if (std::abs(y) < 1e-3) {
        const double y2 = y * y;
        return -y / 3.0 * (1.0 + y2 / 15.0 + 2.0 * y2 * y2 / 315.0);
    }
    return std::cos(y) / std::sin(y) - 1.0 / y;
}

ParisDecomposition paris_decompose(const GaussSumInput& in) {
    if (!(in.x > 0.0 && in.x < 1.0))
        throw ValidationError("paris.domain", "x must lie in (0,1)");
    if (in.n < 1) throw ValidationError("paris.domain", "n must be >= 1");

    const double theta = wrap_half_open(in.theta);
    double v;
    if (in.x_rational)
        v = static_cast<double>(in.n * in.x_rational->num) / static_cast<double>(in.x_rational->den) +
            theta;
    else
        v = static_cast<double>(in.n) * in.x + theta;
    const double eps = wrap_half_open(v);
    const auto big_m = static_cast<std::int64_t>(std::llround(v - eps));

    double mu_frac;
    if (in.x_rational)
        mu_frac = rational_quad_frac(*in.x_rational, in.n) +
                  std::fmod(theta * static_cast<double>(in.n), 1.0);
    else
        mu_frac = std::fmod(0.5 * in.x * static_cast<double>(in.n) * static_cast<double>(in.n), 1.0) +
                  std::fmod(theta * static_cast<double>(in.n), 1.0);
    const cdouble mu = expi2pi(mu_frac);

    cdouble main{0.0, 0.0};
    if (big_m > 0) {
        // S_M(-1/x, theta/x) = conj(S_M(1/x, -theta/x)); linear phase wrapped
        GaussSumInput inner;
        inner.n = big_m;
        inner.x = 1.0 / in.x;
        inner.theta = wrap_half_open(-theta / in.x);
        if (in.x_rational)
            inner.x_rational = Rational::normalized(in.x_rational->den, in.x_rational->num);
        const cdouble s_inner = std::conj(gauss_sum_direct(inner));
        const double pre_frac = std::fmod(-theta * theta / (2.0 * in.x), 1.0);
        main = expi2pi(pre_frac) * expi2pi(0.125) * s_inner / std::sqrt(in.x);
    }

    const cdouble mu_term = (mu - cdouble{1.0, 0.0}) * 0.5;
    const cdouble e_term = expi2pi(0.125) / (2.0 * std::sqrt(in.x)) *
                           (error_function_E(in.x, theta) - mu * error_function_E(in.x, eps));
    const cdouble g_term = cdouble{0.0, 0.5} * (g_correction(theta) - mu * g_correction(eps));

    GaussSumInput wrapped = in;
    wrapped.theta = theta;
    const cdouble direct = gauss_sum_direct(wrapped);

    ParisDecomposition out;
    out.main_term = main;
    out.mu_term = mu_term;
    out.E_term = e_term;
    out.g_term = g_term;
    out.residual_R = direct - (main + mu_term + e_term + g_term);
    out.M = big_m;
    out.epsilon = eps;
    return out;
}

double main_term_remainder(const GaussSumInput& in) {
    const ParisDecomposition pd = paris_decompose(in);
    return std::abs(pd.mu_term + pd.E_term + pd.g_term + pd.residual_R);
}

double explicit_gauss_bound(std::int64_t q) {
    if (q < 2) throw ValidationError("gauss_bound.domain", "q must be >= 2");
    return 20.07 * std::sqrt(static_cast<double>(q)) + 3.0;
}

BoundCertificate reduction_certificate(const ReducedFraction& x) {
    BoundCertificate cert;
    cert.chain = euclid_chain(x);
    const auto& terms = cert.chain.terms;
    const double sq0 = std::sqrt(static_cast<double>(terms[0]));

    double sum_all = 0.0;  // 1/sqrt(q_j) for j = 1..k+1
    double sum_inner = 0.0; // 1/sqrt(q_j) for j = 1..k
    for (std::size_t j = 1; j < terms.size(); ++j) {
        const double inv = 1.0 / std::sqrt(static_cast<double>(terms[j]));
        sum_all += inv;
        if (j + 1 < terms.size()) sum_inner += inv;
        cert.per_level_terms.push_back(
            2.035 * std::sqrt(static_cast<double>(terms[j - 1]) / static_cast<double>(terms[j])) + 3.0);
    }
    cert.telescoped_bound = sq0 + 2.035 * sq0 * sum_all + 3.0 * sq0 * sum_inner + 3.0;
    cert.explicit_gauss_bound = gqs::explicit_gauss_bound(x.q);
    return cert;
}

PrefixMax gauss_prefix_max(std::int64_t q, std::int64_t a, double theta, std::int64_t n_max) {
    const std::int64_t m = 2 * q;
    const std::int64_t am = ((a % m) + m) % m;
    double sr = 0.0, si = 0.0; // Kahan-compensated running sum
    double cr = 0.0, ci = 0.0;
    double best = -1.0;
    std::int64_t best_n = 0;
    for (std::int64_t t = 1; t <= n_max; ++t) {
        const std::int64_t tm = t % m;
        const std::int64_t sq = (tm * tm) % m;
        const double frac = static_cast<double>((am * sq) % m) / static_cast<double>(m) +
                            std::fmod(theta * static_cast<double>(t), 1.0);
        const double ang = 2.0 * M_PI * frac;
        const double re = std::cos(ang), im = std::sin(ang);

        double y = re - cr;
        double tt = sr + y;
        cr = (tt - sr) - y;
        sr = tt;
        y = im - ci;
        tt = si + y;
        ci = (tt - si) - y;
        si = tt;

        const double mag2 = sr * sr + si * si;
        if (mag2 > best) {
            best = mag2;
            best_n = t;
        }
    }
    return {std::sqrt(best), best_n};
}

VerificationReport verify_gauss_bound(std::int64_t q, const GaussBoundSweep& sweep) {
    if (q < 2) throw ValidationError("gauss_bound.domain", "q must be >= 2");
    if (sweep.theta_grid < 1 && sweep.explicit_thetas.empty())
        throw ValidationError("gauss_bound.empty_sweep", "theta grid must have at least one point");

    std::vector<std::int64_t> a_values;
    for (std::int64_t a = 1; a < q; ++a)
        if (std::gcd(a, q) == 1) a_values.push_back(a);
    if (sweep.sample_a > 0 && sweep.sample_a < static_cast<std::int64_t>(a_values.size())) {
        auto rng = task_rng(sweep.seed, static_cast<std::uint64_t>(q));
        std::vector<std::int64_t> sampled;
        std::vector<std::int64_t> pool = a_values;
        for (std::int64_t i = 0; i < sweep.sample_a; ++i) {
            const auto idx = static_cast<std::size_t>(rng_below(rng, pool.size()));
            sampled.push_back(pool[idx]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
        }
        a_values = std::move(sampled);
    }
    if (a_values.empty())
        throw ValidationError("gauss_bound.empty_sweep", "no coprime residues to sweep");

    std::vector<double> thetas = sweep.explicit_thetas;
    if (thetas.empty()) {
        thetas.resize(static_cast<std::size_t>(sweep.theta_grid));
        for (int j = 0; j < sweep.theta_grid; ++j)
            thetas[static_cast<std::size_t>(j)] =
                static_cast<double>(j + 1) / sweep.theta_grid - 0.5;
    }

    struct Best {
        double value = -1.0;
        std::int64_t n = 0, a = 0;
        double theta = 0.0;
    };
    const auto better = [](const Best& lhs, const Best& rhs) {
        if (rhs.value != lhs.value) return rhs.value > lhs.value ? rhs : lhs;
        const auto key = [](const Best& b) { return std::tuple(b.n, b.a, b.theta); };
        return key(rhs) < key(lhs) ? rhs : lhs;
    };

    const auto n_tasks = static_cast<std::int64_t>(a_values.size() * thetas.size());
    const Best best = parallel_reduce(
        n_tasks, sweep.workers, Best{},
        [&](std::int64_t i) {
            const std::int64_t a = a_values[static_cast<std::size_t>(i) / thetas.size()];
            const double theta = thetas[static_cast<std::size_t>(i) % thetas.size()];
            const PrefixMax pm = gauss_prefix_max(q, a, theta, q);
            return Best{pm.value, pm.n, a, theta};
        },
        better);

    const double bound = explicit_gauss_bound(q);
    VerificationReport report;
    report.target = "gauss_bound";
    report.params = {{"q", q},
                     {"theta_grid", sweep.theta_grid},
                     {"exhaustive_a", sweep.sample_a == 0},
                     {"n_max", q}};
    report.bound_name = "20.07*sqrt(q)+3";
    report.bound_value = bound;
    report.observed_max = best.value;
    report.witness = {{"q", q}, {"N", best.n}, {"a", best.a}, {"theta", best.theta}};
    report.pass = best.value < bound;
    report.stats = {{"samples", n_tasks * q},
                    {"max_ratio_sqrt_q", best.value / std::sqrt(static_cast<double>(q))}};
    report.seed = sweep.seed;
    return report;
}

} // namespace gqs
