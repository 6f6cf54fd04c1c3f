#include "gqs/numtheory.hpp"
#include "gqs/validation.hpp"

#include <cmath>
#include <numeric>

namespace gqs {

std::int64_t lcm_range(int k) {
    if (k < 1) throw ValidationError("lcm_range.domain", "k must be >= 1");
    if (k > 42) throw ValidationError("lcm_range.overflow", "lcm(1..k) exceeds int64 for k > 42");
    std::int64_t acc = 1;
    for (std::int64_t j = 2; j <= k; ++j) acc = std::lcm(acc, j);
    return acc;
}

std::int64_t least_prime_factor(std::int64_t n) {
    if (n < 2) throw ValidationError("least_prime_factor.domain", "n must be >= 2");
    if (n % 2 == 0) return 2;
    if (n % 3 == 0) return 3;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0) return d;
        if (n % (d + 2) == 0) return d + 2;
    }
    return n;
}

ReducedFraction::ReducedFraction(std::int64_t a_, std::int64_t q_) : a(a_), q(q_) {
    if (q < 2 || a < 1 || a >= q)
        throw ValidationError("fraction.range", "need q >= 2 and 1 <= a < q");
    if (std::gcd(a, q) != 1)
        throw ValidationError("fraction.coprime", "gcd(a, q) must be 1");
}

EuclidChain euclid_chain(const ReducedFraction& x) {
    std::vector<std::int64_t> terms{x.q, x.a % x.q};
    while (terms.back() != 1) {
        std::int64_t next = terms[terms.size() - 2] % terms.back();
        terms.push_back(next);
    }
    return {std::move(terms)};
}

double wrap_half_open(double t) {
    if (!std::isfinite(t))
        throw ValidationError("wrap.domain", "input must be finite");
    double r = t - std::floor(t + 0.5);
    if (r <= -0.5) r += 1.0; // keep the convention half-open at -1/2, closed at +1/2
    return r;
}

double fibonacci_zeta_partial(int n) {
    if (n < 1) throw ValidationError("fib_zeta.domain", "n must be >= 1");
    double sum = 0.0;
    std::uint64_t fj = 1, fj1 = 1;
    double dj = 1.0, dj1 = 1.0;
    bool exact = true;
    for (int j = 1; j <= n; ++j) {
        sum += 1.0 / std::sqrt(exact ? static_cast<double>(fj) : dj);
        if (exact) {
            std::uint64_t next;
            if (__builtin_add_overflow(fj, fj1, &next)) {
                exact = false;
                dj = static_cast<double>(fj1);
                dj1 = static_cast<double>(fj) + static_cast<double>(fj1);
            } else {
                fj = fj1;
                fj1 = next;
            }
        } else {
            double next = dj + dj1;
            dj = dj1;
            dj1 = next;
        }
    }
    return sum;
}

} // namespace gqs
