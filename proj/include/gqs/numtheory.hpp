#pragma once

#include <cstdint>
#include <vector>

namespace gqs {

// lcm(1, 2, ..., k). Throws on k < 1 or int64 overflow (k > 42).
std::int64_t lcm_range(int k);

// Smallest prime dividing n; equals n iff n is prime. Requires n >= 2.
std::int64_t least_prime_factor(std::int64_t n);

inline bool is_prime(std::int64_t n) { return n >= 2 && least_prime_factor(n) == n; }

// Coprime pair (a, q) with 1 <= a < q, representing the phase slope a/q in (0, 1).
struct ReducedFraction {
    std::int64_t a;
    std::int64_t q;

    ReducedFraction(std::int64_t a_, std::int64_t q_);
    double value() const { return static_cast<double>(a) / static_cast<double>(q); }
};

// Moduli q0 > q1 > ... > 1 produced by q_{j+1} = q_{j-1} mod q_j.
// Adjacent terms are coprime; the last term is 1.
struct EuclidChain {
    std::vector<std::int64_t> terms;
};

EuclidChain euclid_chain(const ReducedFraction& x);

// t reduced mod 1 into the half-open interval (-1/2, 1/2].
double wrap_half_open(double t);

// Partial sum of 1/sqrt(F_j) for j = 1..n with F_1 = F_2 = 1.
// Fibonacci terms are exact (integer recurrence) through F_93, then carried in double.
double fibonacci_zeta_partial(int n);

} // namespace gqs
