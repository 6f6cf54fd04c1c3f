#include "gqs/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gqs {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

const std::vector<cdouble>& twiddles_for(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<cdouble>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cdouble> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        tw[k] = {std::cos(ang), std::sin(ang)};
    }
    return cache.emplace(n, std::move(tw)).first->second;
}

} // namespace

void fft_pow2(std::vector<cdouble>& buf, bool inverse) {
    const std::size_t n = buf.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a nonzero power of two");
    if (n == 1) return;

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(buf[i], buf[j]);
    }

    const auto& tw = twiddles_for(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cdouble w = tw[k * step];
                if (inverse) w = std::conj(w);
                cdouble u = buf[i + k];
                cdouble v = buf[i + k + len / 2] * w;
                buf[i + k] = u + v;
                buf[i + k + len / 2] = u - v;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : buf) z *= inv;
    }
}

} // namespace gqs
