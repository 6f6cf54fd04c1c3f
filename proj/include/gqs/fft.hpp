#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gqs {

using cdouble = std::complex<double>;

std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transform. buf.size() must be a power of two.
// inverse=true applies the conjugate transform and the 1/N normalization.
void fft_pow2(std::vector<cdouble>& buf, bool inverse);

} // namespace gqs
