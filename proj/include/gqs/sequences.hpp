#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gqs {

using cdouble = std::complex<double>;

enum class Family { ChuOdd, ChuEven, Alltop, Raw };
enum class SetKind { C1, C2, A1, A2 };

const char* family_name(Family f);
const char* set_kind_name(SetKind k);

// Unit-modulus polyphase sequence. Root labels are stored unreduced and only
// reduced modulo the length when samples are generated.
struct PolyphaseSequence {
    std::int64_t length = 0;
    std::int64_t root = 0;
    Family family = Family::Raw;
    std::vector<cdouble> samples;
};

// Integer delay/Doppler window: the low ambiguity zone is the open rectangle
// tau in (-z_x, z_x), nu in (-z_y, z_y).
struct LazRegion {
    std::int64_t z_x = 1;
    std::int64_t z_y = 1;
};

struct SequenceSet {
    SetKind kind = SetKind::C1;
    std::int64_t K = 0;
    std::int64_t m = 0;       // C2 spacing parameter; 0 otherwise
    std::int64_t modulus = 0; // L for Chu sets, p for Alltop sets
    std::vector<PolyphaseSequence> members;
    std::optional<LazRegion> laz;
    bool small_modulus_warning = false;
};

// Chu sequence of length L >= 2, root 1 <= r <= L-1:
// e(r t(t-1) / 2L) for odd L, e(r t^2 / 2L) for even L.
PolyphaseSequence chu(std::int64_t L, std::int64_t r);

// Alltop sequence over prime p >= 5: e((t^3 + r t)/p), root reduced mod p.
PolyphaseSequence alltop(std::int64_t p, std::int64_t r);

// K even, L odd, L = 1 (mod lcm(1..K/2)), least prime factor of L > K.
// Roots {(L-1)/a} union {L - (L-1)/a} for a = 1..K/2. Root differences are
// validated coprime to L at build time.
SequenceSet build_C1(std::int64_t K, std::int64_t L);

// L odd with L = 1 (mod 2m lcm(1..K)); roots {K + jm : j = 1..K};
// LAZ z_x = ceil(L/((2m+3)K)) - 1, z_y = K - 1.
SequenceSet build_C2(std::int64_t K, std::int64_t m, std::int64_t L);

// Full Alltop set, roots 1..p (root p aliases root 0).
SequenceSet build_A1(std::int64_t p);

// Alltop subset with roots j*floor(p/K) for j = 1..K, 2 <= K < p;
// LAZ z_x = p - 1, z_y = floor(p/K) - 1.
SequenceSet build_A2(std::int64_t p, std::int64_t K);

// Smallest qualifying modulus at or above the floor; throws not-found past
// floor + 10^7.
std::int64_t find_C1_modulus(std::int64_t K, std::int64_t L_min);
std::int64_t find_C2_modulus(std::int64_t K, std::int64_t m, std::int64_t L_min);
std::int64_t find_alltop_prime(std::int64_t p_min);

// CSV export with (t, re, im) rows at 17 significant digits plus a JSON
// sidecar (family, length, root) at <path>.json; load reverses bit-exactly.
void write_sequence_csv(const PolyphaseSequence& seq, const std::string& path);
PolyphaseSequence load_sequence_csv(const std::string& path);

} // namespace gqs
