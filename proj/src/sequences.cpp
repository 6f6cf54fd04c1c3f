#include "gqs/sequences.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gqs/gauss.hpp"
#include "gqs/numtheory.hpp"
#include "gqs/validation.hpp"

namespace gqs {

const char* family_name(Family f) {
    switch (f) {
        case Family::ChuOdd: return "chu_odd";
        case Family::ChuEven: return "chu_even";
        case Family::Alltop: return "alltop";
        case Family::Raw: return "raw";
    }
    return "raw";
}

const char* set_kind_name(SetKind k) {
    switch (k) {
        case SetKind::C1: return "C1";
        case SetKind::C2: return "C2";
        case SetKind::A1: return "A1";
        case SetKind::A2: return "A2";
    }
    return "C1";
}

PolyphaseSequence chu(std::int64_t L, std::int64_t r) {
    if (L < 2) throw ValidationError("chu.length", "L must be >= 2");
    if (r < 1 || r > L - 1) throw ValidationError("chu.root_range", "need 1 <= r <= L-1");
    PolyphaseSequence seq;
    seq.length = L;
    seq.root = r;
    seq.family = (L % 2 == 1) ? Family::ChuOdd : Family::ChuEven;
    seq.samples.resize(static_cast<std::size_t>(L));
    const std::int64_t m = 2 * L;
    const std::int64_t rm = ((r % m) + m) % m;
    for (std::int64_t t = 0; t < L; ++t) {
        const std::int64_t quad = (L % 2 == 1) ? (t * (t - 1)) % m : (t * t) % m;
        const double frac = static_cast<double>((rm * quad) % m) / static_cast<double>(m);
        seq.samples[static_cast<std::size_t>(t)] = expi2pi(frac);
    }
    return seq;
}

PolyphaseSequence alltop(std::int64_t p, std::int64_t r) {
    if (p < 5) throw ValidationError("alltop.modulus_too_small", "p must be >= 5");
    if (!is_prime(p)) throw ValidationError("alltop.modulus_not_prime", "p must be prime");
    PolyphaseSequence seq;
    seq.length = p;
    seq.root = r;
    seq.family = Family::Alltop;
    seq.samples.resize(static_cast<std::size_t>(p));
    const std::int64_t rm = ((r % p) + p) % p;
    for (std::int64_t t = 0; t < p; ++t) {
        const std::int64_t cube = ((t * t) % p) * t % p;
        const double frac = static_cast<double>((cube + rm * t) % p) / static_cast<double>(p);
        seq.samples[static_cast<std::size_t>(t)] = expi2pi(frac);
    }
    return seq;
}

namespace {

void check_c1_root_gcds(const std::vector<std::int64_t>& roots, std::int64_t L) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            std::int64_t d = ((roots[i] - roots[j]) % L + L) % L;
            if (std::gcd(d, L) != 1)
                throw ValidationError("c1.root_gcd",
                                      "root difference shares a factor with L");
        }
}

} // namespace

SequenceSet build_C1(std::int64_t K, std::int64_t L) {
    if (K < 2 || K % 2 != 0) throw ValidationError("c1.k_even", "K must be an even integer >= 2");
    if (L % 2 == 0) throw ValidationError("c1.l_odd", "L must be odd");
    const std::int64_t delta = lcm_range(static_cast<int>(K / 2));
    if ((L - 1) % delta != 0)
        throw ValidationError("c1.congruence", "L must be 1 mod lcm(1..K/2)");
    if (least_prime_factor(L) <= K)
        throw ValidationError("c1.least_prime_factor", "least prime factor of L must exceed K");

    std::vector<std::int64_t> roots;
    for (std::int64_t a = 1; a <= K / 2; ++a) roots.push_back((L - 1) / a);
    for (std::int64_t a = 1; a <= K / 2; ++a) roots.push_back(L - (L - 1) / a);
    check_c1_root_gcds(roots, L);

    SequenceSet set;
    set.kind = SetKind::C1;
    set.K = K;
    set.modulus = L;
    set.small_modulus_warning = L < 10 * K * K;
    for (std::int64_t r : roots) set.members.push_back(chu(L, r));
    return set;
}

SequenceSet build_C2(std::int64_t K, std::int64_t m, std::int64_t L) {
    if (K < 2) throw ValidationError("c2.k_range", "K must be >= 2");
    if (m < 1) throw ValidationError("c2.m_range", "m must be >= 1");
    if (L % 2 == 0) throw ValidationError("c2.l_odd", "L must be odd");
    const std::int64_t modui = 2 * m * lcm_range(static_cast<int>(K));
    if ((L - 1) % modui != 0)
        throw ValidationError("c2.congruence", "L must be 1 mod 2m*lcm(1..K)");
    if (K + K * m > L - 1)
        throw ValidationError("c2.roots_exceed_modulus", "largest root K+Km must stay below L");

    SequenceSet set;
    set.kind = SetKind::C2;
    set.K = K;
    set.m = m;
    set.modulus = L;
    set.small_modulus_warning = L < 10 * K * K;
    for (std::int64_t j = 1; j <= K; ++j) set.members.push_back(chu(L, K + j * m));

    const std::int64_t denom = (2 * m + 3) * K;
    const std::int64_t zx = (L + denom - 1) / denom - 1; // ceil(L/denom) - 1
    const std::int64_t zy = K - 1;
    if (zx >= 1 && zy >= 1) set.laz = LazRegion{zx, zy};
    return set;
}

SequenceSet build_A1(std::int64_t p) {
    if (p < 5 || !is_prime(p))
        throw ValidationError("a1.modulus", "p must be a prime >= 5");
    SequenceSet set;
    set.kind = SetKind::A1;
    set.K = p;
    set.modulus = p;
    for (std::int64_t r = 1; r <= p; ++r) set.members.push_back(alltop(p, r));
    return set;
}

SequenceSet build_A2(std::int64_t p, std::int64_t K) {
    if (p < 5 || !is_prime(p))
        throw ValidationError("a2.modulus", "p must be a prime >= 5");
    if (K < 2 || K >= p) throw ValidationError("a2.k_range", "need 2 <= K < p");
    const std::int64_t step = p / K;
    SequenceSet set;
    set.kind = SetKind::A2;
    set.K = K;
    set.modulus = p;
    for (std::int64_t j = 1; j <= K; ++j) set.members.push_back(alltop(p, j * step));
    const std::int64_t zx = p - 1;
    const std::int64_t zy = step - 1;
    if (zx >= 1 && zy >= 1) set.laz = LazRegion{zx, zy};
    return set;
}

namespace {
constexpr std::int64_t kSearchSpan = 10'000'000;
}

std::int64_t find_C1_modulus(std::int64_t K, std::int64_t L_min) {
    if (K < 2 || K % 2 != 0) throw ValidationError("c1.k_even", "K must be an even integer >= 2");
    const std::int64_t delta = lcm_range(static_cast<int>(K / 2));
    for (std::int64_t L = std::max<std::int64_t>(L_min, 3); L <= L_min + kSearchSpan; ++L) {
        if (L % 2 == 0) continue;
        if ((L - 1) % delta != 0) continue;
        if (least_prime_factor(L) <= K) continue;
        return L;
    }
    throw ValidationError("c1.search_cap", "no qualifying modulus within the search span");
}

std::int64_t find_C2_modulus(std::int64_t K, std::int64_t m, std::int64_t L_min) {
    if (K < 2) throw ValidationError("c2.k_range", "K must be >= 2");
    if (m < 1) throw ValidationError("c2.m_range", "m must be >= 1");
    const std::int64_t modui = 2 * m * lcm_range(static_cast<int>(K));
    for (std::int64_t L = std::max<std::int64_t>(L_min, 3); L <= L_min + kSearchSpan; ++L) {
        if (L % 2 == 0) continue;
        if ((L - 1) % modui != 0) continue;
        if (K + K * m > L - 1) continue;
        return L;
    }
    throw ValidationError("c2.search_cap", "no qualifying modulus within the search span");
}

std::int64_t find_alltop_prime(std::int64_t p_min) {
    for (std::int64_t p = std::max<std::int64_t>(p_min, 5); p <= std::max<std::int64_t>(p_min, 5) + kSearchSpan; ++p)
        if (is_prime(p)) return p;
    throw ValidationError("alltop.search_cap", "no prime within the search span");
}

void write_sequence_csv(const PolyphaseSequence& seq, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fputs("t,re,im\n", f);
    for (std::int64_t t = 0; t < seq.length; ++t) {
        const cdouble& z = seq.samples[static_cast<std::size_t>(t)];
        std::fprintf(f, "%" PRId64 ",%.17g,%.17g\n", t, z.real(), z.imag());
    }
    std::fclose(f);

    nlohmann::json sidecar = {{"family", family_name(seq.family)},
                              {"length", seq.length},
                              {"root", seq.root}};
    std::ofstream out(path + ".json");
    if (!out) throw std::runtime_error("cannot open for writing: " + path + ".json");
    out << sidecar.dump(2) << '\n';
}

PolyphaseSequence load_sequence_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    std::getline(in, line); // header
    PolyphaseSequence seq;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::int64_t t = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%" SCNd64 ",%lg,%lg", &t, &re, &im) != 3)
            throw std::runtime_error("malformed row in " + path + ": " + line);
        seq.samples.emplace_back(re, im);
    }
    seq.length = static_cast<std::int64_t>(seq.samples.size());

    std::ifstream side(path + ".json");
    if (side) {
        nlohmann::json j;
        side >> j;
        const std::string fam = j.value("family", "raw");
        if (fam == "chu_odd") seq.family = Family::ChuOdd;
        else if (fam == "chu_even") seq.family = Family::ChuEven;
        else if (fam == "alltop") seq.family = Family::Alltop;
        else seq.family = Family::Raw;
        seq.root = j.value("root", static_cast<std::int64_t>(0));
        seq.length = j.value("length", seq.length);
    }
    return seq;
}

} // namespace gqs
