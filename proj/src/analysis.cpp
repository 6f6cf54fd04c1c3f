#include "gqs/analysis.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "gqs/gauss.hpp"
#include "gqs/parallel.hpp"
#include "gqs/rng.hpp"
#include "gqs/validation.hpp"

namespace gqs {

namespace {

void check_lengths(const PolyphaseSequence& a, const PolyphaseSequence& b) {
    if (a.length != b.length || a.length < 1)
        throw ValidationError("analysis.length_mismatch", "sequences must share a positive length");
}

cdouble doppler_factor(std::int64_t nu, std::int64_t t, std::int64_t L) {
    const std::int64_t r = (((nu % L) * (t % L)) % L + L) % L;
    return expi2pi(static_cast<double>(r) / static_cast<double>(L));
}

} // namespace

cdouble ambiguity(const PolyphaseSequence& a, const PolyphaseSequence& b, std::int64_t tau,
                  std::int64_t nu) {
    check_lengths(a, b);
    const std::int64_t L = a.length;
    if (tau >= L || tau <= -L) return {0.0, 0.0};
    if (tau < 0) return std::conj(ambiguity(b, a, -tau, -nu));
    cdouble s{0.0, 0.0};
    for (std::int64_t t = 0; t <= L - 1 - tau; ++t)
        s += a.samples[static_cast<std::size_t>(t)] *
             std::conj(b.samples[static_cast<std::size_t>(t + tau)]) * doppler_factor(nu, t, L);
    return s;
}

cdouble aperiodic_correlation(const PolyphaseSequence& a, const PolyphaseSequence& b,
                              std::int64_t tau) {
    return ambiguity(a, b, tau, 0);
}

namespace {

CorrelationProfile profile_direct(const PolyphaseSequence& a, const PolyphaseSequence& b) {
    const std::int64_t L = a.length;
    CorrelationProfile p;
    p.length = L;
    p.values.assign(static_cast<std::size_t>(2 * L - 1), {0.0, 0.0});
    for (std::int64_t tau = 0; tau <= L - 1; ++tau) {
        cdouble pos{0.0, 0.0}, neg{0.0, 0.0};
        for (std::int64_t t = 0; t <= L - 1 - tau; ++t) {
            pos += a.samples[static_cast<std::size_t>(t)] *
                   std::conj(b.samples[static_cast<std::size_t>(t + tau)]);
            neg += a.samples[static_cast<std::size_t>(t + tau)] *
                   std::conj(b.samples[static_cast<std::size_t>(t)]);
        }
        p.values[static_cast<std::size_t>(tau + L - 1)] = pos;
        p.values[static_cast<std::size_t>(L - 1 - tau)] = neg;
    }
    return p;
}

CorrelationProfile profile_fast(const PolyphaseSequence& a, const PolyphaseSequence& b) {
    const std::int64_t L = a.length;
    const std::size_t M = next_pow2(static_cast<std::size_t>(2 * L - 1));
    std::vector<cdouble> fa(M, {0.0, 0.0}), fb(M, {0.0, 0.0});
    std::copy(a.samples.begin(), a.samples.end(), fa.begin());
    std::copy(b.samples.begin(), b.samples.end(), fb.begin());
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t j = 0; j < M; ++j) fa[j] *= std::conj(fb[j]);
    fft_pow2(fa, true);

    CorrelationProfile p;
    p.length = L;
    p.values.resize(static_cast<std::size_t>(2 * L - 1));
    for (std::int64_t tau = -(L - 1); tau <= L - 1; ++tau) {
        const std::size_t idx = static_cast<std::size_t>(
            ((static_cast<std::int64_t>(M) - tau) % static_cast<std::int64_t>(M)) %
            static_cast<std::int64_t>(M));
        p.values[static_cast<std::size_t>(tau + L - 1)] = fa[idx];
    }
    return p;
}

PolyphaseSequence modulated(const PolyphaseSequence& a, std::int64_t nu) {
    PolyphaseSequence out = a;
    const std::int64_t L = a.length;
    for (std::int64_t t = 0; t < L; ++t)
        out.samples[static_cast<std::size_t>(t)] *= doppler_factor(nu, t, L);
    return out;
}

} // namespace

CorrelationProfile correlation_profile(const PolyphaseSequence& a, const PolyphaseSequence& b,
                                       Engine engine) {
    check_lengths(a, b);
    return engine == Engine::Fast ? profile_fast(a, b) : profile_direct(a, b);
}

CorrelationProfile ambiguity_profile(const PolyphaseSequence& a, const PolyphaseSequence& b,
                                     std::int64_t nu, Engine engine) {
    check_lengths(a, b);
    CorrelationProfile p = correlation_profile(modulated(a, nu), b, engine);
    p.nu = nu;
    return p;
}

double welch_bound(std::int64_t L, std::int64_t K) {
    if (L < 1 || K < 1) throw ValidationError("welch.domain", "L and K must be >= 1");
    if (K == 1) return 0.0;
    const double num = static_cast<double>(K - 1);
    const double den = static_cast<double>(K) * static_cast<double>(2 * L - 1) - 1.0;
    return static_cast<double>(L) * std::sqrt(num / den);
}

double t_sum_magnitude(std::int64_t N, std::int64_t r, std::int64_t tau) {
    if (N < 2 || r < 1 || r > N - 1 || tau < 1 || tau > N - 1)
        throw ValidationError("tsum.domain", "need 1 <= r, tau <= N-1");
    if ((r % N) * (tau % N) % N == 0) return static_cast<double>(N - tau);
    const std::int64_t m = 2 * N;
    const std::int64_t num_red = (r % m) * ((tau * tau) % m) % m;
    const std::int64_t den_red = (r % m) * (tau % m) % m;
    const double num = std::sin(M_PI * static_cast<double>(num_red) / static_cast<double>(N));
    const double den = std::sin(M_PI * static_cast<double>(den_red) / static_cast<double>(N));
    return std::abs(num / den);
}

BrMax b_r_search(std::int64_t N, std::int64_t r) {
    BrMax best;
    for (std::int64_t tau = 1; tau <= N - 1; ++tau) {
        const double v = t_sum_magnitude(N, r, tau);
        if (v > best.value) {
            best.value = v;
            best.tau = tau;
        }
    }
    return best;
}

namespace {

struct Cand {
    double value = -1.0;
    WitnessPoint w;
};

// Higher value wins; ties prefer smallest |tau|, then tau, then nu, then roots.
Cand better(const Cand& lhs, const Cand& rhs) {
    if (rhs.value != lhs.value) return rhs.value > lhs.value ? rhs : lhs;
    if (lhs.value < 0.0) return lhs;
    const auto key = [](const Cand& c) {
        return std::tuple(std::llabs(c.w.tau), c.w.tau, c.w.nu, c.w.root1, c.w.root2);
    };
    return key(rhs) < key(lhs) ? rhs : lhs;
}

struct SweepAcc {
    Cand auto_best;
    Cand cross_best;
    std::int64_t profiles = 0;
    std::int64_t spot_checks = 0;
};

SweepAcc merge_acc(const SweepAcc& a, const SweepAcc& b) {
    return {better(a.auto_best, b.auto_best), better(a.cross_best, b.cross_best),
            a.profiles + b.profiles, a.spot_checks + b.spot_checks};
}

void spot_check_profile(const CorrelationProfile& fast, const PolyphaseSequence& a,
                        const PolyphaseSequence& b) {
    const CorrelationProfile ref = profile_direct(a, b);
    const double tol = 1e-9 * static_cast<double>(a.length);
    for (std::size_t i = 0; i < ref.values.size(); ++i) {
        const double diff = std::abs(fast.values[i] - ref.values[i]);
        if (diff > tol)
            throw std::runtime_error("fast/direct correlation engines disagree: diff = " +
                                     std::to_string(diff));
    }
}

std::vector<std::pair<std::size_t, std::size_t>> unordered_pairs(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) pairs.emplace_back(i, j);
    return pairs;
}

void check_set(std::span<const PolyphaseSequence> seqs) {
    if (seqs.empty()) throw ValidationError("analysis.empty_set", "sequence set is empty");
    for (const auto& s : seqs)
        if (s.length != seqs[0].length || s.length < 1)
            throw ValidationError("analysis.length_mismatch", "set members must share a length");
}

void reevaluate_witness(std::span<const PolyphaseSequence> seqs, const Cand& cand) {
    if (cand.value < 0.0) return;
    const PolyphaseSequence* s1 = nullptr;
    const PolyphaseSequence* s2 = nullptr;
    for (const auto& s : seqs) {
        if (s.root == cand.w.root1 && !s1) s1 = &s;
        if (s.root == cand.w.root2 && !s2) s2 = &s;
    }
    if (!s1 || !s2) throw std::runtime_error("witness roots not found in set");
    const double point = std::abs(ambiguity(*s1, *s2, cand.w.tau, cand.w.nu));
    const double scale = std::max(1.0, cand.value);
    if (std::abs(point - cand.value) > 1e-9 * scale)
        throw std::runtime_error("witness does not reproduce the reported tolerance");
}

ToleranceResult finish(std::span<const PolyphaseSequence> seqs, const SweepAcc& acc) {
    reevaluate_witness(seqs, acc.auto_best);
    reevaluate_witness(seqs, acc.cross_best);
    ToleranceResult out;
    out.auto_tol = std::max(0.0, acc.auto_best.value);
    out.cross_tol = std::max(0.0, acc.cross_best.value);
    out.auto_witness = acc.auto_best.w;
    out.cross_witness = acc.cross_best.w;
    const Cand overall = better(acc.auto_best, acc.cross_best);
    out.max_tol = std::max(0.0, overall.value);
    out.witness = overall.w;
    out.profiles = acc.profiles;
    out.spot_checks = acc.spot_checks;
    return out;
}

} // namespace

ToleranceResult delta_tolerances(std::span<const PolyphaseSequence> seqs,
                                 const AnalysisOptions& opts) {
    check_set(seqs);
    const std::int64_t L = seqs[0].length;
    const auto pairs = unordered_pairs(seqs.size());

    const SweepAcc acc = parallel_reduce(
        static_cast<std::int64_t>(pairs.size()), opts.workers, SweepAcc{},
        [&](std::int64_t idx) {
            const auto [i, j] = pairs[static_cast<std::size_t>(idx)];
            const auto& si = seqs[i];
            const auto& sj = seqs[j];
            const CorrelationProfile p = correlation_profile(si, sj, opts.engine);

            SweepAcc local;
            local.profiles = 1;
            if (opts.engine == Engine::Fast && opts.spot_check_fraction > 0.0) {
                auto rng = task_rng(opts.seed, static_cast<std::uint64_t>(idx) * 2 + 1);
                if (rng_unit(rng) < opts.spot_check_fraction) {
                    spot_check_profile(p, si, sj);
                    local.spot_checks = 1;
                }
            }

            if (i == j) {
                for (std::int64_t tau = 1; tau <= L - 1; ++tau)
                    local.auto_best = better(
                        local.auto_best, Cand{std::abs(p.at(tau)), {si.root, si.root, tau, 0}});
            } else {
                for (std::int64_t tau = 0; tau <= L - 1; ++tau) {
                    local.cross_best = better(
                        local.cross_best, Cand{std::abs(p.at(tau)), {si.root, sj.root, tau, 0}});
                    local.cross_best = better(
                        local.cross_best, Cand{std::abs(p.at(-tau)), {sj.root, si.root, tau, 0}});
                }
            }
            return local;
        },
        merge_acc);

    return finish(seqs, acc);
}

ToleranceResult delta_tolerances(const SequenceSet& set, const AnalysisOptions& opts) {
    return delta_tolerances(std::span<const PolyphaseSequence>(set.members), opts);
}

ToleranceResult theta_tolerances(std::span<const PolyphaseSequence> seqs, const LazRegion& laz,
                                 const AnalysisOptions& opts) {
    check_set(seqs);
    const std::int64_t L = seqs[0].length;
    if (laz.z_x < 1 || laz.z_y < 1 || laz.z_x > L - 1 || laz.z_y > L - 1)
        throw ValidationError("laz.range", "need 1 <= z_x, z_y <= L-1");
    const std::int64_t tau_max = std::min(laz.z_x - 1, L - 1);
    const std::int64_t nu_max = laz.z_y - 1;
    const std::int64_t nu_count = 2 * nu_max + 1;
    const auto pairs = unordered_pairs(seqs.size());

    const SweepAcc acc = parallel_reduce(
        static_cast<std::int64_t>(pairs.size()) * nu_count, opts.workers, SweepAcc{},
        [&](std::int64_t idx) {
            const auto [i, j] = pairs[static_cast<std::size_t>(idx / nu_count)];
            const std::int64_t nu = idx % nu_count - nu_max;
            const auto& si = seqs[i];
            const auto& sj = seqs[j];
            const CorrelationProfile p = ambiguity_profile(si, sj, nu, opts.engine);

            SweepAcc local;
            local.profiles = 1;
            if (opts.engine == Engine::Fast && opts.spot_check_fraction > 0.0) {
                auto rng = task_rng(opts.seed, static_cast<std::uint64_t>(idx) * 2);
                if (rng_unit(rng) < opts.spot_check_fraction) {
                    spot_check_profile(p, modulated(si, nu), sj);
                    local.spot_checks = 1;
                }
            }

            if (i == j) {
                for (std::int64_t tau = 0; tau <= tau_max; ++tau) {
                    if (tau == 0 && nu == 0) continue;
                    local.auto_best = better(
                        local.auto_best, Cand{std::abs(p.at(tau)), {si.root, si.root, tau, nu}});
                }
            } else {
                for (std::int64_t tau = 0; tau <= tau_max; ++tau) {
                    local.cross_best = better(
                        local.cross_best, Cand{std::abs(p.at(tau)), {si.root, sj.root, tau, nu}});
                    if (tau > 0)
                        local.cross_best =
                            better(local.cross_best,
                                   Cand{std::abs(p.at(-tau)), {sj.root, si.root, tau, -nu}});
                }
            }
            return local;
        },
        merge_acc);

    return finish(seqs, acc);
}

ToleranceResult theta_tolerances(const SequenceSet& set, const LazRegion& laz,
                                 const AnalysisOptions& opts) {
    return theta_tolerances(std::span<const PolyphaseSequence>(set.members), laz, opts);
}

void emit_profile(const CorrelationProfile& profile, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fputs("tau,nu,re,im,magnitude\n", f);
    for (std::int64_t tau = -(profile.length - 1); tau <= profile.length - 1; ++tau) {
        const cdouble z = profile.at(tau);
        std::fprintf(f, "%" PRId64 ",%" PRId64 ",%.17g,%.17g,%.17g\n", tau, profile.nu, z.real(),
                     z.imag(), std::abs(z));
    }
    std::fclose(f);
}

} // namespace gqs
