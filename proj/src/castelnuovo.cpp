#include "castelnuovo/castelnuovo.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <random>

namespace castelnuovo {

Int lower_bound_nvol(const Int& b, const Int& c, int d) {
    if (c < 1)
        throw UndefinedPredicateError("lower_bound_nvol: the bound is undefined for c < 1");
    return d * c + (d - 1) * b - d * d + 2;
}

bool triplet_gate(const Int& b, const Int& c, int d) {
    return d >= 3 && c >= 1 && b >= c + d + 1;
}

Verdict castelnuovo_verdict(const LatticeProfile& prof) {
    if (prof.c == 0) return Verdict::Undefined;
    return prof.nvol == lower_bound_nvol(prof.b, prof.c, prof.dim) ? Verdict::True
                                                                   : Verdict::False;
}

bool is_castelnuovo(const LatticePolytope& p, const CountingLimits& limits) {
    const Verdict v = castelnuovo_verdict(profile(p, limits));
    if (v == Verdict::Undefined)
        throw UndefinedPredicateError("is_castelnuovo: undefined when c(P) = 0");
    return v == Verdict::True;
}

RealizedTriplet realize_triplet(const Int& b, const Int& c, int d) {
    if (c < 1) throw ParameterError("realize_triplet: requires c >= 1");
    if (d < 3) throw ParameterError("realize_triplet: requires d >= 3");

    const Int cd = c * d;
    if (b == d + 1) {
        auto [p, pred] = ht_simplex(c, d);
        return {std::move(p), "ht-simplex", std::move(pred)};
    }
    if (b >= d + 2 && b <= cd + d + 1) {
        auto [p, pred] = bipyramid(c, d, cd + d + 1 - b);
        return {std::move(p), "bipyramid", std::move(pred)};
    }
    if (b >= cd + d + 2 && b <= cd + 2 * d + 1) {
        auto [p, pred] = prism_type(c, d, (b - cd - d - 2).convert_to<int>());
        return {std::move(p), "prism-type", std::move(pred)};
    }
    if (b == cd + 2 * d + 2) {
        auto [p, pred] = prism(c, d);
        return {std::move(p), "prism", std::move(pred)};
    }
    throw NotRealizableError("b outside the known Castelnuovo range [d+1, c*d+2*d+2]; "
                             "conjectured impossible for c >= 2");
}

std::vector<CastelnuovoTriplet> scott_triplets_d2(const Int& c_max) {
    if (c_max < 1) throw ParameterError("scott_triplets_d2: requires c_max >= 1");
    std::vector<CastelnuovoTriplet> out;
    for (Int b = 3; b <= 9; ++b) out.push_back({b, 1, 2});
    for (Int c = 2; c <= c_max; ++c)
        for (Int b = 3; b <= 2 * c + 6; ++b) out.push_back({b, c, 2});
    return out;
}

namespace {

// Per-sample generator: fully specified by (seed, index), so scan results
// do not depend on scheduling. Bounded draws use rejection sampling to stay
// portable across standard library implementations.
struct SampleRng {
    std::mt19937_64 gen;

    SampleRng(std::uint64_t seed, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(index >> 32)};
        gen.seed(seq);
    }

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t lim = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t x;
        do {
            x = gen();
        } while (x >= lim);
        return x % n;
    }
};

}  // namespace

ScanResult scan(int d, int box, std::uint64_t samples, std::uint64_t seed,
                const CountingLimits& limits) {
    if (d < 2) throw ParameterError("scan: requires d >= 2");
    if (box < 1) throw ParameterError("scan: requires box >= 1");

    ScanResult result;
    result.samples = samples;

    std::uint64_t degenerate = 0, box_skips = 0, counterexamples = 0;
    std::vector<std::vector<ScanRecord>> partial(omp_get_max_threads());
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic, 64) \
    reduction(+ : degenerate, box_skips, counterexamples)
    for (long long i = 0; i < static_cast<long long>(samples); ++i) {
        if (failure) continue;
        try {
            SampleRng rng(seed, static_cast<std::uint64_t>(i));
            const int npts = d + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d + 2)));
            std::vector<LatticePoint> pts;
            pts.reserve(npts);
            for (int k = 0; k < npts; ++k) {
                LatticePoint p(d);
                for (int c = 0; c < d; ++c)
                    p[c] = Int(static_cast<long long>(rng.below(static_cast<std::uint64_t>(box) + 1)));
                pts.push_back(std::move(p));
            }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            if (static_cast<int>(pts.size()) < d + 1 || affine_rank(pts) != d) {
                ++degenerate;
                continue;
            }
            LatticePolytope p = validate_polytope(d, pts);

            LatticeProfile prof;
            try {
                prof = profile(p, limits);
            } catch (const BoxLimitError&) {
                ++box_skips;
                continue;
            }

            const Verdict v = castelnuovo_verdict(prof);
            if (v == Verdict::False) continue;
            if (v == Verdict::True && prof.c >= 2 && prof.b > prof.c * d + 2 * d + 2)
                ++counterexamples;

            ScanRecord rec;
            rec.sample_index = static_cast<std::uint64_t>(i);
            rec.b = prof.b;
            rec.c = prof.c;
            rec.d = d;
            rec.nvol = prof.nvol;
            rec.verdict = v;
            rec.vertices = std::move(pts);
            rec.seed = seed;
            partial[omp_get_thread_num()].push_back(std::move(rec));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    result.degenerate_skips = degenerate;
    result.box_limit_skips = box_skips;
    result.counterexamples = counterexamples;
    for (auto& chunk : partial)
        for (auto& rec : chunk) result.records.push_back(std::move(rec));
    std::sort(result.records.begin(), result.records.end(),
              [](const ScanRecord& a, const ScanRecord& b) {
                  return a.sample_index < b.sample_index;
              });
    return result;
}

}  // namespace castelnuovo
