#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "castelnuovo/counting.hpp"
#include "castelnuovo/families.hpp"

namespace castelnuovo {

struct CastelnuovoTriplet {
    Int b;
    Int c;
    int d = 0;

    friend bool operator==(const CastelnuovoTriplet& x, const CastelnuovoTriplet& y) {
        return x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// The minimal-volume bound in normalized-volume units:
/// d*c + (d-1)*b - d^2 + 2. Defined only for c >= 1.
Int lower_bound_nvol(const Int& b, const Int& c, int d);

/// Admissibility gate on triplets for d >= 3: b >= c+d+1, c >= 1.
bool triplet_gate(const Int& b, const Int& c, int d);

enum class Verdict { True, False, Undefined };

/// Castelnuovo verdict from a measured profile; Undefined when c = 0.
Verdict castelnuovo_verdict(const LatticeProfile& prof);

/// True iff the polytope meets the minimal-volume bound with equality.
/// Throws UndefinedPredicateError when c(p) = 0.
bool is_castelnuovo(const LatticePolytope& p, const CountingLimits& limits = {});

struct RealizedTriplet {
    LatticePolytope polytope;
    std::string family;  // constructor family tag, matches the CLI names
    FamilyPrediction prediction;
};

/// Deterministic witness for the triplet (b, c, d): the simplex at b = d+1,
/// a bipyramid through b = cd+d+1, a prism-type polytope through
/// b = cd+2d+1, and the full prism at b = cd+2d+2. Throws
/// NotRealizableError outside [d+1, cd+2d+2]; that range is where witnesses
/// are known, not a claim of impossibility.
RealizedTriplet realize_triplet(const Int& b, const Int& c, int d);

/// The complete d = 2 triplet list: (b,1,2) for 3 <= b <= 9 and, for each
/// 2 <= c <= c_max, (b,c,2) for 3 <= b <= 2c+6.
std::vector<CastelnuovoTriplet> scott_triplets_d2(const Int& c_max);

struct ScanRecord {
    std::uint64_t sample_index = 0;
    Int b;
    Int c;
    int d = 0;
    Int nvol;
    Verdict verdict = Verdict::Undefined;
    std::vector<LatticePoint> vertices;  // deduplicated sample points
    std::uint64_t seed = 0;
};

struct ScanResult {
    std::vector<ScanRecord> records;  // Castelnuovo finds plus c = 0 samples
    std::uint64_t samples = 0;
    std::uint64_t degenerate_skips = 0;   // samples that spanned rank < d
    std::uint64_t box_limit_skips = 0;    // samples skipped by the cell limit
    std::uint64_t counterexamples = 0;    // finds with c >= 2, b > cd+2d+2
};

/// Seeded random search for Castelnuovo polytopes: each sample draws
/// between d+1 and 2d+2 points uniformly from [0, box]^d and profiles the
/// hull when full-dimensional. Sample i derives its generator from
/// (seed, i), so the record list is identical for any thread count.
ScanResult scan(int d, int box, std::uint64_t samples, std::uint64_t seed,
                const CountingLimits& limits = {});

}  // namespace castelnuovo
