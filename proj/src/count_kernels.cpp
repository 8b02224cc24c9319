#include "castelnuovo/count_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>

namespace castelnuovo {

Int Box::cell_count() const {
    Int cells = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (hi[j] < lo[j]) return 0;
        cells *= hi[j] - lo[j] + 1;
    }
    return cells;
}

Box Box::dilated(const Int& t) const {
    Box b;
    b.lo.reserve(lo.size());
    b.hi.reserve(hi.size());
    for (std::size_t j = 0; j < lo.size(); ++j) {
        b.lo.push_back(lo[j] * t);
        b.hi.push_back(hi[j] * t);
    }
    return b;
}

Box bounding_box(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw DimensionMismatchError("bounding_box: empty point set");
    const std::size_t d = points[0].size();
    Box box{points[0], points[0]};
    for (const auto& p : points) {
        if (p.size() != d) throw DimensionMismatchError("bounding_box: ragged point set");
        for (std::size_t j = 0; j < d; ++j) {
            if (p[j] < box.lo[j]) box.lo[j] = p[j];
            if (p[j] > box.hi[j]) box.hi[j] = p[j];
        }
    }
    return box;
}

BoxCounts count_box_reference(const std::vector<FacetInequality>& facets, const Box& box) {
    const int d = static_cast<int>(box.lo.size());
    BoxCounts counts;
    if (box.cell_count() == 0) return counts;

    LatticePoint x = box.lo;
    while (true) {
        switch (classify_point(facets, x)) {
            case PointLocation::Interior: ++counts.interior; break;
            case PointLocation::Boundary: ++counts.boundary; break;
            case PointLocation::Outside: break;
        }
        int k = d - 1;
        while (k >= 0 && x[k] == box.hi[k]) --k;
        if (k < 0) break;
        ++x[k];
        for (int j = k + 1; j < d; ++j) x[j] = box.lo[j];
    }
    return counts;
}

namespace {

// Facet system flattened for the column kernel. Axis `column_axis` of the
// original coordinates is moved to the column slot; the remaining axes keep
// their relative order and form the prefix space.
template <typename I>
struct System {
    int dim = 0;      // ambient dimension d
    int nf = 0;       // facet count
    int prefix = 0;   // d - 1
    std::vector<I> pcoef;  // nf x prefix
    std::vector<I> acol;   // nf, coefficient on the column axis
    std::vector<I> off;    // nf
    std::vector<I> plo, phi;  // prefix box
    I clo{}, chi{};           // column box
    std::vector<int> axis_of;  // kernel position -> original axis
};

template <typename I>
I to_scalar(const Int& v);
template <>
Int to_scalar<Int>(const Int& v) {
    return v;
}
template <>
long long to_scalar<long long>(const Int& v) {
    return v.convert_to<long long>();
}

template <typename I>
System<I> build_system(const std::vector<FacetInequality>& facets, const Box& box,
                       int column_axis) {
    const int d = static_cast<int>(box.lo.size());
    System<I> s;
    s.dim = d;
    s.nf = static_cast<int>(facets.size());
    s.prefix = d - 1;
    s.axis_of.reserve(d);
    for (int j = 0; j < d; ++j)
        if (j != column_axis) s.axis_of.push_back(j);
    s.axis_of.push_back(column_axis);

    s.pcoef.resize(static_cast<std::size_t>(s.nf) * s.prefix);
    s.acol.resize(s.nf);
    s.off.resize(s.nf);
    for (int i = 0; i < s.nf; ++i) {
        for (int j = 0; j < s.prefix; ++j)
            s.pcoef[static_cast<std::size_t>(i) * s.prefix + j] =
                to_scalar<I>(facets[i].normal[s.axis_of[j]]);
        s.acol[i] = to_scalar<I>(facets[i].normal[column_axis]);
        s.off[i] = to_scalar<I>(facets[i].offset);
    }
    s.plo.resize(s.prefix);
    s.phi.resize(s.prefix);
    for (int j = 0; j < s.prefix; ++j) {
        s.plo[j] = to_scalar<I>(box.lo[s.axis_of[j]]);
        s.phi[j] = to_scalar<I>(box.hi[s.axis_of[j]]);
    }
    s.clo = to_scalar<I>(box.lo[column_axis]);
    s.chi = to_scalar<I>(box.hi[column_axis]);
    return s;
}

// floor division; remainder ends with the divisor's sign
template <typename I>
inline I floor_div(const I& s, const I& a, I& r) {
    I q = s / a;
    r = s - q * a;
    if (r != 0 && ((r < 0) != (a < 0))) {
        q -= 1;
        r += a;
    }
    return q;
}

template <typename I>
struct ColumnInterval {
    I loC, hiC;  // closed: inside or on every facet
    I loO, hiO;  // open: strictly inside every facet
    bool empty_open = false;
};

// Solve every facet inequality for the column coordinate given the prefix
// residuals s[i] = offset_i - <prefix part of normal_i, prefix coords>.
template <typename I>
inline ColumnInterval<I> column_interval(const System<I>& sys, const I* s) {
    ColumnInterval<I> ci{sys.clo, sys.chi, sys.clo, sys.chi, false};
    for (int i = 0; i < sys.nf; ++i) {
        const I& a = sys.acol[i];
        if (a == 0) {
            if (s[i] < 0) {
                ci.hiC = ci.loC - 1;
                return ci;
            }
            if (s[i] == 0) ci.empty_open = true;
            continue;
        }
        I r;
        I q = floor_div(s[i], a, r);
        if (a > 0) {
            if (q < ci.hiC) ci.hiC = q;
            if (r == 0) --q;
            if (q < ci.hiO) ci.hiO = q;
        } else {
            I lc = (r == 0) ? q : q + 1;
            if (lc > ci.loC) ci.loC = lc;
            ++q;  // strict bound is always one step up
            if (q > ci.loO) ci.loO = q;
        }
        if (ci.hiC < ci.loC) return ci;
    }
    return ci;
}

struct PrefixSpace {
    std::vector<unsigned long long> width;  // per prefix axis
    unsigned long long columns = 1;
};

template <typename I>
PrefixSpace prefix_space(const System<I>& sys) {
    PrefixSpace ps;
    ps.width.resize(sys.prefix);
    for (int j = 0; j < sys.prefix; ++j) {
        ps.width[j] = static_cast<unsigned long long>(
            to_scalar<long long>(Int(Int(sys.phi[j]) - Int(sys.plo[j]) + 1)));
        ps.columns *= ps.width[j];
    }
    return ps;
}

template <typename I>
void decode_prefix(const System<I>& sys, const PrefixSpace& ps, unsigned long long index,
                   std::vector<I>& x) {
    for (int j = sys.prefix - 1; j >= 0; --j) {
        x[j] = sys.plo[j] + I(static_cast<long long>(index % ps.width[j]));
        index /= ps.width[j];
    }
}

template <typename I>
void init_residuals(const System<I>& sys, const std::vector<I>& x, std::vector<I>& s) {
    for (int i = 0; i < sys.nf; ++i) {
        I v = sys.off[i];
        for (int j = 0; j < sys.prefix; ++j)
            v -= sys.pcoef[static_cast<std::size_t>(i) * sys.prefix + j] * x[j];
        s[i] = v;
    }
}

// Advance the prefix odometer one step, updating residuals incrementally.
template <typename I>
void advance_prefix(const System<I>& sys, std::vector<I>& x, std::vector<I>& s) {
    int k = sys.prefix - 1;
    while (k >= 0 && x[k] == sys.phi[k]) --k;
    if (k < 0) return;
    x[k] += 1;
    for (int i = 0; i < sys.nf; ++i)
        s[i] -= sys.pcoef[static_cast<std::size_t>(i) * sys.prefix + k];
    for (int j = k + 1; j < sys.prefix; ++j) {
        I delta = x[j] - sys.plo[j];
        if (delta != 0) {
            for (int i = 0; i < sys.nf; ++i)
                s[i] += sys.pcoef[static_cast<std::size_t>(i) * sys.prefix + j] * delta;
            x[j] = sys.plo[j];
        }
    }
}

template <typename I>
BoxCounts run_count(const System<I>& sys) {
    const PrefixSpace ps = prefix_space(sys);
    const unsigned long long M = ps.columns;

    const unsigned long long want =
        static_cast<unsigned long long>(omp_get_max_threads()) * 16ull;
    const unsigned long long nchunks = std::max(1ull, std::min(M, want));
    const unsigned long long chunk = (M + nchunks - 1) / nchunks;

    Int interior_total = 0, boundary_total = 0;

#pragma omp parallel
    {
        I interior_local{0}, boundary_local{0};
        std::vector<I> x(sys.prefix), s(sys.nf);

#pragma omp for schedule(dynamic, 1) nowait
        for (long long ci = 0; ci < static_cast<long long>(nchunks); ++ci) {
            const unsigned long long begin = static_cast<unsigned long long>(ci) * chunk;
            const unsigned long long end = std::min(M, begin + chunk);
            if (begin >= end) continue;
            decode_prefix(sys, ps, begin, x);
            init_residuals(sys, x, s);
            for (unsigned long long idx = begin; idx < end; ++idx) {
                const ColumnInterval<I> iv = column_interval(sys, s.data());
                if (iv.hiC >= iv.loC) {
                    const I n_closed = iv.hiC - iv.loC + 1;
                    I n_open{0};
                    if (!iv.empty_open && iv.hiO >= iv.loO) n_open = iv.hiO - iv.loO + 1;
                    interior_local += n_open;
                    boundary_local += n_closed - n_open;
                }
                if (idx + 1 < end) advance_prefix(sys, x, s);
            }
        }

#pragma omp critical
        {
            interior_total += Int(interior_local);
            boundary_total += Int(boundary_local);
        }
    }
    return BoxCounts{interior_total, boundary_total};
}

template <typename I>
std::vector<std::pair<LatticePoint, PointLocation>> run_collect(const System<I>& sys) {
    const PrefixSpace ps = prefix_space(sys);
    const unsigned long long M = ps.columns;
    const unsigned long long want =
        static_cast<unsigned long long>(omp_get_max_threads()) * 16ull;
    const unsigned long long nchunks = std::max(1ull, std::min(M, want));
    const unsigned long long chunk = (M + nchunks - 1) / nchunks;

    std::vector<std::vector<std::pair<LatticePoint, PointLocation>>> parts(nchunks);

#pragma omp parallel
    {
        std::vector<I> x(sys.prefix), s(sys.nf);

#pragma omp for schedule(dynamic, 1) nowait
        for (long long ci = 0; ci < static_cast<long long>(nchunks); ++ci) {
            const unsigned long long begin = static_cast<unsigned long long>(ci) * chunk;
            const unsigned long long end = std::min(M, begin + chunk);
            if (begin >= end) continue;
            auto& local = parts[static_cast<std::size_t>(ci)];
            decode_prefix(sys, ps, begin, x);
            init_residuals(sys, x, s);
            for (unsigned long long idx = begin; idx < end; ++idx) {
                const ColumnInterval<I> iv = column_interval(sys, s.data());
                for (I v = iv.loC; v <= iv.hiC; ++v) {
                    const bool inside_open =
                        !iv.empty_open && v >= iv.loO && v <= iv.hiO;
                    LatticePoint pt(sys.dim);
                    for (int j = 0; j < sys.prefix; ++j) pt[sys.axis_of[j]] = Int(x[j]);
                    pt[sys.axis_of[sys.prefix]] = Int(v);
                    local.emplace_back(std::move(pt), inside_open ? PointLocation::Interior
                                                                  : PointLocation::Boundary);
                }
                if (idx + 1 < end) advance_prefix(sys, x, s);
            }
        }
    }

    std::vector<std::pair<LatticePoint, PointLocation>> out;
    for (auto& part : parts)
        for (auto& e : part) out.push_back(std::move(e));
    return out;
}

// The int64 instantiation is used only when this bound (computed exactly)
// proves every residual, product, and count stays below 2^62.
bool fits_int64(const std::vector<FacetInequality>& facets, const Box& box) {
    const Int lim = Int(1) << 61;
    if (box.cell_count() >= lim) return false;
    for (std::size_t j = 0; j < box.lo.size(); ++j)
        if (abs(box.lo[j]) >= lim || abs(box.hi[j]) >= lim) return false;
    for (const auto& f : facets) {
        Int bound = abs(f.offset);
        for (std::size_t j = 0; j < f.normal.size(); ++j)
            bound += std::max(abs(f.normal[j] * box.lo[j]), abs(f.normal[j] * box.hi[j]));
        if (bound + 1 >= lim) return false;
    }
    return true;
}

int widest_axis(const Box& box) {
    int axis = static_cast<int>(box.lo.size()) - 1;
    Int best = box.hi[axis] - box.lo[axis];
    for (int j = 0; j < static_cast<int>(box.lo.size()); ++j) {
        Int w = box.hi[j] - box.lo[j];
        if (w > best) {
            best = w;
            axis = j;
        }
    }
    return axis;
}

void check_indexable(const Box& box) {
    const Int hard = Int(1) << 62;
    Int cells = box.cell_count();
    if (cells >= hard) throw BoxLimitError(cells, hard);
}

void check_facet_dims(const std::vector<FacetInequality>& facets, const Box& box) {
    for (const auto& f : facets)
        if (f.normal.size() != box.lo.size())
            throw DimensionMismatchError("count kernel: facet/box dimension mismatch");
}

}  // namespace

BoxCounts count_box(const std::vector<FacetInequality>& facets, const Box& box) {
    check_facet_dims(facets, box);
    if (box.cell_count() == 0) return {};
    check_indexable(box);
    const int axis = widest_axis(box);
    if (fits_int64(facets, box)) return run_count(build_system<long long>(facets, box, axis));
    return run_count(build_system<Int>(facets, box, axis));
}

std::vector<std::pair<LatticePoint, PointLocation>> collect_box_points(
    const std::vector<FacetInequality>& facets, const Box& box) {
    check_facet_dims(facets, box);
    if (box.cell_count() == 0) return {};
    check_indexable(box);
    // keep the natural last axis as the column so output stays in
    // lexicographic coordinate order
    const int axis = static_cast<int>(box.lo.size()) - 1;
    if (fits_int64(facets, box)) return run_collect(build_system<long long>(facets, box, axis));
    return run_collect(build_system<Int>(facets, box, axis));
}

}  // namespace castelnuovo
