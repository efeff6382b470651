#pragma once

// Independent brute-force oracles used only by the test suites.  None of these
// call into the routines they are used to check.

#include "sfh/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using sfh::Int;
using sfh::IntMatrix;
using sfh::IntVec;
using sfh::Rat;
using sfh::RatVec;

// Leibniz expansion over all permutations.
inline Int int_determinant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Int term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                    std::vector<std::size_t>& cur, std::size_t start = 0) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, out, cur, i + 1);
        cur.pop_back();
    }
}

// D_i = gcd of all i x i minors, for i = 1..min(rows, cols).
inline IntVec determinantal_divisors(const IntMatrix& a) {
    const std::size_t k = std::min(a.rows(), a.cols());
    IntVec out(k);
    for (std::size_t size = 1; size <= k; ++size) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(a.rows(), size, rs, cur);
        subsets(a.cols(), size, cs, cur);
        Int g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix sub(size, size);
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = 0; j < size; ++j) sub(i, j) = a(r[i], c[j]);
                g = gcd(g, int_determinant(sub));
            }
        out[size - 1] = g;
    }
    return out;
}

// Rank as the largest size with a nonzero minor.
inline std::size_t rational_rank_of(const IntMatrix& a) {
    IntVec dd = determinantal_divisors(a);
    std::size_t r = 0;
    while (r < dd.size() && dd[r] != 0) ++r;
    return r;
}

// Rank over the two-element field as log2 of the size of the row span.
inline std::size_t gf2_rank_by_span(const sfh::BitMatrix& m) {
    std::set<std::vector<bool>> span;
    for (unsigned long mask = 0; mask < (1ul << m.rows()); ++mask) {
        std::vector<bool> v(m.cols(), false);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1ul)
                for (std::size_t c = 0; c < m.cols(); ++c) v[c] = v[c] != m.get(r, c);
        span.insert(v);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

struct BruteHull {
    std::vector<RatVec> vertices;
    std::vector<sfh::Halfspace> facets;
};

inline RatVec cross(const RatVec& a, const RatVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot3(const RatVec& a, const RatVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Every plane through three input points that has all points on one side is a facet.
inline BruteHull brute_force_hull_3d(const std::vector<RatVec>& pts) {
    BruteHull out;
    std::set<std::pair<RatVec, Rat>> seen;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                RatVec d1{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]};
                RatVec d2{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1], pts[k][2] - pts[i][2]};
                RatVec nrm = cross(d1, d2);
                if (nrm == RatVec(3)) continue;
                Rat off = dot3(nrm, pts[i]);
                bool below = true, above = true;
                for (const RatVec& p : pts) {
                    Rat s = dot3(nrm, p);
                    below = below && s <= off;
                    above = above && s >= off;
                }
                if (!below && !above) continue;
                if (!below) {
                    for (Rat& x : nrm) x = -x;
                    off = -off;
                }
                IntVec prim = sfh::primitive_integer_vector(nrm);
                std::size_t nz = 0;
                while (nrm[nz] == 0) ++nz;
                Rat scale = Rat(prim[nz]) / nrm[nz];
                RatVec pn{Rat(prim[0]), Rat(prim[1]), Rat(prim[2])};
                Rat po = off * scale;
                if (seen.emplace(pn, po).second) out.facets.push_back({pn, po});
            }
    for (const RatVec& p : pts) {
        std::vector<RatVec> normals;
        for (const auto& f : out.facets)
            if (dot3(f.normal, p) == f.offset) normals.push_back(f.normal);
        bool vertex = false;
        for (std::size_t a = 0; a < normals.size() && !vertex; ++a)
            for (std::size_t b = a + 1; b < normals.size() && !vertex; ++b)
                for (std::size_t c = b + 1; c < normals.size() && !vertex; ++c)
                    vertex = dot3(normals[a], cross(normals[b], normals[c])) != 0;
        if (vertex && std::find(out.vertices.begin(), out.vertices.end(), p) == out.vertices.end())
            out.vertices.push_back(p);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

} // namespace oracle
