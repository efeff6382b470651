#include "sfh/exactalg.hpp"
#include "sfh/error.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace sfh {

Rat dot(const RatVec& a, const RatVec& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rat inv = 1 / rows[r][c];
        for (Rat& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rat f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Rat determinant(std::vector<RatVec> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

RatVec normalized(const RatVec& v) {
    IntVec p = primitive_integer_vector(v);
    RatVec out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]);
    return out;
}

// Halfspace a.x <= b rescaled so that a is a primitive integer vector.
Halfspace normalized(const RatVec& a, const Rat& b) {
    RatVec na = normalized(a);
    std::size_t i = 0;
    while (a[i] == 0) ++i;
    const Rat scale = na[i] / a[i];
    return {std::move(na), b * scale};
}

// Coordinates of an affine subspace spanned by a point set.
struct AffineFrame {
    RatVec origin;
    std::vector<RatVec> basis;      // k vectors in the ambient space
    std::vector<std::size_t> coords; // k ambient coordinates on which basis is invertible
    std::vector<RatVec> inverse;    // k x k, maps restricted differences to local coords

    std::size_t dim() const { return basis.size(); }

    static AffineFrame of(std::span<const RatVec> pts) {
        AffineFrame f;
        f.origin = pts.front();
        const std::size_t n = f.origin.size();
        std::vector<RatVec> echelon;
        for (const RatVec& p : pts) {
            RatVec d = sub(p, f.origin);
            std::vector<RatVec> trial = echelon;
            trial.push_back(d);
            if (rref(trial, n).size() > echelon.size()) {
                echelon = std::move(trial);
                f.basis.push_back(std::move(d));
            }
        }
        const std::size_t k = f.basis.size();
        std::vector<RatVec> rows = f.basis;
        f.coords = rref(rows, n);
        // Invert the k x k block B_S (rows indexed by coords, columns by basis).
        std::vector<RatVec> aug(k, RatVec(2 * k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) aug[i][j] = f.basis[j][f.coords[i]];
            aug[i][k + i] = 1;
        }
        rref(aug, 2 * k);
        f.inverse.assign(k, RatVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) f.inverse[i][j] = aug[i][k + j];
        return f;
    }

    RatVec local(const RatVec& x) const {
        RatVec y(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) y[i] += inverse[i][j] * (x[coords[j]] - origin[coords[j]]);
        return y;
    }

    RatVec ambient(const RatVec& y) const {
        RatVec x = origin;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[i] * basis[i][c];
        return x;
    }
};

struct LocalFacet {
    RatVec normal;
    Rat offset;
    std::vector<std::size_t> on; // processed points lying on the facet
};

struct LocalHull {
    std::vector<std::size_t> vertices;
    std::vector<LocalFacet> facets;
};

std::size_t affine_dim_of(const std::vector<RatVec>& pts, const std::vector<std::size_t>& ids) {
    if (ids.empty()) return 0;
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < ids.size(); ++i) rows.push_back(sub(pts[ids[i]], pts[ids[0]]));
    return rows.empty() ? 0 : rational_rank(std::move(rows));
}

// Hyperplane through points spanning a (k-1)-dimensional affine subspace of Q^k.
LocalFacet hyperplane_through(const std::vector<RatVec>& pts, const std::vector<std::size_t>& ids,
                              const RatVec& interior) {
    const std::size_t k = interior.size();
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < ids.size(); ++i) rows.push_back(sub(pts[ids[i]], pts[ids[0]]));
    std::vector<RatVec> ns = rational_nullspace(std::move(rows), k);
    assert(ns.size() == 1);
    RatVec a = normalized(ns.front());
    Rat b = dot(a, pts[ids[0]]);
    if (dot(a, interior) > b) {
        for (Rat& x : a) x = -x;
        b = -b;
    }
    assert(dot(a, interior) < b);
    return {std::move(a), std::move(b), {}};
}

// Incremental (beneath-beyond) hull of points spanning Q^k, k >= 1.
LocalHull full_hull(const std::vector<RatVec>& pts, std::size_t k) {
    LocalHull hull;
    if (k == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        hull.vertices = {std::min(lo, hi), std::max(lo, hi)};
        LocalFacet left{{Rat(-1)}, -pts[lo][0], {}};
        LocalFacet right{{Rat(1)}, pts[hi][0], {}};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i][0] == pts[lo][0]) left.on.push_back(i);
            if (pts[i][0] == pts[hi][0]) right.on.push_back(i);
        }
        hull.facets = {std::move(left), std::move(right)};
        return hull;
    }

    // Initial simplex.
    std::vector<std::size_t> simplex{0};
    {
        std::vector<RatVec> echelon;
        for (std::size_t i = 1; i < pts.size() && simplex.size() < k + 1; ++i) {
            std::vector<RatVec> trial = echelon;
            trial.push_back(sub(pts[i], pts[0]));
            if (rational_rank(trial) > echelon.size()) {
                echelon = std::move(trial);
                simplex.push_back(i);
            }
        }
    }
    assert(simplex.size() == k + 1);
    RatVec interior(k);
    for (std::size_t i : simplex)
        for (std::size_t c = 0; c < k; ++c) interior[c] += pts[i][c];
    for (Rat& x : interior) x /= static_cast<long>(k + 1);

    std::vector<LocalFacet> facets;
    for (std::size_t skip = 0; skip <= k; ++skip) {
        std::vector<std::size_t> ids;
        for (std::size_t j = 0; j <= k; ++j)
            if (j != skip) ids.push_back(simplex[j]);
        LocalFacet f = hyperplane_through(pts, ids, interior);
        f.on = ids;
        std::sort(f.on.begin(), f.on.end());
        facets.push_back(std::move(f));
    }

    std::vector<std::size_t> processed = simplex;
    std::sort(processed.begin(), processed.end());
    std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());

    for (std::size_t v = 0; v < pts.size(); ++v) {
        if (in_simplex.count(v)) continue;
        const RatVec& p = pts[v];
        std::vector<bool> visible(facets.size());
        bool any = false;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            visible[i] = dot(facets[i].normal, p) > facets[i].offset;
            any = any || visible[i];
        }
        processed.push_back(v);
        if (!any) {
            for (LocalFacet& f : facets)
                if (dot(f.normal, p) == f.offset) f.on.insert(std::upper_bound(f.on.begin(), f.on.end(), v), v);
            continue;
        }

        std::map<std::pair<RatVec, Rat>, LocalFacet> created;
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            if (!visible[fi]) continue;
            for (std::size_t gi = 0; gi < facets.size(); ++gi) {
                if (visible[gi]) continue;
                std::vector<std::size_t> ridge;
                std::set_intersection(facets[fi].on.begin(), facets[fi].on.end(), facets[gi].on.begin(),
                                      facets[gi].on.end(), std::back_inserter(ridge));
                if (ridge.size() < k - 1 || affine_dim_of(pts, ridge) != k - 2) continue;
                ridge.push_back(v);
                LocalFacet nf = hyperplane_through(pts, ridge, interior);
                auto key = std::make_pair(nf.normal, nf.offset);
                if (created.count(key)) continue;
                created.emplace(std::move(key), std::move(nf));
            }
        }

        std::vector<LocalFacet> next;
        std::set<std::pair<RatVec, Rat>> kept;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (visible[i]) continue;
            LocalFacet f = std::move(facets[i]);
            if (dot(f.normal, p) == f.offset) f.on.push_back(v);
            kept.emplace(f.normal, f.offset);
            next.push_back(std::move(f));
        }
        for (auto& [key, nf] : created) {
            if (kept.count(key)) continue;
            for (std::size_t q : processed)
                if (dot(nf.normal, pts[q]) == nf.offset) nf.on.push_back(q);
            next.push_back(std::move(nf));
        }
        for (LocalFacet& f : next) std::sort(f.on.begin(), f.on.end());
        facets = std::move(next);
    }

    std::sort(processed.begin(), processed.end());
    for (std::size_t q : processed) {
        std::vector<RatVec> normals;
        for (const LocalFacet& f : facets)
            if (std::binary_search(f.on.begin(), f.on.end(), q)) normals.push_back(f.normal);
        if (normals.size() >= k && rational_rank(normals) == k) hull.vertices.push_back(q);
    }
    hull.facets = std::move(facets);
    return hull;
}

// Simplicial decomposition of the hull of points spanning Q^k.
std::vector<std::vector<RatVec>> triangulate(const std::vector<RatVec>& pts, std::size_t k) {
    if (k == 0) return {{pts.front()}};
    LocalHull hull = full_hull(pts, k);
    if (k == 1) return {{pts[hull.vertices[0]], pts[hull.vertices[1]]}};

    RatVec apex(k);
    for (std::size_t i : hull.vertices)
        for (std::size_t c = 0; c < k; ++c) apex[c] += pts[i][c];
    for (Rat& x : apex) x /= static_cast<long>(hull.vertices.size());

    std::vector<std::vector<RatVec>> out;
    for (const LocalFacet& f : hull.facets) {
        std::vector<RatVec> fpts;
        for (std::size_t i : f.on)
            if (std::binary_search(hull.vertices.begin(), hull.vertices.end(), i)) fpts.push_back(pts[i]);
        AffineFrame frame = AffineFrame::of(fpts);
        assert(frame.dim() == k - 1);
        std::vector<RatVec> local;
        for (const RatVec& x : fpts) local.push_back(frame.local(x));
        for (auto& s : triangulate(local, k - 1)) {
            std::vector<RatVec> simplex;
            for (const RatVec& y : s) simplex.push_back(frame.ambient(y));
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

std::size_t rational_rank(std::vector<RatVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    return rref(rows, cols).size();
}

std::vector<RatVec> rational_nullspace(std::vector<RatVec> rows, std::size_t cols) {
    std::vector<std::size_t> pivots = rows.empty() ? std::vector<std::size_t>{} : rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t affine_dimension(std::span<const RatVec> points) {
    if (points.size() < 2) return 0;
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(sub(points[i], points[0]));
    return rational_rank(std::move(rows));
}

bool RatPolytope::contains(const RatVec& x) const {
    if (x.size() != ambient_dim) return false;
    for (const Halfspace& e : equations)
        if (dot(e.normal, x) != e.offset) return false;
    for (const Halfspace& f : facets)
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

RatPolytope convex_hull(std::span<const RatVec> input) {
    if (input.empty()) throw Error(ErrorCode::EmptyInput, "convex_hull: no points");
    const std::size_t n = input.front().size();
    if (n > kMaxHullDimension)
        throw Error(ErrorCode::InvalidArgument, "convex_hull: ambient dimension above " +
                                                    std::to_string(kMaxHullDimension));
    std::vector<RatVec> pts(input.begin(), input.end());
    for (const RatVec& p : pts)
        if (p.size() != n) throw Error(ErrorCode::InvalidArgument, "convex_hull: mixed dimensions");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    RatPolytope poly;
    poly.ambient_dim = n;
    AffineFrame frame = AffineFrame::of(pts);
    poly.dim = frame.dim();

    // Affine hull equations: normals orthogonal to every basis vector.
    for (RatVec& nrm : rational_nullspace(frame.basis, n)) {
        RatVec a = normalized(nrm);
        Rat b = dot(a, frame.origin);
        poly.equations.push_back({std::move(a), std::move(b)});
    }

    if (poly.dim == 0) {
        poly.vertices = {pts.front()};
    } else {
        std::vector<RatVec> local;
        for (const RatVec& p : pts) local.push_back(frame.local(p));
        LocalHull hull = full_hull(local, poly.dim);
        for (std::size_t i : hull.vertices) poly.vertices.push_back(pts[i]);
        for (const LocalFacet& f : hull.facets) {
            RatVec a(n);
            for (std::size_t j = 0; j < poly.dim; ++j) {
                Rat s = 0;
                for (std::size_t i = 0; i < poly.dim; ++i) s += f.normal[i] * frame.inverse[i][j];
                a[frame.coords[j]] = s;
            }
            poly.facets.push_back(normalized(a, f.offset + dot(a, frame.origin)));
        }
    }
    std::sort(poly.vertices.begin(), poly.vertices.end(), lex_less);
    auto hs_less = [](const Halfspace& x, const Halfspace& y) {
        if (x.normal != y.normal) return lex_less(x.normal, y.normal);
        return x.offset < y.offset;
    };
    std::sort(poly.facets.begin(), poly.facets.end(), hs_less);
    std::sort(poly.equations.begin(), poly.equations.end(), hs_less);
    return poly;
}

RatVec body_centroid(const RatPolytope& polytope) {
    if (polytope.vertices.empty()) throw Error(ErrorCode::EmptyInput, "body_centroid: empty polytope");
    AffineFrame frame = AffineFrame::of(polytope.vertices);
    const std::size_t k = frame.dim();
    if (k == 0) return polytope.vertices.front();

    std::vector<RatVec> local;
    for (const RatVec& v : polytope.vertices) local.push_back(frame.local(v));

    RatVec weighted(k);
    Rat total = 0;
    for (const auto& s : triangulate(local, k)) {
        std::vector<RatVec> edges;
        for (std::size_t i = 1; i < s.size(); ++i) edges.push_back(sub(s[i], s[0]));
        Rat vol = abs(determinant(std::move(edges)));
        total += vol;
        for (const RatVec& p : s)
            for (std::size_t c = 0; c < k; ++c) weighted[c] += vol * p[c] / static_cast<long>(s.size());
    }
    assert(total > 0);
    for (Rat& x : weighted) x /= total;
    return frame.ambient(weighted);
}

} // namespace sfh
