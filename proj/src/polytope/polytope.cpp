#include "sfh/polytope.hpp"
#include "sfh/error.hpp"

#include <algorithm>

namespace sfh {

std::size_t Support::total_rank() const {
    std::size_t t = 0;
    for (const SupportPoint& p : points) t += p.dimension;
    return t;
}

std::vector<RatVec> Support::coordinates() const {
    std::vector<RatVec> out;
    for (const SupportPoint& p : points) out.emplace_back(p.lattice.begin(), p.lattice.end());
    return out;
}

Support support_points(const SFHTable& table) {
    Support s;
    s.b1 = table.b1;
    const CosetVec* anchor = nullptr;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const ClassHomology& ch = table.classes[c];
        if (ch.dimension == 0) continue;
        if (!anchor) {
            anchor = &ch.coset_rep;
            s.anchor_class = c;
        }
        SupportPoint pt;
        pt.class_id = c;
        pt.dimension = ch.dimension;
        pt.lattice.resize(table.b1);
        for (std::size_t i = 0; i < table.b1; ++i) pt.lattice[i] = 2 * (ch.coset_rep.free[i] - anchor->free[i]);
        s.points.push_back(std::move(pt));
    }
    if (s.points.empty())
        throw Error(ErrorCode::EmptySupport, "sutured Floer homology vanishes; the sutured manifold is not taut");
    return s;
}

namespace {

RatPolytope hull_of(const std::vector<RatVec>& pts, std::size_t ambient) {
    if (ambient == 0) {
        RatPolytope p;
        p.vertices = {RatVec{}};
        return p;
    }
    return convex_hull(pts);
}

} // namespace

SfhPolytope build_polytope(const Support& s) {
    if (s.points.empty()) throw Error(ErrorCode::EmptySupport, "empty support");
    SfhPolytope p;
    p.b1 = s.b1;
    p.total_rank = s.total_rank();
    std::vector<RatVec> pts = s.coordinates();
    p.raw = hull_of(pts, s.b1);
    p.centroid = s.b1 == 0 ? RatVec{} : body_centroid(p.raw);
    for (RatVec& v : pts)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p.centroid[i];
    p.centered = hull_of(pts, s.b1);
    return p;
}

FaceResult face_query(const SfhPolytope& p, const Support& s, const IntVec& alpha) {
    if (alpha.size() != p.b1)
        throw Error(ErrorCode::InvalidArgument, "class has " + std::to_string(alpha.size()) +
                                                    " coordinates; expected " + std::to_string(p.b1));
    FaceResult f;
    f.alpha = alpha;
    std::vector<Int> pairing;
    for (const SupportPoint& pt : s.points) {
        Int v = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) v += pt.lattice[i] * alpha[i];
        pairing.push_back(v);
    }
    const Int lo = *std::min_element(pairing.begin(), pairing.end());
    f.c_min = Rat(lo);
    for (std::size_t i = 0; i < pairing.size(); ++i)
        if (pairing[i] == lo) {
            f.points.push_back(i);
            f.dimension += s.points[i].dimension;
        }
    return f;
}

Rat seminorm_y(const SfhPolytope& p, const RatVec& alpha) {
    if (alpha.size() != p.b1)
        throw Error(ErrorCode::InvalidArgument, "class has " + std::to_string(alpha.size()) +
                                                    " coordinates; expected " + std::to_string(p.b1));
    Rat best;
    bool first = true;
    for (const RatVec& v : p.centered.vertices) {
        Rat val = -dot(v, alpha);
        if (first || val > best) best = val;
        first = false;
    }
    return best;
}

Rat symmetrized_z(const SfhPolytope& p, const RatVec& alpha) {
    RatVec neg = alpha;
    for (Rat& x : neg) x = -x;
    Rat z = (seminorm_y(p, alpha) + seminorm_y(p, neg)) / 2;
    z.canonicalize();
    return z;
}

unsigned depth_upper_bound(std::size_t rank) {
    if (rank == 0) throw Error(ErrorCode::ZeroRank, "rank 0: the sutured manifold is not taut");
    unsigned k = 0;
    while ((std::size_t{2} << k) <= rank) ++k;
    return 2 * k;
}

unsigned knot_depth_bound(std::size_t top_rank) { return depth_upper_bound(top_rank) + 1; }

} // namespace sfh
