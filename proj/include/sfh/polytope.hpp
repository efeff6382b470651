#pragma once

// Support of sutured Floer homology in H^2(M, dM) = Z^{b1}, its convex hull,
// faces, the semi-norm y and its symmetrization, and depth bounds.

#include "sfh/floer.hpp"

namespace sfh {

struct SupportPoint {
    IntVec lattice;          // 2 * (class - anchor class), free part only
    std::size_t dimension = 0;
    std::size_t class_id = 0;
};

struct Support {
    std::size_t b1 = 0;
    std::size_t anchor_class = 0;
    std::vector<SupportPoint> points;

    std::size_t total_rank() const;
    std::vector<RatVec> coordinates() const;
};

// Throws EmptySupport when every class has zero homology.
Support support_points(const SFHTable& table);

struct SfhPolytope {
    RatPolytope raw;
    RatPolytope centered;
    RatVec centroid; // of raw
    std::size_t b1 = 0;
    std::size_t total_rank = 0;

    std::size_t dim() const { return raw.dim; }
};

SfhPolytope build_polytope(const Support& s);

struct FaceResult {
    IntVec alpha;
    Rat c_min;
    std::vector<std::size_t> points; // indices into Support::points
    std::size_t dimension = 0;
};

// Minimizers of <c, alpha> over the support.
FaceResult face_query(const SfhPolytope& p, const Support& s, const IntVec& alpha);

// max <-c, alpha> over the centered polytope.
Rat seminorm_y(const SfhPolytope& p, const RatVec& alpha);
Rat symmetrized_z(const SfhPolytope& p, const RatVec& alpha);

// 2k for the least k with rank < 2^{k+1}; throws ZeroRank for rank 0.
unsigned depth_upper_bound(std::size_t rank);
unsigned knot_depth_bound(std::size_t top_rank);

} // namespace sfh
