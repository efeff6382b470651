#pragma once

// Small hand-built diagrams used across the unit tests.

#include "sfh/diagram.hpp"

namespace fixtures {

using sfh::CurveKind;
using sfh::Diagram;
using sfh::Region;
using sfh::Segment;

inline Segment a(std::size_t curve, std::size_t arc, bool fwd) { return Segment::along(CurveKind::Alpha, curve, arc, fwd); }
inline Segment b(std::size_t curve, std::size_t arc, bool fwd) { return Segment::along(CurveKind::Beta, curve, arc, fwd); }
inline Segment circ(std::size_t c) { return Segment::boundary(c); }

inline Region region(std::string id, std::vector<sfh::BoundaryCycle> cycles, unsigned genus = 0) {
    Region r;
    r.id = std::move(id);
    r.genus = genus;
    r.cycles = std::move(cycles);
    return r;
}

// Annulus; alpha is the core circle, beta a wiggled copy crossing it at u, v.
// Upper bigon U and lower bigon L sit between the curves; O and I touch the
// outer and inner boundary.  With `punctured`, a third boundary circle sits in U.
inline Diagram annulus_bigons(bool punctured) {
    Diagram d;
    d.points = {"u", "v"};
    d.alpha = {{"A", {0, 1}}};
    d.beta = {{"B", {0, 1}}};
    d.boundary_circles = {"out", "in"};
    Region upper = region("U", {{b(0, 0, true), a(0, 0, false)}});
    if (punctured) {
        d.boundary_circles.push_back("hole");
        upper.cycles.push_back({circ(2)});
    }
    d.regions = {
        upper,
        region("L", {{a(0, 1, true), b(0, 1, false)}}),
        region("O", {{b(0, 0, false), a(0, 1, false)}, {circ(0)}}),
        region("I", {{a(0, 0, true), b(0, 1, true)}, {circ(1)}}),
    };
    return d;
}

// Annulus with disjoint concentric alpha and beta; the band between them is a
// nonnegative periodic domain.
inline Diagram parallel_curves() {
    Diagram d;
    d.alpha = {{"A", {}}};
    d.beta = {{"B", {}}};
    d.boundary_circles = {"in", "out"};
    d.regions = {
        region("I", {{a(0, 0, true)}, {circ(0)}}),
        region("M", {{a(0, 0, false)}, {b(0, 0, true)}}),
        region("O", {{b(0, 0, false)}, {circ(1)}}),
    };
    return d;
}

// Genus-one surface with one boundary circle and no curves.
inline Diagram punctured_torus() {
    Diagram d;
    d.boundary_circles = {"c"};
    d.regions = {region("T", {{circ(0)}}, 1)};
    return d;
}

// Sphere with n holes h0..h{n-1} and no curves.
inline Diagram holed_sphere(std::size_t n) {
    Diagram d;
    Region r;
    r.id = "S";
    for (std::size_t i = 0; i < n; ++i) {
        d.boundary_circles.push_back("h" + std::to_string(i));
        r.cycles.push_back({circ(i)});
    }
    d.regions = {r};
    return d;
}

// Two disjoint annuli.
inline Diagram two_annuli() {
    Diagram d;
    d.boundary_circles = {"a0", "a1", "b0", "b1"};
    d.regions = {region("P", {{circ(0)}, {circ(1)}}), region("Q", {{circ(2)}, {circ(3)}})};
    return d;
}

} // namespace fixtures
