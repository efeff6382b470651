#pragma once

// Combinatorial sutured Heegaard diagrams.
//
// A diagram is stored as incidence data only: curves list their intersection
// points in cyclic order, and each region of the complement of the curves lists
// its boundary cycles as signed arcs (region on the left) or whole boundary
// circles.  Regions may have positive genus and several boundary cycles.

#include "sfh/exactalg.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sfh {

enum class CurveKind : std::uint8_t { Alpha, Beta };

const char* to_string(CurveKind kind);

inline constexpr std::size_t kNoPoint = std::numeric_limits<std::size_t>::max();

struct Curve {
    std::string id;
    // Indices into Diagram::points.  Arc k runs from points[k] to points[k+1]
    // (cyclically); a curve without points has a single closed arc.
    std::vector<std::size_t> points;

    std::size_t arc_count() const { return points.empty() ? 1 : points.size(); }
};

struct ArcRef {
    CurveKind kind = CurveKind::Alpha;
    std::size_t curve = 0;
    std::size_t arc = 0;

    auto operator<=>(const ArcRef&) const = default;
};

struct Segment {
    enum class Kind : std::uint8_t { Arc, BoundaryCircle };

    Kind kind = Kind::Arc;
    ArcRef arc;            // when kind == Arc
    bool forward = true;   // traversal direction along the arc
    std::size_t circle = 0; // when kind == BoundaryCircle

    static Segment along(CurveKind k, std::size_t curve, std::size_t arc, bool forward) {
        return Segment{Kind::Arc, ArcRef{k, curve, arc}, forward, 0};
    }
    static Segment boundary(std::size_t circle) { return Segment{Kind::BoundaryCircle, {}, true, circle}; }

    bool operator==(const Segment&) const = default;
};

using BoundaryCycle = std::vector<Segment>;

// Quadrant label at an intersection point: for each of the two curves, whether
// the region sits next to the arc leaving the point (+) or the arc arriving (-).
struct Quadrant {
    bool alpha_out = true;
    bool beta_out = true;

    auto operator<=>(const Quadrant&) const = default;
};

struct Corner {
    std::size_t point = kNoPoint;
    Quadrant quadrant;

    auto operator<=>(const Corner&) const = default;
};

struct Region {
    std::string id;
    unsigned genus = 0;
    std::vector<BoundaryCycle> cycles;
    // Optional corner labels declared in a source file; cross-checked by validate.
    std::vector<Corner> declared_corners;
};

struct Diagram {
    std::vector<std::string> points;
    std::vector<std::string> boundary_circles;
    std::vector<Curve> alpha;
    std::vector<Curve> beta;
    std::vector<Region> regions;

    const std::vector<Curve>& curves(CurveKind k) const { return k == CurveKind::Alpha ? alpha : beta; }
    std::vector<Curve>& curves(CurveKind k) { return k == CurveKind::Alpha ? alpha : beta; }

    // Endpoints of an arc (kNoPoint for the closed arc of a curve without points).
    std::size_t arc_start(const ArcRef& a) const;
    std::size_t arc_end(const ArcRef& a) const;
    std::size_t segment_start(const Segment& s) const;
    std::size_t segment_end(const Segment& s) const;

    std::string arc_name(const ArcRef& a) const;
    std::string segment_name(const Segment& s) const;
    std::size_t find_region(const std::string& id) const;   // throws InvalidArgument
    std::size_t find_circle(const std::string& id) const;   // throws InvalidArgument
};

// ---------------------------------------------------------------------------
// Region-level quantities

long region_euler_characteristic(const Region& r);
std::vector<Corner> region_corners(const Diagram& d, const Region& r);
std::size_t corner_count(const Region& r);
bool touches_boundary(const Region& r);
// chi(R) - c(R)/4
Rat euler_measure(const Region& r);

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
    std::vector<std::string> problems;
    long euler_characteristic = 0;
    std::size_t components = 0;
    unsigned genus = 0; // summed over components
    std::size_t boundary_circles = 0;

    bool ok() const { return problems.empty(); }
};

ValidationReport validate(const Diagram& d);

// Throws Error(InvalidDiagram) listing the problems when validate fails.
void require_valid(const Diagram& d);

// ---------------------------------------------------------------------------
// Domains and periodic domains

// Region on each side of every arc: `plus` holds +arc in one of its cycles.
struct ArcSides {
    std::size_t plus = kNoPoint;
    std::size_t minus = kNoPoint;
};

// Linear system for domains whose boundary meets the curves in prescribed
// endpoint data.  Unknowns are multiplicities of regions away from the boundary;
// each intersection point contributes one alpha-row and one beta-row.
struct DomainSystem {
    std::vector<std::size_t> free_regions; // column -> region index
    IntMatrix matrix;                      // 2 * points rows
    std::map<ArcRef, ArcSides> sides;

    std::size_t alpha_row(std::size_t point) const { return 2 * point; }
    std::size_t beta_row(std::size_t point) const { return 2 * point + 1; }
    IntVec lift(const IntVec& free_values, std::size_t region_count) const;
};

DomainSystem domain_system(const Diagram& d);

struct PeriodicLattice {
    std::vector<IntVec> basis; // vectors indexed by regions

    std::size_t rank() const { return basis.size(); }
};

PeriodicLattice periodic_lattice(const Diagram& d);

struct AdmissibilityResult {
    bool admissible = true;
    std::optional<IntVec> witness; // nonzero nonnegative periodic domain when not admissible
};

inline constexpr std::size_t kDefaultAdmissibilityRankBound = 6;

AdmissibilityResult is_admissible(const Diagram& d, std::size_t max_rank = kDefaultAdmissibilityRankBound);

struct NicenessResult {
    bool nice = true;
    std::vector<std::size_t> offending_regions;
};

NicenessResult is_nice(const Diagram& d);

// ---------------------------------------------------------------------------
// First homology of the sutured manifold

// Canonical representative of a class in H_1(M): free coordinates followed by
// torsion residues in [0, d_i).
struct CosetVec {
    IntVec free;
    IntVec torsion;

    bool is_zero() const;
    auto operator<=>(const CosetVec&) const = default;
};

// Cellular model: the curve graph and boundary circles, plus a center vertex per
// region with one spoke per boundary cycle and 2*genus handle loops, and one
// 2-cell per region.  H_1(M) = Z_1 / (B_1 + <alpha, beta>).
struct H1Presentation {
    std::size_t edge_count = 0;
    std::size_t vertex_count = 0;
    IntMatrix boundary1;          // vertices x edges
    IntMatrix relation_chains;    // edges x relations (region boundaries, then alpha, beta)
    IntMatrix cycle_coordinates;  // rank(Z_1) x edges, left inverse of a Z_1 basis
    IntMatrix relations;          // relation_chains in cycle coordinates
    SnfResult normal_form;        // of `relations`
    std::size_t b1 = 0;
    IntVec torsion;               // invariant factors > 1

    std::vector<std::size_t> alpha_arc_offset; // first edge of each alpha curve
    std::vector<std::size_t> beta_arc_offset;

    std::size_t edge_of(const ArcRef& a) const;
    IntVec zero_chain() const { return IntVec(edge_count); }

    // Reduces a 1-cycle on the cell complex to its class.  Throws when `chain`
    // is not a cycle.
    CosetVec normalize(const IntVec& chain) const;
    // Reduces torsion residues; normalize already returns reduced vectors.
    CosetVec reduce(CosetVec v) const;
    CosetVec add(const CosetVec& a, const CosetVec& b) const;
    CosetVec negate(const CosetVec& a) const;
};

H1Presentation h1_presentation(const Diagram& d);

} // namespace sfh
