#include "sfh/diagram.hpp"
#include "sfh/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sfh {

const char* to_string(CurveKind kind) { return kind == CurveKind::Alpha ? "alpha" : "beta"; }

std::size_t Diagram::arc_start(const ArcRef& a) const {
    const Curve& c = curves(a.kind)[a.curve];
    return c.points.empty() ? kNoPoint : c.points[a.arc];
}

std::size_t Diagram::arc_end(const ArcRef& a) const {
    const Curve& c = curves(a.kind)[a.curve];
    return c.points.empty() ? kNoPoint : c.points[(a.arc + 1) % c.points.size()];
}

std::size_t Diagram::segment_start(const Segment& s) const {
    if (s.kind == Segment::Kind::BoundaryCircle) return kNoPoint;
    return s.forward ? arc_start(s.arc) : arc_end(s.arc);
}

std::size_t Diagram::segment_end(const Segment& s) const {
    if (s.kind == Segment::Kind::BoundaryCircle) return kNoPoint;
    return s.forward ? arc_end(s.arc) : arc_start(s.arc);
}

std::string Diagram::arc_name(const ArcRef& a) const {
    return curves(a.kind)[a.curve].id + "." + std::to_string(a.arc);
}

std::string Diagram::segment_name(const Segment& s) const {
    if (s.kind == Segment::Kind::BoundaryCircle) return "\xE2\x88\x82" + boundary_circles[s.circle];
    return (s.forward ? "+" : "-") + arc_name(s.arc);
}

std::size_t Diagram::find_region(const std::string& id) const {
    for (std::size_t i = 0; i < regions.size(); ++i)
        if (regions[i].id == id) return i;
    throw Error(ErrorCode::InvalidArgument, "no region named '" + id + "'");
}

std::size_t Diagram::find_circle(const std::string& id) const {
    for (std::size_t i = 0; i < boundary_circles.size(); ++i)
        if (boundary_circles[i] == id) return i;
    throw Error(ErrorCode::InvalidArgument, "no boundary circle named '" + id + "'");
}

long region_euler_characteristic(const Region& r) {
    return 2 - 2 * static_cast<long>(r.genus) - static_cast<long>(r.cycles.size());
}

std::size_t corner_count(const Region& r) {
    std::size_t c = 0;
    for (const BoundaryCycle& cyc : r.cycles)
        if (cyc.size() >= 2) c += cyc.size();
    return c;
}

bool touches_boundary(const Region& r) {
    for (const BoundaryCycle& cyc : r.cycles)
        for (const Segment& s : cyc)
            if (s.kind == Segment::Kind::BoundaryCircle) return true;
    return false;
}

Rat euler_measure(const Region& r) {
    Rat e(static_cast<long>(corner_count(r)), 4);
    e.canonicalize();
    return Rat(region_euler_characteristic(r)) - e;
}

namespace {

// Corner between consecutive segments `in` (ending at the point) and `out`
// (starting there); nullopt when the pair is not an alpha/beta turn.
std::optional<Corner> corner_between(const Diagram& d, const Segment& in, const Segment& out) {
    if (in.kind != Segment::Kind::Arc || out.kind != Segment::Kind::Arc) return std::nullopt;
    if (in.arc.kind == out.arc.kind) return std::nullopt;
    const std::size_t p = d.segment_end(in);
    if (p == kNoPoint || p != d.segment_start(out)) return std::nullopt;
    // Arriving along a forward arc means the region sits by the arc's incoming end.
    const bool in_out = !in.forward;
    const bool out_out = out.forward;
    Corner c;
    c.point = p;
    if (in.arc.kind == CurveKind::Alpha) {
        c.quadrant = Quadrant{in_out, out_out};
    } else {
        c.quadrant = Quadrant{out_out, in_out};
    }
    return c;
}

bool segment_in_range(const Diagram& d, const Segment& s) {
    if (s.kind == Segment::Kind::BoundaryCircle) return s.circle < d.boundary_circles.size();
    const auto& cs = d.curves(s.arc.kind);
    return s.arc.curve < cs.size() && s.arc.arc < cs[s.arc.curve].arc_count();
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<Corner> region_corners(const Diagram& d, const Region& r) {
    std::vector<Corner> out;
    for (const BoundaryCycle& cyc : r.cycles) {
        if (cyc.size() < 2) continue;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (auto c = corner_between(d, cyc[i], cyc[(i + 1) % cyc.size()])) out.push_back(*c);
    }
    return out;
}

ValidationReport validate(const Diagram& d) {
    ValidationReport rep;
    auto problem = [&rep](const std::string& s) { rep.problems.push_back(s); };
    rep.boundary_circles = d.boundary_circles.size();

    if (d.alpha.size() != d.beta.size())
        problem("unbalanced: " + std::to_string(d.alpha.size()) + " alpha curves vs " +
                std::to_string(d.beta.size()) + " beta curves");

    // Points: each on exactly one alpha and one beta curve, exactly once.
    std::vector<std::size_t> on_alpha(d.points.size()), on_beta(d.points.size());
    bool indices_ok = true;
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta}) {
        for (const Curve& c : d.curves(k)) {
            for (std::size_t p : c.points) {
                if (p >= d.points.size()) {
                    problem(std::string(to_string(k)) + " curve " + c.id + " references an unknown point");
                    indices_ok = false;
                    continue;
                }
                (k == CurveKind::Alpha ? on_alpha : on_beta)[p]++;
            }
        }
    }
    for (std::size_t p = 0; p < d.points.size(); ++p) {
        if (on_alpha[p] != 1)
            problem("point " + d.points[p] + " lies " + std::to_string(on_alpha[p]) + " times on alpha curves");
        if (on_beta[p] != 1)
            problem("point " + d.points[p] + " lies " + std::to_string(on_beta[p]) + " times on beta curves");
    }

    for (const Region& r : d.regions)
        for (const BoundaryCycle& cyc : r.cycles) {
            if (cyc.empty()) problem("region " + r.id + " has an empty boundary cycle");
            for (const Segment& s : cyc)
                if (!segment_in_range(d, s)) {
                    problem("region " + r.id + " references an unknown arc or boundary circle");
                    indices_ok = false;
                }
        }
    if (!indices_ok) return rep;

    // Cycle shape.
    for (const Region& r : d.regions) {
        for (const BoundaryCycle& cyc : r.cycles) {
            if (cyc.empty()) continue;
            const bool has_circle = std::any_of(cyc.begin(), cyc.end(), [](const Segment& s) {
                return s.kind == Segment::Kind::BoundaryCircle;
            });
            const bool has_loop = std::any_of(cyc.begin(), cyc.end(), [&d](const Segment& s) {
                return s.kind == Segment::Kind::Arc && d.curves(s.arc.kind)[s.arc.curve].points.empty();
            });
            if (has_circle || has_loop) {
                if (cyc.size() != 1)
                    problem("region " + r.id + ": a boundary circle or point-free curve must form its own cycle");
                continue;
            }
            if (cyc.size() < 2) {
                problem("region " + r.id + ": cycle (" + d.segment_name(cyc[0]) + ") has no corner");
                continue;
            }
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const Segment& a = cyc[i];
                const Segment& b = cyc[(i + 1) % cyc.size()];
                if (a.arc.kind == b.arc.kind)
                    problem("region " + r.id + ": consecutive segments " + d.segment_name(a) + ", " +
                            d.segment_name(b) + " lie on the same curve family");
                else if (d.segment_end(a) != d.segment_start(b))
                    problem("region " + r.id + ": segments " + d.segment_name(a) + ", " + d.segment_name(b) +
                            " do not meet");
            }
        }
    }

    // Arc usage: once per direction.
    std::map<ArcRef, std::pair<int, int>> uses;
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
        for (std::size_t c = 0; c < d.curves(k).size(); ++c)
            for (std::size_t a = 0; a < d.curves(k)[c].arc_count(); ++a) uses[ArcRef{k, c, a}] = {0, 0};
    std::vector<int> circle_uses(d.boundary_circles.size(), 0);
    for (const Region& r : d.regions)
        for (const BoundaryCycle& cyc : r.cycles)
            for (const Segment& s : cyc) {
                if (s.kind == Segment::Kind::BoundaryCircle) {
                    circle_uses[s.circle]++;
                } else {
                    auto& u = uses[s.arc];
                    (s.forward ? u.first : u.second)++;
                }
            }
    for (const auto& [arc, u] : uses) {
        if (u.first != 1)
            problem("arc " + d.arc_name(arc) + " is used " + std::to_string(u.first) + " times in direction +");
        if (u.second != 1)
            problem("arc " + d.arc_name(arc) + " is used " + std::to_string(u.second) + " times in direction -");
    }
    for (std::size_t i = 0; i < circle_uses.size(); ++i)
        if (circle_uses[i] != 1)
            problem("boundary circle " + d.boundary_circles[i] + " appears in " + std::to_string(circle_uses[i]) +
                    " region cycles");

    // Corners: four per point, one per quadrant.
    std::vector<std::vector<Corner>> at_point(d.points.size());
    for (const Region& r : d.regions) {
        std::vector<Corner> derived = region_corners(d, r);
        for (const Corner& c : derived) at_point[c.point].push_back(c);
        if (!r.declared_corners.empty()) {
            std::vector<Corner> declared = r.declared_corners;
            std::sort(declared.begin(), declared.end());
            std::sort(derived.begin(), derived.end());
            if (declared != derived)
                problem("region " + r.id + ": declared corner labels disagree with segment directions");
        }
    }
    for (std::size_t p = 0; p < d.points.size(); ++p) {
        const auto& cs = at_point[p];
        std::vector<Quadrant> qs;
        for (const Corner& c : cs) qs.push_back(c.quadrant);
        std::sort(qs.begin(), qs.end());
        const bool all_four = qs.size() == 4 && std::adjacent_find(qs.begin(), qs.end()) == qs.end();
        if (!all_four)
            problem("point " + d.points[p] + " has " + std::to_string(cs.size()) +
                    " corner incidences (expected one per quadrant)");
    }

    // Components and Euler bookkeeping.  Nodes: points, circles, point-free curves, regions.
    const std::size_t np = d.points.size(), nc = d.boundary_circles.size();
    std::vector<std::size_t> loop_node(d.alpha.size() + d.beta.size(), kNoPoint);
    std::size_t next = np + nc;
    for (std::size_t i = 0; i < d.alpha.size(); ++i)
        if (d.alpha[i].points.empty()) loop_node[i] = next++;
    for (std::size_t i = 0; i < d.beta.size(); ++i)
        if (d.beta[i].points.empty()) loop_node[d.alpha.size() + i] = next++;
    const std::size_t region_base = next;
    UnionFind uf(region_base + d.regions.size());
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
        for (const Curve& c : d.curves(k))
            for (std::size_t i = 1; i < c.points.size(); ++i) uf.unite(c.points[0], c.points[i]);
    for (std::size_t ri = 0; ri < d.regions.size(); ++ri)
        for (const BoundaryCycle& cyc : d.regions[ri].cycles)
            for (const Segment& s : cyc) {
                std::size_t node;
                if (s.kind == Segment::Kind::BoundaryCircle) {
                    node = np + s.circle;
                } else if (d.curves(s.arc.kind)[s.arc.curve].points.empty()) {
                    node = loop_node[(s.arc.kind == CurveKind::Alpha ? 0 : d.alpha.size()) + s.arc.curve];
                } else {
                    node = d.arc_start(s.arc);
                }
                uf.unite(region_base + ri, node);
            }

    std::map<std::size_t, long> chi;
    std::map<std::size_t, long> circles;
    for (std::size_t p = 0; p < np; ++p) chi[uf.find(p)] -= 1; // V - E = -P on the curve graph
    for (std::size_t c = 0; c < nc; ++c) circles[uf.find(np + c)] += 1;
    for (std::size_t i = 0; i < loop_node.size(); ++i)
        if (loop_node[i] != kNoPoint) chi[uf.find(loop_node[i])] += 0;
    for (std::size_t ri = 0; ri < d.regions.size(); ++ri)
        chi[uf.find(region_base + ri)] += region_euler_characteristic(d.regions[ri]);
    for (std::size_t c = 0; c < nc; ++c) chi[uf.find(np + c)] += 0;

    rep.components = chi.size();
    rep.euler_characteristic = 0;
    for (const auto& [root, x] : chi) {
        rep.euler_characteristic += x;
        const long b = circles.count(root) ? circles[root] : 0;
        if (b == 0) problem("a surface component has no boundary circle");
        const long twice_genus = 2 - b - x;
        if (twice_genus < 0 || twice_genus % 2 != 0) {
            problem("Euler count " + std::to_string(x) + " with " + std::to_string(b) +
                    " boundary circles is not a compact surface");
        } else {
            rep.genus += static_cast<unsigned>(twice_genus / 2);
        }
    }
    return rep;
}

void require_valid(const Diagram& d) {
    ValidationReport rep = validate(d);
    if (rep.ok()) return;
    std::ostringstream os;
    os << "invalid diagram:";
    for (const std::string& p : rep.problems) os << "\n  " << p;
    throw Error(ErrorCode::InvalidDiagram, os.str());
}

} // namespace sfh
