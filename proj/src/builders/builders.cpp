#include "sfh/builders.hpp"
#include "sfh/error.hpp"

#include <numeric>
#include <set>

namespace sfh {

namespace {

Segment alpha_arc(std::size_t curve, std::size_t arc, bool forward) {
    return Segment::along(CurveKind::Alpha, curve, arc, forward);
}
Segment beta_arc(std::size_t curve, std::size_t arc, bool forward) {
    return Segment::along(CurveKind::Beta, curve, arc, forward);
}

long mod(long a, long m) { return ((a % m) + m) % m; }

long inverse_mod(long a, long m) {
    for (long x = 0; x < m; ++x)
        if (mod(a * x, m) == 1 % m) return x;
    throw Error(ErrorCode::BadParams, "no inverse");
}

std::string fresh(const std::string& id, const std::set<std::string>& used) {
    if (!used.count(id)) return id;
    for (long k = 2;; ++k) {
        std::string c = id + "_" + std::to_string(k);
        if (!used.count(c)) return c;
    }
}

std::size_t circle_host(const Diagram& d, std::size_t circle, std::size_t& cycle) {
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (std::size_t i = 0; i < d.regions[r].cycles.size(); ++i)
            for (const Segment& s : d.regions[r].cycles[i])
                if (s.kind == Segment::Kind::BoundaryCircle && s.circle == circle) {
                    cycle = i;
                    return r;
                }
    throw Error(ErrorCode::InvalidDiagram, "boundary circle " + d.boundary_circles[circle] + " has no region");
}

} // namespace

void check_params(const TorusParams& t) {
    if (t.p < 1) throw Error(ErrorCode::BadParams, "p must be positive");
    if (std::gcd(t.p, t.q) != 1) throw Error(ErrorCode::BadParams, "p and q must be coprime");
    if (t.n < 2 || t.n % 2 != 0) throw Error(ErrorCode::BadParams, "n must be even and at least 2");
}

Diagram build_base(long p, long q) {
    check_params(TorusParams{p, q, 2});
    const long qq = mod(q, p);
    const long qinv = inverse_mod(qq, p);
    auto t = [&](long s) { return static_cast<std::size_t>(mod(mod(s, p) * qinv, p)); };
    auto a = [&](long s) { return static_cast<std::size_t>(mod(s, p)); };

    Diagram d;
    Curve alpha{"A", {}}, beta{"B", {}};
    for (long s = 0; s < p; ++s) {
        d.points.push_back("y" + std::to_string(s));
        alpha.points.push_back(static_cast<std::size_t>(s));
        beta.points.push_back(static_cast<std::size_t>(mod(s * qq, p)));
    }
    d.alpha.push_back(alpha);
    d.beta.push_back(beta);
    d.boundary_circles = {"z", "w"};

    for (long s = 0; s < p; ++s) {
        Region r;
        r.id = "r" + std::to_string(s);
        r.cycles.push_back({alpha_arc(0, a(s), true), beta_arc(0, t(s + 1), true), alpha_arc(0, a(s + qq), false),
                            beta_arc(0, t(s), false)});
        d.regions.push_back(r);
    }
    d.regions[a(p - 1)].cycles.push_back({Segment::boundary(0)});
    d.regions[a(p - 1 - qq)].cycles.push_back({Segment::boundary(1)});
    return d;
}

Diagram build_elementary_piece(const std::string& suffix) {
    Diagram d;
    d.points = {"u" + suffix, "v" + suffix};
    d.alpha.push_back(Curve{"A" + suffix, {0, 1}});
    d.beta.push_back(Curve{"B" + suffix, {0, 1}});
    for (int i = 0; i < 4; ++i) d.boundary_circles.push_back("d" + std::to_string(i) + suffix);
    auto region = [&](int i, Segment s1, Segment s2) {
        Region r;
        r.id = "R" + std::to_string(i + 1) + suffix;
        r.cycles = {{s1, s2}, {Segment::boundary(static_cast<std::size_t>(i))}};
        d.regions.push_back(r);
    };
    region(0, alpha_arc(0, 0, true), beta_arc(0, 0, false));
    region(1, beta_arc(0, 0, true), alpha_arc(0, 1, true));
    region(2, alpha_arc(0, 1, false), beta_arc(0, 1, true));
    region(3, beta_arc(0, 1, false), alpha_arc(0, 0, false));
    return d;
}

Diagram glue(const Diagram& d1, const std::string& c, const Diagram& d2, const std::string& d) {
    if (&d1 == &d2) throw Error(ErrorCode::SameDiagramCircle, "cannot glue a diagram to itself");
    const std::size_t c1 = d1.find_circle(c);
    const std::size_t c2 = d2.find_circle(d);
    std::size_t cyc1 = 0, cyc2 = 0;
    const std::size_t host1 = circle_host(d1, c1, cyc1);
    const std::size_t host2 = circle_host(d2, c2, cyc2);

    Diagram out;
    out.points = d1.points;
    out.alpha = d1.alpha;
    out.beta = d1.beta;

    std::set<std::string> point_ids(d1.points.begin(), d1.points.end());
    std::set<std::string> curve_ids, circle_ids, region_ids;
    for (const Curve& cv : d1.alpha) curve_ids.insert(cv.id);
    for (const Curve& cv : d1.beta) curve_ids.insert(cv.id);
    for (std::size_t i = 0; i < d1.boundary_circles.size(); ++i)
        if (i != c1) circle_ids.insert(d1.boundary_circles[i]);
    for (std::size_t i = 0; i < d1.regions.size(); ++i)
        if (i != host1) region_ids.insert(d1.regions[i].id);

    const std::size_t point_shift = d1.points.size();
    for (const std::string& p : d2.points) {
        out.points.push_back(fresh(p, point_ids));
        point_ids.insert(out.points.back());
    }
    const std::size_t alpha_shift = d1.alpha.size(), beta_shift = d1.beta.size();
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
        for (Curve cv : d2.curves(k)) {
            cv.id = fresh(cv.id, curve_ids);
            curve_ids.insert(cv.id);
            for (std::size_t& p : cv.points) p += point_shift;
            out.curves(k).push_back(cv);
        }

    // Circles: d1's without c, then d2's without d.
    std::vector<std::size_t> map1(d1.boundary_circles.size(), kNoPoint), map2(d2.boundary_circles.size(), kNoPoint);
    for (std::size_t i = 0; i < d1.boundary_circles.size(); ++i)
        if (i != c1) {
            map1[i] = out.boundary_circles.size();
            out.boundary_circles.push_back(d1.boundary_circles[i]);
        }
    for (std::size_t i = 0; i < d2.boundary_circles.size(); ++i)
        if (i != c2) {
            map2[i] = out.boundary_circles.size();
            out.boundary_circles.push_back(fresh(d2.boundary_circles[i], circle_ids));
            circle_ids.insert(out.boundary_circles.back());
        }

    auto remap = [&](const BoundaryCycle& cyc, bool second) {
        BoundaryCycle res = cyc;
        for (Segment& s : res) {
            if (s.kind == Segment::Kind::BoundaryCircle) {
                s.circle = (second ? map2 : map1)[s.circle];
            } else if (second) {
                s.arc.curve += s.arc.kind == CurveKind::Alpha ? alpha_shift : beta_shift;
            }
        }
        return res;
    };
    auto remap_region = [&](const Region& r, bool second, std::size_t skip_cycle) {
        Region res;
        res.id = r.id;
        res.genus = r.genus;
        for (std::size_t i = 0; i < r.cycles.size(); ++i)
            if (i != skip_cycle) res.cycles.push_back(remap(r.cycles[i], second));
        for (Corner cn : r.declared_corners) {
            if (second) cn.point += point_shift;
            res.declared_corners.push_back(cn);
        }
        return res;
    };

    for (std::size_t i = 0; i < d1.regions.size(); ++i) {
        if (i != host1) {
            out.regions.push_back(remap_region(d1.regions[i], false, kNoPoint));
            continue;
        }
        Region merged = remap_region(d1.regions[i], false, cyc1);
        Region other = remap_region(d2.regions[host2], true, cyc2);
        merged.id = fresh(d1.regions[i].id + "_" + d2.regions[host2].id, region_ids);
        region_ids.insert(merged.id);
        merged.genus += other.genus;
        merged.cycles.insert(merged.cycles.end(), other.cycles.begin(), other.cycles.end());
        merged.declared_corners.insert(merged.declared_corners.end(), other.declared_corners.begin(),
                                       other.declared_corners.end());
        out.regions.push_back(std::move(merged));
    }
    for (std::size_t i = 0; i < d2.regions.size(); ++i)
        if (i != host2) {
            Region r = remap_region(d2.regions[i], true, kNoPoint);
            r.id = fresh(r.id, region_ids);
            region_ids.insert(r.id);
            out.regions.push_back(std::move(r));
        }
    return out;
}

Diagram build_tpqn(long p, long q, long n) {
    TorusParams t{p, q, n};
    check_params(t);
    Diagram d = build_base(p, q);
    std::string outgoing = "z";
    for (long j = 1; j <= t.k(); ++j) {
        const std::string suffix = "_" + std::to_string(j);
        Diagram piece = build_elementary_piece(suffix);
        d = glue(d, outgoing, piece, "d1" + suffix);
        outgoing = "d2" + suffix;
    }
    return d;
}

Diagram stabilize(const Diagram& d, std::size_t region) {
    if (region >= d.regions.size()) throw Error(ErrorCode::InvalidArgument, "no such region");
    Diagram out = d;
    std::set<std::string> point_ids(d.points.begin(), d.points.end()), curve_ids;
    for (const Curve& cv : d.alpha) curve_ids.insert(cv.id);
    for (const Curve& cv : d.beta) curve_ids.insert(cv.id);

    const std::size_t s = out.points.size();
    out.points.push_back(fresh("s", point_ids));
    std::string a = fresh("As", curve_ids);
    curve_ids.insert(a);
    std::string b = fresh("Bs", curve_ids);
    const std::size_t ai = out.alpha.size(), bi = out.beta.size();
    out.alpha.push_back(Curve{a, {s}});
    out.beta.push_back(Curve{b, {s}});
    out.regions[region].cycles.push_back(
        {alpha_arc(ai, 0, true), beta_arc(bi, 0, true), alpha_arc(ai, 0, false), beta_arc(bi, 0, false)});
    return out;
}

Diagram build_product() {
    Diagram d;
    d.boundary_circles = {"outer", "inner"};
    Region r;
    r.id = "P";
    r.cycles = {{Segment::boundary(0)}, {Segment::boundary(1)}};
    d.regions.push_back(r);
    return d;
}

Diagram build_genus_one_piece() {
    Diagram d = build_elementary_piece();
    Region& r1 = d.regions[0];
    r1.cycles.pop_back();
    r1.genus = 1;
    d.boundary_circles.erase(d.boundary_circles.begin());
    for (Region& r : d.regions)
        for (BoundaryCycle& cyc : r.cycles)
            for (Segment& s : cyc)
                if (s.kind == Segment::Kind::BoundaryCircle) --s.circle;
    return d;
}

} // namespace sfh
