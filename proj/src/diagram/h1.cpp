#include "sfh/diagram.hpp"
#include "sfh/error.hpp"

#include <numeric>

namespace sfh {

bool CosetVec::is_zero() const {
    for (const Int& x : free)
        if (x != 0) return false;
    for (const Int& x : torsion)
        if (x != 0) return false;
    return true;
}

std::size_t H1Presentation::edge_of(const ArcRef& a) const {
    return (a.kind == CurveKind::Alpha ? alpha_arc_offset : beta_arc_offset).at(a.curve) + a.arc;
}

CosetVec H1Presentation::normalize(const IntVec& chain) const {
    if (chain.size() != edge_count) throw Error(ErrorCode::InvalidArgument, "chain has wrong length");
    IntVec bd = boundary1 * chain;
    for (const Int& x : bd)
        if (x != 0) throw Error(ErrorCode::InvalidArgument, "chain is not a cycle");
    IntVec y = normal_form.U * (cycle_coordinates * chain);
    CosetVec out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i >= normal_form.rank) {
            out.free.push_back(y[i]);
        } else {
            const Int& d = normal_form.D(i, i);
            if (d > 1) out.torsion.push_back(y[i]);
        }
    }
    return reduce(std::move(out));
}

CosetVec H1Presentation::reduce(CosetVec v) const {
    for (std::size_t i = 0; i < v.torsion.size(); ++i) {
        Int r = v.torsion[i] % torsion[i];
        if (r < 0) r += torsion[i];
        v.torsion[i] = r;
    }
    return v;
}

CosetVec H1Presentation::add(const CosetVec& a, const CosetVec& b) const {
    CosetVec out = a;
    for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] += b.free[i];
    for (std::size_t i = 0; i < out.torsion.size(); ++i) out.torsion[i] += b.torsion[i];
    return reduce(std::move(out));
}

CosetVec H1Presentation::negate(const CosetVec& a) const {
    CosetVec out = a;
    for (Int& x : out.free) x = -x;
    for (Int& x : out.torsion) x = -x;
    return reduce(std::move(out));
}

namespace {

struct Components {
    std::vector<std::size_t> parent;
    explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

H1Presentation h1_presentation(const Diagram& d) {
    if (d.regions.empty()) throw Error(ErrorCode::EmptyInput, "diagram has no regions");
    H1Presentation h;

    // Vertices: points, boundary circles, point-free curves, region centers.
    const std::size_t np = d.points.size();
    const std::size_t circle_vertex = np;
    std::vector<std::size_t> alpha_loop_vertex(d.alpha.size(), kNoPoint), beta_loop_vertex(d.beta.size(), kNoPoint);
    std::size_t nv = np + d.boundary_circles.size();
    for (std::size_t c = 0; c < d.alpha.size(); ++c)
        if (d.alpha[c].points.empty()) alpha_loop_vertex[c] = nv++;
    for (std::size_t c = 0; c < d.beta.size(); ++c)
        if (d.beta[c].points.empty()) beta_loop_vertex[c] = nv++;
    const std::size_t center_vertex = nv;
    nv += d.regions.size();

    struct Edge {
        std::size_t from, to;
    };
    std::vector<Edge> edges;
    auto arc_vertices = [&](const ArcRef& a) -> Edge {
        if (d.curves(a.kind)[a.curve].points.empty()) {
            std::size_t v = (a.kind == CurveKind::Alpha ? alpha_loop_vertex : beta_loop_vertex)[a.curve];
            return {v, v};
        }
        return {d.arc_start(a), d.arc_end(a)};
    };
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta}) {
        auto& offsets = k == CurveKind::Alpha ? h.alpha_arc_offset : h.beta_arc_offset;
        const auto& curves = d.curves(k);
        for (std::size_t c = 0; c < curves.size(); ++c) {
            offsets.push_back(edges.size());
            for (std::size_t a = 0; a < curves[c].arc_count(); ++a) edges.push_back(arc_vertices(ArcRef{k, c, a}));
        }
    }
    const std::size_t circle_edge = edges.size();
    for (std::size_t c = 0; c < d.boundary_circles.size(); ++c)
        edges.push_back({circle_vertex + c, circle_vertex + c});

    auto segment_vertex = [&](const Segment& s) {
        if (s.kind == Segment::Kind::BoundaryCircle) return circle_vertex + s.circle;
        Edge e = arc_vertices(s.arc);
        return s.forward ? e.from : e.to;
    };
    for (std::size_t r = 0; r < d.regions.size(); ++r) {
        for (const BoundaryCycle& cyc : d.regions[r].cycles)
            if (!cyc.empty()) edges.push_back({center_vertex + r, segment_vertex(cyc.front())});
        for (unsigned g = 0; g < 2 * d.regions[r].genus; ++g)
            edges.push_back({center_vertex + r, center_vertex + r});
    }

    h.edge_count = edges.size();
    h.vertex_count = nv;

    Components comp(nv);
    for (const Edge& e : edges) comp.unite(e.from, e.to);
    for (std::size_t v = 1; v < nv; ++v)
        if (comp.find(v) != comp.find(0))
            throw Error(ErrorCode::Disconnected, "diagram surface is disconnected");

    h.boundary1 = IntMatrix(nv, h.edge_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        h.boundary1(edges[e].to, e) += 1;
        h.boundary1(edges[e].from, e) -= 1;
    }

    // Relations: region boundaries, then alpha and beta curves.
    const std::size_t nrel = d.regions.size() + d.alpha.size() + d.beta.size();
    h.relation_chains = IntMatrix(h.edge_count, nrel);
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (const BoundaryCycle& cyc : d.regions[r].cycles)
            for (const Segment& s : cyc) {
                if (s.kind == Segment::Kind::BoundaryCircle)
                    h.relation_chains(circle_edge + s.circle, r) += 1;
                else
                    h.relation_chains(h.edge_of(s.arc), r) += s.forward ? 1 : -1;
            }
    std::size_t col = d.regions.size();
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta}) {
        const auto& curves = d.curves(k);
        for (std::size_t c = 0; c < curves.size(); ++c, ++col)
            for (std::size_t a = 0; a < curves[c].arc_count(); ++a)
                h.relation_chains(h.edge_of(ArcRef{k, c, a}), col) += 1;
    }

    std::vector<IntVec> z1 = integer_kernel_basis(h.boundary1);
    const std::size_t z = z1.size();
    h.cycle_coordinates = IntMatrix(z, h.edge_count);
    if (z > 0) {
        IntMatrix K = IntMatrix::from_columns(h.edge_count, z1);
        SnfResult ks = smith_normal_form(K);
        IntMatrix proj(z, h.edge_count);
        for (std::size_t i = 0; i < z; ++i) proj(i, i) = 1;
        h.cycle_coordinates = ks.V * (proj * ks.U);
    }
    h.relations = h.cycle_coordinates * h.relation_chains;
    h.normal_form = smith_normal_form(h.relations);
    h.b1 = z - h.normal_form.rank;
    for (std::size_t i = 0; i < h.normal_form.rank; ++i)
        if (h.normal_form.D(i, i) > 1) h.torsion.push_back(h.normal_form.D(i, i));
    return h;
}

} // namespace sfh
