#include "sfh/diagram.hpp"
#include "sfh/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sfh {

IntVec DomainSystem::lift(const IntVec& free_values, std::size_t region_count) const {
    IntVec out(region_count);
    for (std::size_t i = 0; i < free_regions.size(); ++i) out[free_regions[i]] = free_values[i];
    return out;
}

DomainSystem domain_system(const Diagram& d) {
    DomainSystem sys;
    std::vector<std::size_t> column(d.regions.size(), kNoPoint);
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        if (!touches_boundary(d.regions[r])) {
            column[r] = sys.free_regions.size();
            sys.free_regions.push_back(r);
        }

    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (const BoundaryCycle& cyc : d.regions[r].cycles)
            for (const Segment& s : cyc) {
                if (s.kind != Segment::Kind::Arc) continue;
                ArcSides& sides = sys.sides[s.arc];
                (s.forward ? sides.plus : sides.minus) = r;
            }

    sys.matrix = IntMatrix(2 * d.points.size(), sys.free_regions.size());
    // Coefficient of the arc in the boundary of the domain: m(plus) - m(minus).
    auto add_jump = [&](std::size_t row, const ArcRef& arc, long sign) {
        const ArcSides& sides = sys.sides.at(arc);
        if (column[sides.plus] != kNoPoint) sys.matrix(row, column[sides.plus]) += sign;
        if (column[sides.minus] != kNoPoint) sys.matrix(row, column[sides.minus]) -= sign;
    };
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta}) {
        const auto& curves = d.curves(k);
        for (std::size_t c = 0; c < curves.size(); ++c) {
            const std::size_t n = curves[c].points.size();
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t p = curves[c].points[i];
                const std::size_t row = k == CurveKind::Alpha ? sys.alpha_row(p) : sys.beta_row(p);
                // Boundary of the 1-chain at p: incoming arc minus outgoing arc.
                add_jump(row, ArcRef{k, c, (i + n - 1) % n}, +1);
                add_jump(row, ArcRef{k, c, i}, -1);
            }
        }
    }
    return sys;
}

PeriodicLattice periodic_lattice(const Diagram& d) {
    DomainSystem sys = domain_system(d);
    PeriodicLattice lat;
    if (sys.free_regions.empty()) return lat;
    for (const IntVec& v : integer_kernel_basis(sys.matrix)) lat.basis.push_back(sys.lift(v, d.regions.size()));
    return lat;
}

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
    if (stop) return;
    if (cur.size() == k) {
        stop = visit(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n && !stop; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, visit, stop);
        cur.pop_back();
    }
}

} // namespace

AdmissibilityResult is_admissible(const Diagram& d, std::size_t max_rank) {
    PeriodicLattice lat = periodic_lattice(d);
    AdmissibilityResult res;
    const std::size_t r = lat.rank();
    if (r == 0) return res;
    if (r > max_rank)
        throw Error(ErrorCode::UndecidedBeyondBound,
                    "periodic lattice rank " + std::to_string(r) + " exceeds the admissibility search bound " +
                        std::to_string(max_rank));

    // Rows of the basis matrix (one per region), deduplicated, zero rows dropped.
    std::set<RatVec> unique_rows;
    for (std::size_t reg = 0; reg < d.regions.size(); ++reg) {
        RatVec row(r);
        bool nonzero = false;
        for (std::size_t j = 0; j < r; ++j) {
            row[j] = lat.basis[j][reg];
            nonzero = nonzero || row[j] != 0;
        }
        if (nonzero) unique_rows.insert(row);
    }
    std::vector<RatVec> rows(unique_rows.begin(), unique_rows.end());

    // {z : Bz >= 0} is a pointed cone; it is nonzero iff some extreme ray exists,
    // and every extreme ray is cut out by r-1 independent tight rows.
    auto image = [&](const RatVec& z) {
        RatVec vals(d.regions.size());
        for (std::size_t reg = 0; reg < d.regions.size(); ++reg)
            for (std::size_t j = 0; j < r; ++j) vals[reg] += Rat(lat.basis[j][reg]) * z[j];
        return vals;
    };
    std::optional<RatVec> ray;
    std::vector<std::size_t> cur;
    bool stop = false;
    choose(rows.size(), r - 1, 0, cur,
           [&](const std::vector<std::size_t>& subset) {
               std::vector<RatVec> tight;
               for (std::size_t i : subset) tight.push_back(rows[i]);
               if (!tight.empty() && rational_rank(tight) != r - 1) return false;
               std::vector<RatVec> ns = rational_nullspace(tight, r);
               if (ns.size() != 1) return false;
               for (int sign : {1, -1}) {
                   RatVec z = ns.front();
                   if (sign < 0)
                       for (Rat& x : z) x = -x;
                   RatVec vals = image(z);
                   if (std::all_of(vals.begin(), vals.end(), [](const Rat& x) { return x >= 0; })) {
                       ray = vals;
                       return true;
                   }
               }
               return false;
           },
           stop);
    if (ray) {
        res.admissible = false;
        res.witness = primitive_integer_vector(*ray);
    }
    return res;
}

NicenessResult is_nice(const Diagram& d) {
    NicenessResult res;
    for (std::size_t i = 0; i < d.regions.size(); ++i) {
        const Region& r = d.regions[i];
        if (touches_boundary(r)) continue;
        const std::size_t c = corner_count(r);
        if (r.genus != 0 || r.cycles.size() != 1 || (c != 2 && c != 4)) res.offending_regions.push_back(i);
    }
    res.nice = res.offending_regions.empty();
    return res;
}

} // namespace sfh
