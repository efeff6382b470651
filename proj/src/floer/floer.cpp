#include "sfh/floer.hpp"
#include "sfh/error.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sfh {

std::vector<Generator> enumerate_generators(const Diagram& d) {
    std::vector<std::size_t> beta_of(d.points.size(), kNoPoint);
    for (std::size_t b = 0; b < d.beta.size(); ++b)
        for (std::size_t p : d.beta[b].points) beta_of[p] = b;
    std::vector<std::vector<std::size_t>> candidates(d.alpha.size());
    for (std::size_t a = 0; a < d.alpha.size(); ++a) {
        candidates[a] = d.alpha[a].points;
        std::sort(candidates[a].begin(), candidates[a].end());
    }

    std::vector<Generator> out;
    Generator cur;
    std::vector<bool> used(d.beta.size(), false);
    auto extend = [&](auto&& self, std::size_t a) -> void {
        if (a == d.alpha.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t p : candidates[a]) {
            const std::size_t b = beta_of[p];
            if (used[b]) continue;
            used[b] = true;
            cur.points.push_back(p);
            self(self, a + 1);
            cur.points.pop_back();
            used[b] = false;
        }
    };
    extend(extend, 0);
    return out;
}

std::string generator_name(const Diagram& d, const Generator& x) {
    std::string s = "{";
    for (std::size_t i = 0; i < x.points.size(); ++i) {
        if (i) s += ",";
        s += d.points[x.points[i]];
    }
    return s + "}";
}

namespace {

// Adds the arcs of curve c from the position of `from` forward to the position of `to`.
void add_path(const Diagram& d, const H1Presentation& h, CurveKind k, std::size_t c, std::size_t from,
              std::size_t to, long sign, IntVec& chain) {
    const Curve& curve = d.curves(k)[c];
    const std::size_t n = curve.points.size();
    auto pos = [&](std::size_t p) {
        return static_cast<std::size_t>(std::find(curve.points.begin(), curve.points.end(), p) - curve.points.begin());
    };
    std::size_t i = pos(from);
    const std::size_t j = pos(to);
    if (i == n || j == n) throw Error(ErrorCode::InvalidArgument, "generator point is not on curve " + curve.id);
    while (i != j) {
        chain[h.edge_of(ArcRef{k, c, i})] += sign;
        i = (i + 1) % n;
    }
}

} // namespace

IntVec epsilon_chain(const Diagram& d, const H1Presentation& h, const Generator& x, const Generator& y) {
    IntVec chain = h.zero_chain();
    for (std::size_t a = 0; a < d.alpha.size(); ++a) add_path(d, h, CurveKind::Alpha, a, x.points[a], y.points[a], 1, chain);
    // On each beta curve, the x-point and the y-point it carries.
    std::vector<std::size_t> bx(d.beta.size(), kNoPoint), by(d.beta.size(), kNoPoint);
    std::vector<std::size_t> beta_of(d.points.size(), kNoPoint);
    for (std::size_t b = 0; b < d.beta.size(); ++b)
        for (std::size_t p : d.beta[b].points) beta_of[p] = b;
    for (std::size_t p : x.points) bx[beta_of[p]] = p;
    for (std::size_t p : y.points) by[beta_of[p]] = p;
    for (std::size_t b = 0; b < d.beta.size(); ++b) add_path(d, h, CurveKind::Beta, b, bx[b], by[b], -1, chain);
    return chain;
}

CosetVec epsilon(const Diagram& d, const H1Presentation& h, const Generator& x, const Generator& y) {
    return h.normalize(epsilon_chain(d, h, x, y));
}

SpinPartition partition_spinc(const Diagram& d, const H1Presentation& h, const std::vector<Generator>& gens) {
    SpinPartition part;
    if (gens.empty()) return part;
    std::vector<CosetVec> reps;
    reps.reserve(gens.size());
    for (const Generator& g : gens) reps.push_back(epsilon(d, h, g, gens.front()));
    std::vector<CosetVec> distinct = reps;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    part.class_reps = distinct;
    part.members.resize(distinct.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t id =
            static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), reps[i]) - distinct.begin());
        part.assignment.push_back(SpinAssignment{id, reps[i]});
        part.members[id].push_back(i);
    }
    return part;
}

// ---------------------------------------------------------------------------

DomainSolver::DomainSolver(const Diagram& d) : diagram_(&d), system_(domain_system(d)) {
    snf_ = smith_normal_form(system_.matrix);
    if (!system_.free_regions.empty())
        for (const IntVec& v : integer_kernel_basis(system_.matrix))
            lattice_.basis.push_back(system_.lift(v, d.regions.size()));
}

IntVec DomainSolver::rhs(const Generator& x, const Generator& y) const {
    IntVec b(system_.matrix.rows());
    for (std::size_t p : x.points) {
        b[system_.alpha_row(p)] -= 1;
        b[system_.beta_row(p)] += 1;
    }
    for (std::size_t p : y.points) {
        b[system_.alpha_row(p)] += 1;
        b[system_.beta_row(p)] -= 1;
    }
    return b;
}

ConnectingDomain DomainSolver::connect(const Generator& x, const Generator& y) const {
    auto m = solve_integer_affine(snf_, rhs(x, y));
    if (!m) return NoDomain{};
    Domain dom{system_.lift(*m, diagram_->regions.size())};
    if (lattice_.rank() > 0) return NonUnique{dom, lattice_};
    return dom;
}

ConnectingDomain connecting_domain(const Diagram& d, const Generator& x, const Generator& y) {
    return DomainSolver(d).connect(x, y);
}

Rat point_measure(const Diagram& d, const IntVec& dom, std::size_t point) {
    Rat sum = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r) {
        if (dom[r] == 0) continue;
        for (const Corner& c : region_corners(d, d.regions[r]))
            if (c.point == point) sum += dom[r];
    }
    return sum / 4;
}

Rat maslov_index_rational(const Diagram& d, const IntVec& dom, const Generator& x, const Generator& y) {
    Rat mu = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        if (dom[r] != 0) mu += Rat(dom[r]) * euler_measure(d.regions[r]);
    for (std::size_t p : x.points) mu += point_measure(d, dom, p);
    for (std::size_t p : y.points) mu += point_measure(d, dom, p);
    mu.canonicalize();
    return mu;
}

Int maslov_index(const Diagram& d, const IntVec& dom, const Generator& x, const Generator& y) {
    Rat mu = maslov_index_rational(d, dom, x, y);
    if (mu.get_den() != 1)
        throw Error(ErrorCode::NonIntegerIndex, "Maslov index " + mu.get_str() + " is not an integer");
    return mu.get_num();
}

// ---------------------------------------------------------------------------

const char* to_string(DifferentialKind k) {
    switch (k) {
    case DifferentialKind::Exact: return "exact";
    case DifferentialKind::ZeroCertificate: return "zero-certificate";
    case DifferentialKind::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

bool nonnegative(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

IntVec unique_domain(const ConnectingDomain& cd) {
    if (const auto* dom = std::get_if<Domain>(&cd)) return dom->multiplicities;
    throw std::logic_error("class-mates without a unique connecting domain");
}

} // namespace

DifferentialResult differential(const Diagram& d, const std::vector<Generator>& gens, const SpinPartition& classes) {
    DomainSolver solver(d);
    if (solver.lattice().rank() > 0)
        throw Error(ErrorCode::LatticeNotZero, "periodic lattice has rank " + std::to_string(solver.lattice().rank()) +
                                                   "; connecting domains are not unique");
    DifferentialResult res;
    res.matrix = BitMatrix(gens.size(), gens.size());
    const bool nice = is_nice(d).nice;
    res.kind = nice ? DifferentialKind::Exact : DifferentialKind::ZeroCertificate;

    for (const auto& members : classes.members)
        for (std::size_t xi : members)
            for (std::size_t yi : members) {
                if (xi == yi) continue;
                const Generator& x = gens[xi];
                const Generator& y = gens[yi];
                const IntVec m = unique_domain(solver.connect(x, y));
                if (!nonnegative(m)) continue;
                if (nice) {
                    std::size_t moved = 0;
                    for (std::size_t a = 0; a < x.points.size(); ++a) moved += x.points[a] != y.points[a];
                    if (moved == 0 || moved > 2) continue;
                    if (!std::all_of(m.begin(), m.end(), [](const Int& v) { return v <= 1; })) continue;
                    if (maslov_index_rational(d, m, x, y) != 1) continue;
                    bool empty = true;
                    for (std::size_t p : x.points)
                        if (std::find(y.points.begin(), y.points.end(), p) != y.points.end() &&
                            point_measure(d, m, p) != 0)
                            empty = false;
                    if (empty) res.matrix.set(yi, xi, true);
                } else if (maslov_index_rational(d, m, x, y) == 1) {
                    res.kind = DifferentialKind::Undetermined;
                    res.obstruction = std::make_pair(xi, yi);
                    res.matrix = BitMatrix(gens.size(), gens.size());
                    return res;
                }
            }
    return res;
}

std::size_t SFHTable::total_rank() const {
    std::size_t t = 0;
    for (const ClassHomology& c : classes) t += c.dimension;
    return t;
}

SFHTable homology(const Diagram& d) {
    require_valid(d);
    SFHTable table;
    H1Presentation h = h1_presentation(d);
    table.b1 = h.b1;
    table.torsion = h.torsion;
    table.generators = enumerate_generators(d);
    table.partition = partition_spinc(d, h, table.generators);

    DifferentialResult diff = differential(d, table.generators, table.partition);
    table.differential = diff.kind;
    if (diff.kind == DifferentialKind::Undetermined) {
        const auto [xi, yi] = *diff.obstruction;
        throw Error(ErrorCode::DifferentialUndetermined,
                    "positive index-one domain from " + generator_name(d, table.generators[xi]) + " to " +
                        generator_name(d, table.generators[yi]) + " on a diagram that is not nice");
    }
    if (!(diff.matrix * diff.matrix).is_zero()) throw std::logic_error("differential does not square to zero");

    DomainSolver solver(d);
    table.lattice_rank = solver.lattice().rank();
    for (std::size_t c = 0; c < table.partition.members.size(); ++c) {
        const auto& members = table.partition.members[c];
        ClassHomology ch;
        ch.coset_rep = table.partition.class_reps[c];
        ch.generators = members.size();
        BitMatrix block(members.size(), members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                block.set(i, j, diff.matrix.get(members[i], members[j]));
        ch.differential_rank = gf2_rank_kernel(block).rank;
        ch.dimension = ch.generators - 2 * ch.differential_rank;
        for (std::size_t xi : members) {
            const IntVec m = unique_domain(solver.connect(table.generators[xi], table.generators[members.front()]));
            ch.gradings.push_back(maslov_index(d, m, table.generators[xi], table.generators[members.front()]));
        }
        table.classes.push_back(std::move(ch));
    }
    return table;
}

} // namespace sfh
