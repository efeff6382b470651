#pragma once

// Generators, relative Spin^c classes, domains, Maslov indices and the chain
// complex over GF(2).

#include "sfh/diagram.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sfh {

// points[i] is the intersection point used on alpha curve i.
struct Generator {
    std::vector<std::size_t> points;

    auto operator<=>(const Generator&) const = default;
};

std::vector<Generator> enumerate_generators(const Diagram& d);

std::string generator_name(const Diagram& d, const Generator& x);

// 1-cycle (in the edge basis of h) made of alpha arcs from x to y minus beta arcs from x to y.
IntVec epsilon_chain(const Diagram& d, const H1Presentation& h, const Generator& x, const Generator& y);
CosetVec epsilon(const Diagram& d, const H1Presentation& h, const Generator& x, const Generator& y);

struct SpinAssignment {
    std::size_t class_id = 0;
    CosetVec coset_rep;
};

// Classes are numbered by ascending coset representative, measured from the
// first generator.
struct SpinPartition {
    std::vector<SpinAssignment> assignment;         // per generator
    std::vector<CosetVec> class_reps;               // per class
    std::vector<std::vector<std::size_t>> members;  // per class, ascending generator index
};

SpinPartition partition_spinc(const Diagram& d, const H1Presentation& h, const std::vector<Generator>& gens);

// ---------------------------------------------------------------------------
// Domains

struct Domain {
    IntVec multiplicities; // per region
};
struct NoDomain {};
struct NonUnique {
    Domain particular;
    PeriodicLattice lattice;
};
using ConnectingDomain = std::variant<Domain, NoDomain, NonUnique>;

// Solves the domain system once per diagram and answers many queries.
class DomainSolver {
public:
    explicit DomainSolver(const Diagram& d);

    const DomainSystem& system() const { return system_; }
    const PeriodicLattice& lattice() const { return lattice_; }

    ConnectingDomain connect(const Generator& x, const Generator& y) const;
    IntVec rhs(const Generator& x, const Generator& y) const;

private:
    const Diagram* diagram_;
    DomainSystem system_;
    SnfResult snf_;
    PeriodicLattice lattice_;
};

ConnectingDomain connecting_domain(const Diagram& d, const Generator& x, const Generator& y);

// Average of the multiplicities of the four quadrants at p.
Rat point_measure(const Diagram& d, const IntVec& dom, std::size_t point);

// sum_R m_R e(R) + n_x + n_y.  Throws NonIntegerIndex when the sum is fractional.
Int maslov_index(const Diagram& d, const IntVec& dom, const Generator& x, const Generator& y);
Rat maslov_index_rational(const Diagram& d, const IntVec& dom, const Generator& x, const Generator& y);

// ---------------------------------------------------------------------------
// Differential and homology

enum class DifferentialKind { Exact, ZeroCertificate, Undetermined };

const char* to_string(DifferentialKind k);

struct DifferentialResult {
    DifferentialKind kind = DifferentialKind::Exact;
    BitMatrix matrix; // entry (y, x) is the coefficient of y in dx
    // For Undetermined: a class-mate pair with a positive index-one domain.
    std::optional<std::pair<std::size_t, std::size_t>> obstruction;
};

// Throws LatticeNotZero when the boundary-avoiding periodic lattice is nonzero.
DifferentialResult differential(const Diagram& d, const std::vector<Generator>& gens, const SpinPartition& classes);

struct ClassHomology {
    CosetVec coset_rep;
    std::size_t generators = 0;
    std::size_t differential_rank = 0;
    std::size_t dimension = 0;
    std::vector<Int> gradings; // relative Maslov grading per member, first member at 0
};

struct SFHTable {
    std::vector<Generator> generators;
    SpinPartition partition;
    DifferentialKind differential = DifferentialKind::Exact;
    std::vector<ClassHomology> classes;
    std::size_t b1 = 0;
    IntVec torsion;
    std::size_t lattice_rank = 0;

    std::size_t total_rank() const;
};

// Throws DifferentialUndetermined when neither route settles the differential.
SFHTable homology(const Diagram& d);

} // namespace sfh
