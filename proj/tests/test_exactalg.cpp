#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sfh/error.hpp"
#include "sfh/exactalg.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace sfh;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

Rat canonical(Rat x) {
    x.canonicalize();
    return x;
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("smith normal form: small cases") {
    SUBCASE("identity") {
        auto snf = smith_normal_form(IntMatrix{{1, 0}, {0, 1}});
        CHECK(snf.D == (IntMatrix{{1, 0}, {0, 1}}));
        CHECK(snf.rank == 2);
    }
    SUBCASE("zero") {
        auto snf = smith_normal_form(IntMatrix{{0}});
        CHECK(snf.D == (IntMatrix{{0}}));
        CHECK(snf.rank == 0);
    }
    SUBCASE("[[2,4],[6,8]]") {
        IntMatrix a{{2, 4}, {6, 8}};
        auto snf = smith_normal_form(a);
        // Determinantal divisors from the minor oracle: gcd of entries 2, |det| 8.
        CHECK(oracle::determinantal_divisors(a) == IntVec{2, 8});
        CHECK(snf.D == (IntMatrix{{2, 0}, {0, 4}}));
        CHECK(snf.U * a * snf.V == snf.D);
    }
    SUBCASE("rectangular and empty shapes") {
        auto snf = smith_normal_form(IntMatrix(0, 3));
        CHECK(snf.rank == 0);
        CHECK(snf.V.rows() == 3);
        auto wide = smith_normal_form(IntMatrix{{0, 0, 6}, {0, 4, 0}});
        CHECK(wide.diagonal() == IntVec{2, 12});
    }
}

TEST_CASE("smith normal form agrees with the minor oracle on random matrices") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, r, c, -6, 6);
        if (trial % 7 == 0) a(0, 0) *= 12; // push some larger invariants
        SnfResult snf = smith_normal_form(a);
        REQUIRE(snf.U * a * snf.V == snf.D);
        CHECK(abs(oracle::int_determinant(snf.U)) == 1);
        CHECK(abs(oracle::int_determinant(snf.V)) == 1);
        IntVec d = snf.diagonal();
        for (std::size_t i = 0; i + 1 < snf.rank; ++i) CHECK(d[i + 1] % d[i] == 0);
        for (std::size_t i = snf.rank; i < d.size(); ++i) CHECK(d[i] == 0);
        // d_1 ... d_i equals the gcd of i x i minors.
        IntVec dd = oracle::determinantal_divisors(a);
        Int prod = 1;
        for (std::size_t i = 0; i < d.size(); ++i) {
            prod *= d[i];
            CHECK(prod == dd[i]);
        }
    }
}

TEST_CASE("integer kernel basis") {
    CHECK(integer_kernel_basis(IntMatrix::identity(2)).empty());

    auto k = integer_kernel_basis(IntMatrix{{1, 1}});
    REQUIRE(k.size() == 1);
    CHECK(((k[0] == IntVec{1, -1}) || (k[0] == IntVec{-1, 1})));

    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 6, -3, 3);
        if (trial % 3 == 0)
            for (std::size_t j = 0; j < 6; ++j) a(3, j) = a(0, j) * 2 - a(1, j); // force rank drop
        auto basis = integer_kernel_basis(a);
        for (const IntVec& v : basis) CHECK(a * v == IntVec(4));
        CHECK(basis.size() == 6 - oracle::rational_rank_of(a));
        if (basis.empty()) continue;
        // Saturation: the basis matrix has all invariant factors equal to 1.
        SnfResult s = smith_normal_form(IntMatrix::from_columns(6, basis));
        CHECK(s.rank == basis.size());
        for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.D(i, i) == 1);
    }
}

TEST_CASE("solve integer affine") {
    CHECK(solve_integer_affine(IntMatrix::identity(2), IntVec{3, -1}) == IntVec{3, -1});
    CHECK_FALSE(solve_integer_affine(IntMatrix{{2}}, IntVec{1}).has_value());
    CHECK(solve_integer_affine(IntMatrix{{1, 1}, {0, 2}}, IntVec{3, 4}) == IntVec{1, 2});
    CHECK_FALSE(solve_integer_affine(IntMatrix{{1, 1}, {1, 1}}, IntVec{1, 2}).has_value());
    auto under = solve_integer_affine(IntMatrix{{2, 3}}, IntVec{1});
    REQUIRE(under.has_value());
    CHECK(2 * (*under)[0] + 3 * (*under)[1] == 1);
}

TEST_CASE("gf2 rank and kernel") {
    auto id = gf2_rank_kernel(BitMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.empty());

    BitMatrix ones(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.set(i, j, true);
    auto r = gf2_rank_kernel(ones);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.size() == 1);
    CHECK(r.kernel[0] == BitVec{true, true});

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 8, cols = 8 + trial % 5;
        BitMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, (rng() % 3) == 0);
        auto rk = gf2_rank_kernel(m);
        CHECK(rk.rank == oracle::gf2_rank_by_span(m));
        CHECK(rk.rank + rk.kernel.size() == cols);
        for (const BitVec& v : rk.kernel) {
            BitVec prod = m * v;
            CHECK(std::none_of(prod.begin(), prod.end(), [](bool b) { return b; }));
        }
    }
}

TEST_CASE("convex hull: small cases") {
    SUBCASE("collinear 1-D") {
        std::vector<RatVec> pts{rv({0}), rv({2}), rv({4})};
        RatPolytope p = convex_hull(pts);
        CHECK(p.dim == 1);
        CHECK(p.vertices == std::vector<RatVec>{rv({0}), rv({4})});
        CHECK(p.facets.size() == 2);
    }
    SUBCASE("square with center") {
        std::vector<RatVec> pts{rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1}), {Rat(1, 2), Rat(1, 2)}};
        RatPolytope p = convex_hull(pts);
        CHECK(p.dim == 2);
        CHECK(p.vertices.size() == 4);
        CHECK(p.facets.size() == 4);
        CHECK(p.equations.empty());
    }
    SUBCASE("square edge midpoints are not vertices") {
        std::vector<RatVec> pts{rv({0, 0}), rv({2, 0}), rv({1, 0}), rv({0, 2}), rv({2, 2}), rv({2, 1})};
        RatPolytope p = convex_hull(pts);
        CHECK(p.vertices.size() == 4);
        CHECK(p.facets.size() == 4);
    }
    SUBCASE("planar points in 3-D") {
        std::vector<RatVec> pts{rv({0, 0, 1}), rv({3, 0, 1}), rv({0, 3, 1}), rv({1, 1, 1})};
        RatPolytope p = convex_hull(pts);
        CHECK(p.dim == 2);
        CHECK(p.vertices.size() == 3);
        CHECK(p.equations.size() == 1);
        for (const RatVec& x : pts) CHECK(p.contains(x));
        CHECK_FALSE(p.contains(rv({1, 1, 2})));
    }
    SUBCASE("single point") {
        std::vector<RatVec> pts{rv({7}), rv({7})};
        RatPolytope p = convex_hull(pts);
        CHECK(p.dim == 0);
        CHECK(p.vertices == std::vector<RatVec>{rv({7})});
    }
    SUBCASE("errors") {
        std::vector<RatVec> none;
        CHECK_THROWS_AS(convex_hull(none), Error);
        std::vector<RatVec> too_big{RatVec(9)};
        CHECK_THROWS_AS(convex_hull(too_big), Error);
    }
}

TEST_CASE("convex hull agrees with brute-force facet enumeration in 3-D") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<RatVec> pts;
        for (int i = 0; i < 20; ++i) pts.push_back({canonical(Rat(coord(rng), 1 + rng() % 3)), Rat(coord(rng)), Rat(coord(rng))});
        RatPolytope p = convex_hull(pts);
        REQUIRE(p.dim == 3);
        for (const RatVec& x : pts) CHECK(p.contains(x));

        auto brute = oracle::brute_force_hull_3d(pts);
        CHECK(p.vertices == brute.vertices);
        CHECK(p.facets.size() == brute.facets.size());
        for (const Halfspace& h : p.facets)
            CHECK(std::find(brute.facets.begin(), brute.facets.end(), h) != brute.facets.end());

        // Idempotence.
        RatPolytope again = convex_hull(p.vertices);
        CHECK(again.vertices == p.vertices);
        CHECK(again.facets == p.facets);

        // Each vertex lies on at least dim facets.
        for (const RatVec& v : p.vertices) {
            std::size_t tight = 0;
            for (const Halfspace& h : p.facets) tight += dot(h.normal, v) == h.offset;
            CHECK(tight >= p.dim);
        }
        CHECK(p.contains(body_centroid(p)));
    }
}

TEST_CASE("convex hull in 4-D and 5-D") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (std::size_t n : {4u, 5u}) {
        // Cube corners plus interior noise: exactly 2^n vertices and 2n facets.
        std::vector<RatVec> pts;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            RatVec v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1u ? 5 : -5;
            pts.push_back(v);
        }
        for (int i = 0; i < 15; ++i) {
            RatVec v(n);
            for (auto& x : v) x = coord(rng);
            pts.push_back(v);
        }
        std::shuffle(pts.begin(), pts.end(), rng);
        RatPolytope p = convex_hull(pts);
        CHECK(p.dim == n);
        CHECK(p.vertices.size() == (1u << n));
        CHECK(p.facets.size() == 2 * n);
        CHECK(body_centroid(p) == RatVec(n));
    }
}

TEST_CASE("body centroid") {
    CHECK(body_centroid(convex_hull(std::vector<RatVec>{rv({0}), rv({4})})) == rv({2}));
    CHECK(body_centroid(convex_hull(std::vector<RatVec>{rv({7})})) == rv({7}));
    CHECK(body_centroid(convex_hull(std::vector<RatVec>{rv({0, 0}), rv({3, 0}), rv({0, 3})})) == rv({1, 1}));
    // Body centroid differs from the vertex average: trapezoid (0,0),(4,0),(1,1),(3,1) has
    // area 3 and centroid x = 2, y = (1/3)(4*0 + ... ) computed by splitting into pieces.
    // Split: rectangle [1,3]x[0,1] (area 2, c=(2,1/2)) + two triangles of area 1/2 with
    // centroids (2/3,1/3) and (10/3,1/3).  y = (2*1/2 + 1/2*1/3*2)/3 = 4/9.
    auto c = body_centroid(convex_hull(std::vector<RatVec>{rv({0, 0}), rv({4, 0}), rv({1, 1}), rv({3, 1})}));
    CHECK(c == RatVec{Rat(2), Rat(4, 9)});
    // Segment embedded in 2-D.
    CHECK(body_centroid(convex_hull(std::vector<RatVec>{rv({0, 0}), rv({2, 4}), rv({1, 2})})) == rv({1, 2}));
}
