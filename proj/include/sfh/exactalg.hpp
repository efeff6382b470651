#pragma once

// Exact integer / rational linear algebra and low-dimensional convex hulls.
// Everything here works over GMP integers and rationals; no floating point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sfh {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    // Builds a matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, std::span<const IntVec> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    IntVec column(std::size_t c) const;
    IntMatrix transpose() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& rhs) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t r);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// U * A * V == D, D diagonal with d_1 | d_2 | ... and d_i >= 0.
struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;

    IntVec diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Saturated basis of {v : A v = 0} in Z^cols.
std::vector<IntVec> integer_kernel_basis(const IntMatrix& a);

// Some m with A m = b, or nullopt when no integer solution exists.
std::optional<IntVec> solve_integer_affine(const IntMatrix& a, const IntVec& b);
// Same, reusing a precomputed normal form of A.
std::optional<IntVec> solve_integer_affine(const SnfResult& snf, const IntVec& b);

// Primitive integer multiple of a rational vector (positive scale factor).
IntVec primitive_integer_vector(const RatVec& v);

// ---------------------------------------------------------------------------
// Two-element field

using BitVec = std::vector<bool>;

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    BitMatrix operator*(const BitMatrix& rhs) const;
    BitVec operator*(const BitVec& v) const;
    bool is_zero() const;

private:
    friend struct Gf2Eliminator;
    static constexpr std::size_t kWordBits = 64;
    std::size_t words_per_row() const noexcept { return (cols_ + kWordBits - 1) / kWordBits; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Gf2RankKernel {
    std::size_t rank = 0;
    std::vector<BitVec> kernel;
};

Gf2RankKernel gf2_rank_kernel(const BitMatrix& a);

// ---------------------------------------------------------------------------
// Rational polytopes

// normal . x <= offset (as a facet) or normal . x == offset (as an equation).
struct Halfspace {
    RatVec normal;
    Rat offset;

    bool operator==(const Halfspace&) const = default;
};

struct RatPolytope {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<RatVec> vertices;  // sorted lexicographically
    std::vector<Halfspace> facets; // integer-primitive normals, sorted
    std::vector<Halfspace> equations;

    bool contains(const RatVec& x) const;
};

constexpr std::size_t kMaxHullDimension = 8;

RatPolytope convex_hull(std::span<const RatVec> points);

// Centroid of the polytope body under the uniform measure on its affine hull.
RatVec body_centroid(const RatPolytope& polytope);

Rat dot(const RatVec& a, const RatVec& b);

// Affine dimension of a finite point set (-1 for an empty set is reported as 0).
std::size_t affine_dimension(std::span<const RatVec> points);

// Row-rank of a rational matrix given as row vectors.
std::size_t rational_rank(std::vector<RatVec> rows);

// Basis of {x : rows * x = 0} in Q^cols.
std::vector<RatVec> rational_nullspace(std::vector<RatVec> rows, std::size_t cols);

} // namespace sfh
