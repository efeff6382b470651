#include "sfh/exactalg.hpp"
#include "sfh/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sfh {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UndecidedBeyondBound: return "UndecidedBeyondBound";
    case ErrorCode::NonIntegerIndex: return "NonIntegerIndex";
    case ErrorCode::LatticeNotZero: return "LatticeNotZero";
    case ErrorCode::DifferentialUndetermined: return "DifferentialUndetermined";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ZeroRank: return "ZeroRank";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::SameDiagramCircle: return "SameDiagramCircle";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndeclaredIdentifier: return "UndeclaredIdentifier";
    case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
    }
    return "Unknown";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVec> columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        assert(columns[c].size() == rows);
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t r) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix/vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

IntVec SnfResult::diagonal() const {
    IntVec d(std::min(D.rows(), D.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
    return d;
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_min_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
            const Int& v = a(r, c);
            if (v == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                best = av;
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_min_pivot(a, t, pr, pc)) break;
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a(r, t) == 0) continue;
                Int q = a(r, t) / a(t, t);
                a.add_row_multiple(r, t, -q);
                u.add_row_multiple(r, t, -q);
                if (a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a(t, c) == 0) continue;
                Int q = a(t, c) / a(t, t);
                a.add_col_multiple(c, t, -q);
                v.add_col_multiple(c, t, -q);
                if (a(t, c) != 0) clean = false;
            }
            if (!clean) {
                // A smaller remainder now sits in row/column t; move it to the pivot.
                std::size_t br = t, bc = t;
                Int best = abs(a(t, t));
                for (std::size_t r = t + 1; r < m; ++r)
                    if (a(r, t) != 0 && abs(a(r, t)) < best) { best = abs(a(r, t)); br = r; bc = t; }
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a(t, c) != 0 && abs(a(t, c)) < best) { best = abs(a(t, c)); br = t; bc = c; }
                a.swap_rows(t, br);
                u.swap_rows(t, br);
                a.swap_cols(t, bc);
                v.swap_cols(t, bc);
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            bool divisible = true;
            for (std::size_t r = t + 1; r < m && divisible; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        a.add_row_multiple(t, r, 1);
                        u.add_row_multiple(t, r, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult result{std::move(u), std::move(a), std::move(v), t};
    if (!(result.U * input * result.V == result.D))
        throw std::logic_error("smith_normal_form: U*A*V != D");
    return result;
}

std::vector<IntVec> integer_kernel_basis(const IntMatrix& a) {
    SnfResult snf = smith_normal_form(a);
    std::vector<IntVec> basis;
    for (std::size_t c = snf.rank; c < a.cols(); ++c) basis.push_back(snf.V.column(c));
    return basis;
}

std::optional<IntVec> solve_integer_affine(const SnfResult& snf, const IntVec& b) {
    if (b.size() != snf.U.cols()) throw Error(ErrorCode::InvalidArgument, "rhs length mismatch");
    IntVec c = snf.U * b;
    IntVec z(snf.V.rows());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            const Int& d = snf.D(i, i);
            if (c[i] % d != 0) return std::nullopt;
            z[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * z;
}

std::optional<IntVec> solve_integer_affine(const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "rhs length mismatch");
    auto m = solve_integer_affine(smith_normal_form(a), b);
    assert(!m || a * *m == b);
    return m;
}

IntVec primitive_integer_vector(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, x.get_den());
    IntVec out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd(g, out[i]);
    }
    if (g > 1)
        for (Int& x : out) x /= g;
    return out;
}

} // namespace sfh
