#include "sfh/exactalg.hpp"
#include "sfh/error.hpp"

#include <bit>

namespace sfh {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + kWordBits - 1) / kWordBits), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row() + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& w = bits_[r * words_per_row() + c / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    bits_[r * words_per_row() + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "bit matrix shape mismatch");
    BitMatrix out(rows_, rhs.cols_);
    const std::size_t w = rhs.words_per_row();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(i, k)) continue;
            for (std::size_t j = 0; j < w; ++j) out.bits_[i * w + j] ^= rhs.bits_[k * w + j];
        }
    return out;
}

BitVec BitMatrix::operator*(const BitVec& v) const {
    if (cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "bit matrix/vector shape mismatch");
    BitVec out(rows_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
        bool acc = false;
        for (std::size_t k = 0; k < cols_; ++k) acc ^= get(i, k) && v[k];
        out[i] = acc;
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w != 0) return false;
    return true;
}

struct Gf2Eliminator {
    // Reduced row echelon form in place; returns pivot columns.
    static std::vector<std::size_t> rref(BitMatrix& m) {
        std::vector<std::size_t> pivots;
        const std::size_t w = m.words_per_row();
        std::size_t row = 0;
        for (std::size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
            std::size_t p = row;
            while (p < m.rows_ && !m.get(p, col)) ++p;
            if (p == m.rows_) continue;
            if (p != row)
                for (std::size_t j = 0; j < w; ++j) std::swap(m.bits_[p * w + j], m.bits_[row * w + j]);
            for (std::size_t r = 0; r < m.rows_; ++r) {
                if (r == row || !m.get(r, col)) continue;
                for (std::size_t j = 0; j < w; ++j) m.bits_[r * w + j] ^= m.bits_[row * w + j];
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }
};

Gf2RankKernel gf2_rank_kernel(const BitMatrix& a) {
    BitMatrix m = a;
    const std::vector<std::size_t> pivots = Gf2Eliminator::rref(m);
    Gf2RankKernel out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVec v(a.cols(), false);
        v[free] = true;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.get(i, free)) v[pivots[i]] = true;
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace sfh
