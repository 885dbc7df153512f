#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "itc/bitvector.hpp"

namespace itc {

/// GF(2) matrix stored as sorted column lists per row.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Toggles entry (r, c).
    void flip(std::size_t r, std::size_t c);
    void add_row(std::vector<std::uint32_t> cols);
    const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }
    bool get(std::size_t r, std::size_t c) const;

    BitVector apply(const BitVector& v) const;
    /// Column-wise view: for each column, the rows holding a one.
    std::vector<std::vector<std::uint32_t>> columns() const;

    std::vector<BitVector> dense() const;
    static SparseMatrix from_dense(const std::vector<BitVector>& rows, std::size_t cols);
    /// Product mod 2 (this * other).
    SparseMatrix multiply(const SparseMatrix& other) const;
    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    SparseMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
    bool is_zero() const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

    /// "ROW i: j,k,..." lines.
    void write(std::ostream& out) const;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace itc
