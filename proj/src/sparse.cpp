#include "itc/sparse.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace itc {

void SparseMatrix::flip(std::size_t r, std::size_t c) {
    if (r >= rows_.size() || c >= cols_) throw std::out_of_range("SparseMatrix::flip: index out of range");
    auto& row = rows_[r];
    const auto value = static_cast<std::uint32_t>(c);
    auto it = std::lower_bound(row.begin(), row.end(), value);
    if (it != row.end() && *it == value)
        row.erase(it);
    else
        row.insert(it, value);
}

void SparseMatrix::add_row(std::vector<std::uint32_t> cols) {
    std::sort(cols.begin(), cols.end());
    // Reduce repeated entries mod 2.
    std::vector<std::uint32_t> reduced;
    for (std::size_t i = 0; i < cols.size();) {
        std::size_t j = i;
        while (j < cols.size() && cols[j] == cols[i]) ++j;
        if ((j - i) % 2) reduced.push_back(cols[i]);
        i = j;
    }
    if (!reduced.empty() && reduced.back() >= cols_) throw std::out_of_range("SparseMatrix::add_row: column out of range");
    rows_.push_back(std::move(reduced));
}

bool SparseMatrix::get(std::size_t r, std::size_t c) const {
    const auto& row = rows_[r];
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(c));
}

BitVector SparseMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        bool bit = false;
        for (auto c : rows_[r]) bit ^= v.get(c);
        if (bit) out.set(r);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> SparseMatrix::columns() const {
    std::vector<std::vector<std::uint32_t>> cols(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (auto c : rows_[r]) cols[c].push_back(static_cast<std::uint32_t>(r));
    return cols;
}

std::vector<BitVector> SparseMatrix::dense() const {
    std::vector<BitVector> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        BitVector v(cols_);
        for (auto c : row) v.set(c);
        out.push_back(std::move(v));
    }
    return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<BitVector>& rows, std::size_t cols) {
    SparseMatrix m(0, cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("SparseMatrix::from_dense: ragged rows");
        std::vector<std::uint32_t> ones;
        for (auto c : r.ones()) ones.push_back(static_cast<std::uint32_t>(c));
        m.rows_.push_back(std::move(ones));
    }
    return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("SparseMatrix::multiply: dimension mismatch");
    const auto right = other.dense();
    std::vector<BitVector> out(rows_.size(), BitVector(other.cols()));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (auto k : rows_[r]) out[r] ^= right[k];
    return from_dense(out, other.cols());
}

SparseMatrix SparseMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    if (r0 + nr > rows_.size() || c0 + nc > cols_) throw std::out_of_range("SparseMatrix::block: out of range");
    SparseMatrix m(0, nc);
    for (std::size_t r = r0; r < r0 + nr; ++r) {
        std::vector<std::uint32_t> row;
        for (auto c : rows_[r])
            if (c >= c0 && c < c0 + nc) row.push_back(static_cast<std::uint32_t>(c - c0));
        m.rows_.push_back(std::move(row));
    }
    return m;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

void SparseMatrix::write(std::ostream& out) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out << "ROW " << r << ':';
        for (std::size_t k = 0; k < rows_[r].size(); ++k) out << (k ? "," : " ") << rows_[r][k];
        out << '\n';
    }
}

}  // namespace itc
