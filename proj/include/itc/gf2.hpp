#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "itc/bitvector.hpp"

namespace itc::gf2 {

/// Row rank over GF(2). Rows must share a width.
std::size_t rank(std::vector<BitVector> rows);

/// Incremental row-echelon basis that remembers, for every basis row, which
/// of the inserted rows combine to it. Used for span membership with
/// certificates and for left-kernel (relation) computations.
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    /// Inserts the next row (index = number of rows inserted so far).
    /// Returns true if it increased the rank; otherwise the combination of
    /// earlier rows that reproduces it is appended to relations().
    bool insert(const BitVector& row);

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    std::size_t rows_inserted() const noexcept { return inserted_; }

    /// Combination of inserted rows equal to v, if v lies in the span.
    std::optional<BitVector> solve(const BitVector& v) const;
    bool contains(const BitVector& v) const;

    /// Each entry is a nonzero combination of inserted rows summing to zero.
    /// Together they form a basis of the left kernel.
    const std::vector<BitVector>& relations() const noexcept { return relations_; }

    /// Independent rows (reduced), in insertion order of their pivots.
    std::vector<BitVector> basis_rows() const;

private:
    struct Entry {
        BitVector row;
        BitVector combo;  // over inserted rows; grows as rows are added
        std::size_t pivot;
    };
    void reduce(BitVector& v, BitVector* combo) const;

    std::size_t width_;
    std::size_t inserted_ = 0;
    std::vector<Entry> basis_;
    std::vector<BitVector> relations_;
};

}  // namespace itc::gf2
