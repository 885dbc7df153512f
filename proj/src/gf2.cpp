#include "itc/gf2.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace itc::gf2 {

std::size_t rank(std::vector<BitVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t width = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != width) throw std::invalid_argument("gf2::rank: ragged rows");

    const auto nrows = static_cast<std::ptrdiff_t>(rows.size());
    std::ptrdiff_t pivot_row = 0;
    for (std::size_t col = 0; col < width && pivot_row < nrows; ++col) {
        std::ptrdiff_t found = -1;
        for (std::ptrdiff_t r = pivot_row; r < nrows; ++r)
            if (rows[static_cast<std::size_t>(r)].get(col)) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(rows[static_cast<std::size_t>(found)], rows[static_cast<std::size_t>(pivot_row)]);
        const BitVector& pivot = rows[static_cast<std::size_t>(pivot_row)];
        const std::size_t first_word = col >> 6;
        const std::size_t nwords = pivot.num_words();
        // Forward elimination only; rows above the pivot are never revisited.
#pragma omp parallel for schedule(static) if (nrows - pivot_row > 512)
        for (std::ptrdiff_t r = pivot_row + 1; r < nrows; ++r) {
            BitVector& row = rows[static_cast<std::size_t>(r)];
            if (!row.get(col)) continue;
            std::uint64_t* dst = row.data();
            const std::uint64_t* src = pivot.data();
            for (std::size_t w = first_word; w < nwords; ++w) dst[w] ^= src[w];
        }
        ++pivot_row;
    }
    return static_cast<std::size_t>(pivot_row);
}

void RowSpace::reduce(BitVector& v, BitVector* combo) const {
    for (const auto& e : basis_) {
        if (!v.get(e.pivot)) continue;
        v ^= e.row;
        if (combo) combo->xor_prefix(e.combo);
    }
}

bool RowSpace::insert(const BitVector& row) {
    if (row.size() != width_) throw std::invalid_argument("RowSpace::insert: width mismatch");
    const std::size_t index = inserted_++;
    BitVector v = row;
    BitVector combo(inserted_);
    combo.set(index);
    reduce(v, &combo);
    if (v.none()) {
        relations_.push_back(std::move(combo));
        return false;
    }
    const std::size_t pivot = v.first_one();
    basis_.push_back(Entry{std::move(v), std::move(combo), pivot});
    return true;
}

std::optional<BitVector> RowSpace::solve(const BitVector& target) const {
    if (target.size() != width_) throw std::invalid_argument("RowSpace::solve: width mismatch");
    BitVector v = target;
    BitVector combo(inserted_);
    reduce(v, &combo);
    if (v.any()) return std::nullopt;
    return combo;
}

bool RowSpace::contains(const BitVector& target) const {
    if (target.size() != width_) throw std::invalid_argument("RowSpace::contains: width mismatch");
    BitVector v = target;
    reduce(v, nullptr);
    return v.none();
}

std::vector<BitVector> RowSpace::basis_rows() const {
    std::vector<BitVector> out;
    out.reserve(basis_.size());
    for (const auto& e : basis_) out.push_back(e.row);
    return out;
}

}  // namespace itc::gf2
