#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "itc/bitvector.hpp"
#include "itc/gf2.hpp"

namespace itc {

/// Phase-free Pauli operator on n qubits.
struct PauliOperator {
    BitVector x, z;

    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x(n), z(n) {}

    static PauliOperator X(std::size_t n, std::span<const std::size_t> qubits);
    static PauliOperator Z(std::size_t n, std::span<const std::size_t> qubits);

    std::size_t size() const noexcept { return x.size(); }
    bool is_identity() const noexcept { return x.none() && z.none(); }
    std::size_t weight() const;

    /// Product up to phase.
    PauliOperator& operator*=(const PauliOperator& other) {
        x ^= other.x;
        z ^= other.z;
        return *this;
    }
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }
    friend bool operator==(const PauliOperator& a, const PauliOperator& b) { return a.x == b.x && a.z == b.z; }

    /// Symplectic row [x | z].
    BitVector symplectic() const { return x.concat(z); }
    static PauliOperator from_symplectic(const BitVector& row);
};

/// 0 if P and Q commute, 1 if they anticommute.
bool symplectic_product(const PauliOperator& p, const PauliOperator& q);

/// Ordered list of Pauli rows with a family label per row.
struct GeneratorSet {
    std::size_t n = 0;
    std::vector<PauliOperator> rows;
    std::vector<std::string> labels;

    GeneratorSet() = default;
    explicit GeneratorSet(std::size_t num_qubits) : n(num_qubits) {}

    std::size_t size() const noexcept { return rows.size(); }
    bool empty() const noexcept { return rows.empty(); }
    void add(PauliOperator op, std::string label);
    void append(const GeneratorSet& other);
    /// Rows whose label equals the given family tag.
    GeneratorSet family(const std::string& label) const;
    std::size_t count(const std::string& label) const;
    std::vector<BitVector> symplectic_rows() const;
};

std::size_t rank(const GeneratorSet& set);

struct SpanResult {
    bool member = false;
    BitVector certificate;  // over the rows of the set; valid when member
};

SpanResult in_span(const PauliOperator& p, const GeneratorSet& set);

/// Prebuilt span for repeated membership queries.
class PauliSpan {
public:
    explicit PauliSpan(const GeneratorSet& set);
    bool contains(const PauliOperator& p) const;
    std::optional<BitVector> solve(const PauliOperator& p) const;
    std::size_t rank() const noexcept { return space_.rank(); }

private:
    std::size_t n_;
    gf2::RowSpace space_;
};

/// Rank of span(set) intersected with the centralizer of set.
std::size_t centralizer_intersection_rank(const GeneratorSet& set);

using CxPair = std::pair<std::size_t, std::size_t>;  // (control, target)

/// Conjugates P by the product of CX gates, applied in list order.
PauliOperator conjugate_by_cx(const PauliOperator& p, std::span<const CxPair> pairs);

/// "LABEL: X q1 q3 | Z q2 q7", one row per line.
void write_sparse(std::ostream& out, const GeneratorSet& set);
std::string to_sparse_line(const PauliOperator& p, const std::string& label);

}  // namespace itc
