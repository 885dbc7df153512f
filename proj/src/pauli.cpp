#include "itc/pauli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace itc {

PauliOperator PauliOperator::X(std::size_t n, std::span<const std::size_t> qubits) {
    PauliOperator p(n);
    for (auto q : qubits) p.x.flip(q);
    return p;
}

PauliOperator PauliOperator::Z(std::size_t n, std::span<const std::size_t> qubits) {
    PauliOperator p(n);
    for (auto q : qubits) p.z.flip(q);
    return p;
}

std::size_t PauliOperator::weight() const {
    BitVector support = x;
    const auto& zw = z.words();
    for (std::size_t w = 0; w < support.num_words(); ++w) support.data()[w] |= zw[w];
    return support.popcount();
}

PauliOperator PauliOperator::from_symplectic(const BitVector& row) {
    if (row.size() % 2) throw std::invalid_argument("symplectic row must have even length");
    const std::size_t n = row.size() / 2;
    PauliOperator p;
    p.x = row.slice(0, n);
    p.z = row.slice(n, n);
    return p;
}

bool symplectic_product(const PauliOperator& p, const PauliOperator& q) {
    if (p.size() != q.size()) throw std::invalid_argument("symplectic_product: qubit count mismatch");
    return p.x.dot(q.z) ^ p.z.dot(q.x);
}

void GeneratorSet::add(PauliOperator op, std::string label) {
    if (op.size() != n) throw std::invalid_argument("GeneratorSet::add: qubit count mismatch");
    rows.push_back(std::move(op));
    labels.push_back(std::move(label));
}

void GeneratorSet::append(const GeneratorSet& other) {
    for (std::size_t i = 0; i < other.size(); ++i) add(other.rows[i], other.labels[i]);
}

GeneratorSet GeneratorSet::family(const std::string& label) const {
    GeneratorSet out(n);
    for (std::size_t i = 0; i < size(); ++i)
        if (labels[i] == label) out.add(rows[i], labels[i]);
    return out;
}

std::size_t GeneratorSet::count(const std::string& label) const {
    std::size_t c = 0;
    for (const auto& l : labels) c += (l == label);
    return c;
}

std::vector<BitVector> GeneratorSet::symplectic_rows() const {
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.symplectic());
    return out;
}

std::size_t rank(const GeneratorSet& set) { return gf2::rank(set.symplectic_rows()); }

SpanResult in_span(const PauliOperator& p, const GeneratorSet& set) {
    if (p.size() != set.n) throw std::invalid_argument("in_span: qubit count mismatch");
    gf2::RowSpace space(2 * set.n);
    for (const auto& r : set.rows) space.insert(r.symplectic());
    auto combo = space.solve(p.symplectic());
    if (!combo) return {false, BitVector(set.size())};
    combo->resize(set.size());
    return {true, std::move(*combo)};
}

PauliSpan::PauliSpan(const GeneratorSet& set) : n_(set.n), space_(2 * set.n) {
    for (const auto& r : set.rows) space_.insert(r.symplectic());
}

bool PauliSpan::contains(const PauliOperator& p) const {
    if (p.size() != n_) throw std::invalid_argument("PauliSpan: qubit count mismatch");
    return space_.contains(p.symplectic());
}

std::optional<BitVector> PauliSpan::solve(const PauliOperator& p) const {
    if (p.size() != n_) throw std::invalid_argument("PauliSpan: qubit count mismatch");
    return space_.solve(p.symplectic());
}

std::size_t centralizer_intersection_rank(const GeneratorSet& set) {
    gf2::RowSpace space(2 * set.n);
    for (const auto& r : set.rows) space.insert(r.symplectic());
    std::vector<PauliOperator> basis;
    for (const auto& row : space.basis_rows()) basis.push_back(PauliOperator::from_symplectic(row));

    // An element sum_i c_i b_i is central iff G c = 0 for the Gram matrix G.
    const std::size_t r = basis.size();
    std::vector<BitVector> gram(r, BitVector(r));
#pragma omp parallel for schedule(dynamic, 16) if (r > 256)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(r); ++i)
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j)
            if (symplectic_product(basis[static_cast<std::size_t>(i)], basis[j]))
                gram[static_cast<std::size_t>(i)].set(j);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[j].get(i)) gram[i].set(j);
    return r - gf2::rank(std::move(gram));
}

PauliOperator conjugate_by_cx(const PauliOperator& p, std::span<const CxPair> pairs) {
    PauliOperator out = p;
    const std::size_t n = p.size();
    for (const auto& [c, t] : pairs) {
        if (c >= n || t >= n) throw std::out_of_range("conjugate_by_cx: qubit index out of range");
        if (c == t) throw std::invalid_argument("conjugate_by_cx: control equals target");
        if (out.x.get(c)) out.x.flip(t);
        if (out.z.get(t)) out.z.flip(c);
    }
    return out;
}

std::string to_sparse_line(const PauliOperator& p, const std::string& label) {
    std::ostringstream s;
    s << label << ": X";
    for (auto q : p.x.ones()) s << ' ' << q;
    s << " | Z";
    for (auto q : p.z.ones()) s << ' ' << q;
    return s.str();
}

void write_sparse(std::ostream& out, const GeneratorSet& set) {
    for (std::size_t i = 0; i < set.size(); ++i) out << to_sparse_line(set.rows[i], set.labels[i]) << '\n';
}

}  // namespace itc
