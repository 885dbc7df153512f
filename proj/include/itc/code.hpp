#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "itc/cells.hpp"
#include "itc/pauli.hpp"

namespace itc {

enum class Presentation { Toric, KVC, Overcomplete };
std::string to_string(Presentation p);
Presentation presentation_from_string(const std::string& name);

enum class Phase { Para, TCE, TCF, TwoTC, RBH };
std::string to_string(Phase p);

struct LogicalPair {
    PauliOperator x, z;
};

/// Intertwined toric code on a cell complex. Qubits are numbered edges first
/// (qubit-hosting edges in edge-id order), then faces likewise.
///
/// Per-cell operator builders return nullopt where the operator does not
/// exist on the given geometry (e.g. X_e on an intertwined-boundary edge).
class SubsystemCode {
public:
    SubsystemCode(std::shared_ptr<const CellComplex> complex, Presentation presentation);

    const CellComplex& complex() const noexcept { return *complex_; }
    std::shared_ptr<const CellComplex> complex_ptr() const noexcept { return complex_; }
    Presentation presentation() const noexcept { return presentation_; }
    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t num_edge_qubits() const noexcept { return num_edge_qubits_; }

    std::optional<std::size_t> edge_qubit(std::size_t e) const;
    std::optional<std::size_t> face_qubit(std::size_t f) const;
    /// Cell behind a qubit: (is_face, cell id).
    std::pair<bool, std::size_t> qubit_cell(std::size_t q) const { return qubit_cells_[q]; }

    std::optional<PauliOperator> X_e(std::size_t e) const;
    std::optional<PauliOperator> Z_e(std::size_t e) const;
    std::optional<PauliOperator> X_f(std::size_t f) const;
    std::optional<PauliOperator> Z_f(std::size_t f) const;
    std::optional<PauliOperator> B_e(std::size_t e) const;
    std::optional<PauliOperator> B_f(std::size_t f) const;
    std::optional<PauliOperator> K_e(std::size_t e) const;
    std::optional<PauliOperator> K_f(std::size_t f) const;
    std::optional<PauliOperator> A_v(std::size_t v) const;
    std::optional<PauliOperator> A_c(std::size_t c) const;
    /// A_v X_{e(v)} on the intertwined boundary.
    std::optional<PauliOperator> A2d(std::size_t v) const;
    /// A_v K_{e(v)} on the trivial boundary.
    std::optional<PauliOperator> A2d_eff(std::size_t v) const;

    /// The edge leaving a trivial/intertwined boundary vertex into the bulk.
    std::optional<std::size_t> bulk_edge(std::size_t v) const;
    /// The unique qubit face containing an intertwined-boundary edge.
    std::optional<std::size_t> inner_face(std::size_t e) const;

    bool edge_in_plane(std::size_t e, std::uint8_t role) const;
    bool face_in_plane(std::size_t f, std::uint8_t role) const;

    const GeneratorSet& checks() const noexcept { return checks_; }
    const GeneratorSet& stabilizers() const noexcept { return stabilizers_; }
    /// A_v^2d and A_v^2d,eff rows (labels "Av2d", "Av2deff").
    const GeneratorSet& redundancy() const noexcept { return redundancy_; }
    const std::vector<LogicalPair>& bare_logicals() const noexcept { return bare_; }
    const std::vector<LogicalPair>& dressed_logicals() const noexcept { return dressed_; }

    /// Fills bare and dressed logical pairs (slab and cube only) and checks
    /// their commutation table; throws std::logic_error on violation.
    void build_logicals();

    /// Checks and stabilizers as one set.
    GeneratorSet checks_and_stabilizers() const;

    // Generator-set builders for the individual families.
    GeneratorSet family_Xe() const;
    GeneratorSet family_Zf() const;
    GeneratorSet family_Be() const;
    GeneratorSet family_Bf() const;
    /// All K_e; two-body ones on the intertwined boundary included.
    GeneratorSet family_Ke() const;
    /// Only the two-body K_e of the intertwined boundary.
    GeneratorSet family_Ke_boundary() const;
    GeneratorSet family_Kf() const;
    GeneratorSet family_Av() const;
    GeneratorSet family_Ac() const;
    GeneratorSet nonlocal_stabilizers() const;

    /// U_CX pairs (edge qubit control, face qubit target) for every e in the
    /// boundary of f.
    std::vector<CxPair> ucx_pairs() const;

private:
    PauliOperator x_on_qubit(std::size_t q) const;
    PauliOperator z_on_qubit(std::size_t q) const;

    std::shared_ptr<const CellComplex> complex_;
    Presentation presentation_;
    std::size_t num_qubits_ = 0, num_edge_qubits_ = 0;
    std::vector<std::size_t> edge_qubit_, face_qubit_;
    std::vector<std::pair<bool, std::size_t>> qubit_cells_;
    GeneratorSet checks_, stabilizers_, redundancy_;
    std::vector<LogicalPair> bare_, dressed_;
};

SubsystemCode build_itc(const Geometry& geometry, Presentation presentation);

/// K = N - (rank(checks and stabilizers) + rank of its center) / 2.
std::size_t count_logical_qubits(const SubsystemCode& code);

/// Conjugates every check generator by U_CX.
GeneratorSet apply_ucx(const SubsystemCode& code, const GeneratorSet& set);
GeneratorSet apply_ucx(const SubsystemCode& code);

/// Commuting term set of a fixed-point Hamiltonian. Throws std::logic_error
/// if a term fails to commute, leaves span(checks, stabilizers), or
/// anticommutes with a bare logical.
GeneratorSet gauge_fix(const SubsystemCode& code, Phase phase);

/// Nonlocal boundary logical used in the RBH identity: X on the trivial
/// boundary line and on the adjacent faces, such that X̄_1 equals the
/// product of the K_e along the dual membrane times this operator.
PauliOperator rbh_boundary_logical(const SubsystemCode& code);
/// The K_e terms of the X̄_1 dual membrane away from the trivial boundary.
GeneratorSet rbh_membrane_terms(const SubsystemCode& code);

/// JSON object text with geometry, L, presentation, family sizes, ranks, K.
std::string summary_json(const SubsystemCode& code);

}  // namespace itc
