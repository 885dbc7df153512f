#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "itc/code.hpp"
#include "itc/sparse.hpp"

namespace itc {

/// Z: Z-type qubit errors seen by X-type measurements (violations on
/// vertices). X: the dual sector (violations on cubes).
enum class Sector { Z, X };
std::string to_string(Sector s);
Sector sector_from_string(const std::string& name);

/// One coordinate of C_G or C_M: the operator measured (or generated) there.
struct Coordinate {
    std::string label;  // Zf, Kf, Xe, Ke, Av2d, Av2deff
    std::size_t cell = 0;
    bool redundancy = false;  // boundary-redundancy measurement (Av2d / Av2deff)
    PauliOperator op;
};

/// The spaces and maps of the commutative diagram
///   C_G --dQ--> C_Q --dM--> C_M --dS--> C_S,  C_M --dR--> C_R,  dS_Q = dS dM.
struct SyndromeMaps {
    Sector sector = Sector::Z;
    Geometry geometry;
    std::size_t num_qubits = 0;

    std::vector<Coordinate> gauge;         // C_G
    std::vector<Coordinate> measurements;  // C_M
    std::vector<std::size_t> stabilizer_cells;  // C_S: vertex ids (Z) or cube ids (X)
    /// C_R: per-cell relations first (same cells as C_S), then one global
    /// relation per boundary plane whose redundancy measurements multiply to
    /// the identity.
    std::vector<long> relation_cells;  // -1 for global rows
    std::vector<std::string> relation_labels;

    SparseMatrix boundary_Q;  // C_G -> C_Q   (rows: qubits)
    SparseMatrix delta_M;     // C_Q -> C_M
    SparseMatrix delta_S;     // C_M -> C_S
    SparseMatrix delta_R;     // C_M -> C_R
    SparseMatrix boundary_S;  // C_Q -> C_S

    /// Second representation of each stabilizer (the K-type product); the
    /// first one is the delta_S row.
    std::vector<std::vector<std::uint32_t>> alt_rep;

    /// 1^T delta_S lies in the row space of delta_R, so a relation-valid
    /// outcome always has even stabilizer-syndrome parity.
    bool parity_closed = false;
    /// Some measurement column touches a single relation (free terminal).
    bool round1_terminals = false;
    /// Some qubit column touches a single stabilizer.
    bool round2_terminals = false;
    std::size_t global_relations = 0;

    std::size_t dim_G() const noexcept { return gauge.size(); }
    std::size_t dim_Q() const noexcept { return num_qubits; }
    std::size_t dim_M() const noexcept { return measurements.size(); }
    std::size_t dim_S() const noexcept { return stabilizer_cells.size(); }
    std::size_t dim_R() const noexcept { return relation_cells.size(); }
};

/// Throws std::invalid_argument for the toric presentation and
/// std::logic_error if a stabilizer representation does not multiply out.
SyndromeMaps build_maps(const SubsystemCode& code, Sector sector);

struct IdentityReport {
    bool stabilizer_factorizes = false;  // dS_Q == dS * dM
    bool checks_silent = false;          // dS_Q * dQ == 0
    bool relations_silent = false;       // dR * dM == 0
    bool ok() const { return stabilizer_factorizes && checks_silent && relations_silent; }
};
IdentityReport check_identities(const SyndromeMaps& maps);

struct MeasurementOutcome {
    Sector sector = Sector::Z;
    BitVector zeta;
};

/// zeta = dM eps + mu + dM dQ gamma.
MeasurementOutcome outcome(const SyndromeMaps& maps, const BitVector& eps, const BitVector& mu,
                           const BitVector& gamma);

/// (sigma, omega) = (dS zeta, dR zeta).
std::pair<BitVector, BitVector> syndromes(const SyndromeMaps& maps, const BitVector& zeta);

struct RuleReport {
    std::vector<std::size_t> stabilizer_violations;  // C_S rows with sigma = 1
    std::vector<std::size_t> relation_violations;    // C_R rows with omega = 1
    /// Per C_S row: flipped measurements in the first ("green") and second
    /// ("yellow") representation.
    std::vector<int> green_degree, yellow_degree;
    bool ok() const { return relation_violations.empty(); }
};
RuleReport validate_outcome_rules(const SyndromeMaps& maps, const BitVector& zeta);

/// Six-family measurement of the overcomplete presentation. Vectors are
/// indexed by cell id (edges for Xe/Be/Ke, faces for Zf/Bf/Kf); cells
/// without the operator read 0.
struct SixFamily {
    BitVector Xe, Be, Ke, Zf, Bf, Kf;
};
struct OvercompleteOutcome {
    SixFamily values;
    std::vector<std::size_t> edge_relation_violations;  // Ke ^ Xe ^ Be != 0
    std::vector<std::size_t> face_relation_violations;  // Kf ^ Zf ^ Bf != 0
};
SixFamily empty_six_family(const CellComplex& complex);
OvercompleteOutcome overcomplete_outcome(const SubsystemCode& code, const PauliOperator& eps, const SixFamily& mu);

/// "ZETA sector L geometry: ids"
void write_outcome(std::ostream& out, const SyndromeMaps& maps, const BitVector& zeta);
/// "SIGMA ..." and "OMEGA ..." lines.
void write_syndromes(std::ostream& out, const SyndromeMaps& maps, const BitVector& sigma, const BitVector& omega);

}  // namespace itc
