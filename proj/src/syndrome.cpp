#include "itc/syndrome.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "itc/gf2.hpp"

namespace itc {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<std::uint32_t> to_u32(const std::vector<std::size_t>& v) {
    return {v.begin(), v.end()};
}

void write_ids(std::ostream& out, const BitVector& v) {
    const auto ones = v.ones();
    out << ':';
    for (std::size_t k = 0; k < ones.size(); ++k) out << (k ? "," : " ") << ones[k];
    out << '\n';
}

}  // namespace

std::string to_string(Sector s) { return s == Sector::Z ? "Z" : "X"; }

Sector sector_from_string(const std::string& name) {
    if (name == "Z" || name == "z") return Sector::Z;
    if (name == "X" || name == "x") return Sector::X;
    throw std::invalid_argument("unknown sector '" + name + "'");
}

SyndromeMaps build_maps(const SubsystemCode& code, Sector sector) {
    if (code.presentation() == Presentation::Toric)
        throw std::invalid_argument("build_maps: the toric presentation has no relation redundancy");
    const auto& cx = code.complex();
    const std::size_t n = code.num_qubits();

    SyndromeMaps m;
    m.sector = sector;
    m.geometry = cx.geometry();
    m.num_qubits = n;

    // Which half of a Pauli a measurement sees, and which half a gauge
    // generator or stabilizer acts with.
    const bool zs = sector == Sector::Z;
    auto seen = [&](const PauliOperator& p) -> const BitVector& { return zs ? p.x : p.z; };
    auto acts = [&](const PauliOperator& p) -> const BitVector& { return zs ? p.z : p.x; };

    std::vector<std::size_t> first_coord, second_coord, red_coord;  // per cell
    std::vector<PauliOperator> stabs;
    std::vector<std::vector<std::size_t>> rep1, rep2;

    if (zs) {
        for (std::size_t f = 0; f < cx.faces().size(); ++f)
            if (auto op = code.Z_f(f)) m.gauge.push_back({"Zf", f, false, std::move(*op)});
        for (std::size_t f = 0; f < cx.faces().size(); ++f)
            if (auto op = code.K_f(f)) m.gauge.push_back({"Kf", f, false, std::move(*op)});

        first_coord.assign(cx.edges().size(), npos);
        second_coord.assign(cx.edges().size(), npos);
        red_coord.assign(cx.vertices().size(), npos);
        for (std::size_t e = 0; e < cx.edges().size(); ++e)
            if (auto op = code.X_e(e)) {
                first_coord[e] = m.measurements.size();
                m.measurements.push_back({"Xe", e, false, std::move(*op)});
            }
        for (std::size_t e = 0; e < cx.edges().size(); ++e)
            if (auto op = code.K_e(e)) {
                second_coord[e] = m.measurements.size();
                m.measurements.push_back({"Ke", e, false, std::move(*op)});
            }
        for (std::size_t v = 0; v < cx.vertices().size(); ++v) {
            if (auto op = code.A2d_eff(v)) {
                red_coord[v] = m.measurements.size();
                m.measurements.push_back({"Av2deff", v, true, std::move(*op)});
            } else if (auto op2 = code.A2d(v)) {
                red_coord[v] = m.measurements.size();
                m.measurements.push_back({"Av2d", v, true, std::move(*op2)});
            }
        }

        auto need = [](std::size_t c) {
            if (c == npos) throw std::logic_error("build_maps: stabilizer representation uses a missing measurement");
            return c;
        };
        for (std::size_t v = 0; v < cx.vertices().size(); ++v) {
            auto a = code.A_v(v);
            if (!a) continue;
            const std::uint8_t roles = cx.vertices()[v].roles;
            std::vector<std::size_t> green, yellow;
            if (roles & kIntertwined) {
                green = {need(red_coord[v]), need(first_coord[*code.bulk_edge(v)])};
            } else {
                for (auto e : cx.vertex_coboundary(v))
                    if (code.edge_qubit(e)) green.push_back(need(first_coord[e]));
            }
            if (roles & kTrivial) {
                yellow = {need(red_coord[v]), need(second_coord[*code.bulk_edge(v)])};
            } else {
                for (auto e : cx.vertex_coboundary(v))
                    if (code.edge_qubit(e)) yellow.push_back(need(second_coord[e]));
            }
            m.stabilizer_cells.push_back(v);
            stabs.push_back(std::move(*a));
            rep1.push_back(std::move(green));
            rep2.push_back(std::move(yellow));
        }
    } else {
        for (std::size_t e = 0; e < cx.edges().size(); ++e)
            if (auto op = code.X_e(e)) m.gauge.push_back({"Xe", e, false, std::move(*op)});
        for (std::size_t e = 0; e < cx.edges().size(); ++e)
            if (auto op = code.K_e(e)) m.gauge.push_back({"Ke", e, false, std::move(*op)});

        first_coord.assign(cx.faces().size(), npos);
        second_coord.assign(cx.faces().size(), npos);
        for (std::size_t f = 0; f < cx.faces().size(); ++f)
            if (auto op = code.Z_f(f)) {
                first_coord[f] = m.measurements.size();
                m.measurements.push_back({"Zf", f, false, std::move(*op)});
            }
        for (std::size_t f = 0; f < cx.faces().size(); ++f)
            if (auto op = code.K_f(f)) {
                second_coord[f] = m.measurements.size();
                m.measurements.push_back({"Kf", f, false, std::move(*op)});
            }

        for (std::size_t c = 0; c < cx.cubes().size(); ++c) {
            auto a = code.A_c(c);
            if (!a) continue;
            std::vector<std::size_t> green, yellow;
            for (auto f : cx.cube_boundary(c)) {
                if (first_coord[f] != npos) green.push_back(first_coord[f]);
                if (second_coord[f] == npos) continue;
                if (code.face_in_plane(f, kIntertwined))
                    green.push_back(second_coord[f]);
                else
                    yellow.push_back(second_coord[f]);
            }
            m.stabilizer_cells.push_back(c);
            stabs.push_back(std::move(*a));
            rep1.push_back(std::move(green));
            rep2.push_back(std::move(yellow));
        }
    }

    // Both representations must multiply out to the stabilizer.
    for (std::size_t s = 0; s < stabs.size(); ++s)
        for (const auto* rep : {&rep1[s], &rep2[s]}) {
            PauliOperator prod(n);
            for (auto c : *rep) prod *= m.measurements[c].op;
            if (!(prod == stabs[s]))
                throw std::logic_error("build_maps: stabilizer representation mismatch at cell " +
                                       std::to_string(m.stabilizer_cells[s]));
        }

    const std::size_t dim_m = m.measurements.size();
    m.boundary_Q = SparseMatrix(0, m.gauge.size());
    {
        std::vector<std::vector<std::uint32_t>> rows(n);
        for (std::size_t g = 0; g < m.gauge.size(); ++g)
            for (auto q : acts(m.gauge[g].op).ones()) rows[q].push_back(static_cast<std::uint32_t>(g));
        for (auto& r : rows) m.boundary_Q.add_row(std::move(r));
    }
    m.delta_M = SparseMatrix(0, n);
    for (const auto& c : m.measurements) m.delta_M.add_row(to_u32(seen(c.op).ones()));
    m.boundary_S = SparseMatrix(0, n);
    for (const auto& s : stabs) m.boundary_S.add_row(to_u32(seen(s).ones()));
    m.delta_S = SparseMatrix(0, dim_m);
    m.delta_R = SparseMatrix(0, dim_m);
    for (std::size_t s = 0; s < stabs.size(); ++s) {
        m.delta_S.add_row(to_u32(rep1[s]));
        auto both = to_u32(rep1[s]);
        for (auto c : rep2[s]) both.push_back(static_cast<std::uint32_t>(c));
        m.delta_R.add_row(std::move(both));
        m.alt_rep.push_back(to_u32(rep2[s]));
        m.relation_cells.push_back(static_cast<long>(m.stabilizer_cells[s]));
        m.relation_labels.push_back(zs ? "vertex" : "cube");
    }

    // Redundancy measurements that close no per-cell relation on their own
    // are tied together per boundary plane when their product is trivial.
    {
        const auto cols = m.delta_R.columns();
        std::map<std::string, std::vector<std::size_t>> groups;
        for (std::size_t c = 0; c < dim_m; ++c) {
            if (cols[c].size() != 1) continue;
            const auto& coord = m.measurements[c];
            std::uint8_t roles;
            if (zs) {
                if (!coord.redundancy) continue;
                roles = cx.vertices()[coord.cell].roles;
            } else {
                if (coord.label != "Kf" || code.face_qubit(coord.cell)) continue;
                roles = cx.faces()[coord.cell].roles;
            }
            if (roles & kTrivial) groups["trivial"].push_back(c);
            if (roles & kIntertwined) groups["intertwined"].push_back(c);
        }
        for (const auto& [plane, members] : groups) {
            PauliOperator prod(n);
            for (auto c : members) prod *= m.measurements[c].op;
            if (!prod.is_identity()) continue;
            m.delta_R.add_row(to_u32(members));
            m.relation_cells.push_back(-1);
            m.relation_labels.push_back("global-" + plane);
            ++m.global_relations;
        }
    }

    {
        const auto cols = m.delta_R.columns();
        m.round1_terminals = std::any_of(cols.begin(), cols.end(), [](const auto& c) { return c.size() == 1; });
        const auto qcols = m.boundary_S.columns();
        m.round2_terminals = std::any_of(qcols.begin(), qcols.end(), [](const auto& c) { return c.size() == 1; });
        gf2::RowSpace space(dim_m);
        for (const auto& row : m.delta_R.dense()) space.insert(row);
        BitVector total(dim_m);
        for (const auto& row : m.delta_S.dense()) total ^= row;
        m.parity_closed = space.contains(total);
    }
    return m;
}

IdentityReport check_identities(const SyndromeMaps& maps) {
    IdentityReport r;
    r.stabilizer_factorizes = maps.delta_S.multiply(maps.delta_M) == maps.boundary_S;
    r.checks_silent = maps.boundary_S.multiply(maps.boundary_Q).is_zero();
    r.relations_silent = maps.delta_R.multiply(maps.delta_M).is_zero();
    return r;
}

MeasurementOutcome outcome(const SyndromeMaps& maps, const BitVector& eps, const BitVector& mu,
                           const BitVector& gamma) {
    if (eps.size() != maps.dim_Q() || mu.size() != maps.dim_M() || gamma.size() != maps.dim_G())
        throw std::invalid_argument("outcome: dimension mismatch");
    BitVector zeta = maps.delta_M.apply(eps);
    zeta ^= mu;
    zeta ^= maps.delta_M.apply(maps.boundary_Q.apply(gamma));
    return {maps.sector, std::move(zeta)};
}

std::pair<BitVector, BitVector> syndromes(const SyndromeMaps& maps, const BitVector& zeta) {
    if (zeta.size() != maps.dim_M()) throw std::invalid_argument("syndromes: dimension mismatch");
    return {maps.delta_S.apply(zeta), maps.delta_R.apply(zeta)};
}

RuleReport validate_outcome_rules(const SyndromeMaps& maps, const BitVector& zeta) {
    auto [sigma, omega] = syndromes(maps, zeta);
    RuleReport r;
    r.stabilizer_violations = sigma.ones();
    r.relation_violations = omega.ones();
    for (std::size_t s = 0; s < maps.dim_S(); ++s) {
        int g = 0, y = 0;
        for (auto c : maps.delta_S.row(s)) g += zeta.get(c);
        for (auto c : maps.alt_rep[s]) y += zeta.get(c);
        r.green_degree.push_back(g);
        r.yellow_degree.push_back(y);
    }
    return r;
}

SixFamily empty_six_family(const CellComplex& complex) {
    const std::size_t ne = complex.edges().size(), nf = complex.faces().size();
    return {BitVector(ne), BitVector(ne), BitVector(ne), BitVector(nf), BitVector(nf), BitVector(nf)};
}

OvercompleteOutcome overcomplete_outcome(const SubsystemCode& code, const PauliOperator& eps, const SixFamily& mu) {
    if (code.presentation() != Presentation::Overcomplete)
        throw std::invalid_argument("overcomplete_outcome: code must use the overcomplete presentation");
    const auto& cx = code.complex();
    OvercompleteOutcome out{empty_six_family(cx), {}, {}};
    auto measure = [&](const std::optional<PauliOperator>& op, const BitVector& flips, BitVector& dst, std::size_t i) {
        if (op && (symplectic_product(eps, *op) ^ flips.get(i))) dst.set(i);
    };
    for (std::size_t e = 0; e < cx.edges().size(); ++e) {
        const auto x = code.X_e(e), b = code.B_e(e), k = code.K_e(e);
        measure(x, mu.Xe, out.values.Xe, e);
        measure(b, mu.Be, out.values.Be, e);
        measure(k, mu.Ke, out.values.Ke, e);
        if (x && b && k && (out.values.Xe.get(e) ^ out.values.Be.get(e) ^ out.values.Ke.get(e)))
            out.edge_relation_violations.push_back(e);
    }
    for (std::size_t f = 0; f < cx.faces().size(); ++f) {
        const auto z = code.Z_f(f), b = code.B_f(f), k = code.K_f(f);
        measure(z, mu.Zf, out.values.Zf, f);
        measure(b, mu.Bf, out.values.Bf, f);
        measure(k, mu.Kf, out.values.Kf, f);
        if (z && b && k && (out.values.Zf.get(f) ^ out.values.Bf.get(f) ^ out.values.Kf.get(f)))
            out.face_relation_violations.push_back(f);
    }
    return out;
}

void write_outcome(std::ostream& out, const SyndromeMaps& maps, const BitVector& zeta) {
    out << "ZETA " << to_string(maps.sector) << ' ' << maps.geometry.L << ' ' << to_string(maps.geometry.kind);
    write_ids(out, zeta);
}

void write_syndromes(std::ostream& out, const SyndromeMaps& maps, const BitVector& sigma, const BitVector& omega) {
    out << "SIGMA " << to_string(maps.sector) << ' ' << maps.geometry.L << ' ' << to_string(maps.geometry.kind);
    write_ids(out, sigma);
    out << "OMEGA " << to_string(maps.sector) << ' ' << maps.geometry.L << ' ' << to_string(maps.geometry.kind);
    write_ids(out, omega);
}

}  // namespace itc
