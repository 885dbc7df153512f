#include <random>
#include <sstream>

#include "doctest.h"
#include "itc/syndrome.hpp"
#include "support/reference.hpp"

using namespace itc;

namespace {

SubsystemCode make(GeometryKind kind, int L, Presentation pres = Presentation::KVC) {
    return build_itc(Geometry{kind, L}, pres);
}

std::size_t coord_of(const SyndromeMaps& m, const std::string& label, std::size_t cell) {
    for (std::size_t i = 0; i < m.measurements.size(); ++i)
        if (m.measurements[i].label == label && m.measurements[i].cell == cell) return i;
    FAIL("missing measurement " << label << " " << cell);
    return 0;
}

BitVector column(const SparseMatrix& m, std::size_t c) {
    BitVector v(m.cols());
    v.set(c);
    return m.apply(v);
}

std::vector<std::string> labels_of(const SyndromeMaps& m, const BitVector& zeta) {
    std::vector<std::string> out;
    for (auto i : zeta.ones()) out.push_back(m.measurements[i].label);
    return out;
}

}  // namespace

TEST_CASE("map identities hold on every geometry") {
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (auto pres : {Presentation::KVC, Presentation::Overcomplete})
            for (int L : {2, 3}) {
                const auto code = make(kind, L, pres);
                for (auto s : {Sector::Z, Sector::X}) {
                    const auto m = build_maps(code, s);
                    const auto id = check_identities(m);
                    CHECK(id.stabilizer_factorizes);
                    CHECK(id.checks_silent);
                    CHECK(id.relations_silent);
                }
            }
    CHECK_THROWS_AS(build_maps(make(GeometryKind::Torus3, 2, Presentation::Toric), Sector::Z), std::invalid_argument);
}

TEST_CASE("delta_M columns on the torus") {
    const auto code = make(GeometryKind::Torus3, 2);
    const auto m = build_maps(code, Sector::Z);
    const auto& cx = code.complex();
    for (std::size_t f = 0; f < cx.faces().size(); ++f) {
        const auto col = column(m.delta_M, *code.face_qubit(f));
        CHECK(col.popcount() == 4);
        for (const auto& l : labels_of(m, col)) CHECK(l == "Ke");
    }
    for (std::size_t e = 0; e < cx.edges().size(); ++e) {
        const auto col = column(m.delta_M, *code.edge_qubit(e));
        CHECK(col.ones() == std::vector<std::size_t>{coord_of(m, "Xe", e), coord_of(m, "Ke", e)});
    }
}

TEST_CASE("outcome and syndromes") {
    const auto code = make(GeometryKind::Torus3, 4);
    const auto m = build_maps(code, Sector::Z);
    const auto& cx = code.complex();

    BitVector eps(m.dim_Q()), mu(m.dim_M()), gamma(m.dim_G());
    CHECK(outcome(m, eps, mu, gamma).zeta.none());
    CHECK_THROWS_AS(outcome(m, BitVector(3), mu, gamma), std::invalid_argument);

    std::size_t kf = 0;
    while (m.gauge[kf].label != "Kf") ++kf;
    gamma.set(kf);
    const auto zg = outcome(m, eps, mu, gamma).zeta;
    CHECK(zg.popcount() == 4);
    for (auto i : zg.ones()) {
        CHECK(m.measurements[i].label == "Xe");
        const auto& b = cx.face_boundary(m.gauge[kf].cell);
        CHECK(std::count(b.begin(), b.end(), m.measurements[i].cell) == 1);
    }
    gamma.clear();

    const auto e0 = *cx.edge_at({0, 0, 0}, 0);
    BitVector one(m.dim_Q());
    one.set(*code.edge_qubit(e0));
    const auto z1 = outcome(m, one, mu, gamma).zeta;
    CHECK(z1.ones() == std::vector<std::size_t>{coord_of(m, "Xe", e0), coord_of(m, "Ke", e0)});

    // Z string of length 3 from (0,0,0) to (3,0,0) along x.
    for (int x = 0; x < 3; ++x) eps.set(*code.edge_qubit(*cx.edge_at({x, 0, 0}, 0)));
    auto zeta = outcome(m, eps, mu, gamma).zeta;
    auto [sigma, omega] = syndromes(m, zeta);
    std::vector<std::size_t> ends;
    for (auto s : sigma.ones()) ends.push_back(m.stabilizer_cells[s]);
    std::sort(ends.begin(), ends.end());
    std::vector<std::size_t> expect{*cx.vertex_at({0, 0, 0}), *cx.vertex_at({3, 0, 0})};
    std::sort(expect.begin(), expect.end());
    CHECK(ends == expect);
    CHECK(omega.none());

    const auto inner = *cx.edge_at({1, 2, 2}, 1);
    zeta.flip(coord_of(m, "Xe", inner));
    std::tie(sigma, omega) = syndromes(m, zeta);
    std::vector<std::size_t> bad;
    for (std::size_t r = 0; r < m.dim_R(); ++r) {
        int parity = 0;
        for (auto c : m.delta_R.row(r)) parity ^= zeta.get(c);
        if (parity) bad.push_back(static_cast<std::size_t>(m.relation_cells[r]));
    }
    CHECK(bad.size() == 2);
    for (auto i : omega.ones()) {
        const auto v = static_cast<std::size_t>(m.relation_cells[i]);
        CHECK(std::count(bad.begin(), bad.end(), v) == 1);
        const auto& b = cx.edge_boundary(inner);
        CHECK(std::count(b.begin(), b.end(), v) == 1);
    }
    CHECK(omega.popcount() == 2);
}

TEST_CASE("gauge-only outcomes are silent") {
    std::mt19937_64 rng(41);
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (auto s : {Sector::Z, Sector::X}) {
            const auto code = make(kind, 3);
            const auto m = build_maps(code, s);
            for (int it = 0; it < 20; ++it) {
                BitVector gamma(m.dim_G());
                for (std::size_t i = 0; i < gamma.size(); ++i)
                    if (rng() & 1) gamma.set(i);
                const auto zeta = outcome(m, BitVector(m.dim_Q()), BitVector(m.dim_M()), gamma).zeta;
                const auto [sigma, omega] = syndromes(m, zeta);
                CHECK(sigma.none());
                CHECK(omega.none());
            }
        }
}

TEST_CASE("outcome rules") {
    const auto code = make(GeometryKind::SlabT2xI, 4);
    const auto m = build_maps(code, Sector::Z);
    const auto& cx = code.complex();
    CHECK(validate_outcome_rules(m, BitVector(m.dim_M())).ok());
    CHECK(validate_outcome_rules(m, BitVector(m.dim_M())).stabilizer_violations.empty());

    BitVector eps(m.dim_Q());
    for (int x = 0; x < 2; ++x) eps.set(*code.edge_qubit(*cx.edge_at({x, 1, 2}, 0)));
    const auto zeta = m.delta_M.apply(eps);
    const auto r = validate_outcome_rules(m, zeta);
    CHECK(r.ok());
    REQUIRE(r.stabilizer_violations.size() == 2);
    for (auto s : r.stabilizer_violations) {
        CHECK(r.green_degree[s] == 1);
        CHECK(r.yellow_degree[s] == 1);
    }

    BitVector flip(m.dim_M());
    flip.set(coord_of(m, "Ke", *cx.edge_at({1, 1, 2}, 2)));
    const auto rf = validate_outcome_rules(m, flip);
    CHECK(rf.relation_violations.size() == 2);
    CHECK(rf.stabilizer_violations.empty());
}

TEST_CASE("boundary relations close on the slab") {
    for (int L : {2, 3, 4})
        for (auto s : {Sector::Z, Sector::X}) {
            const auto m = build_maps(make(GeometryKind::SlabT2xI, L), s);
            CHECK(m.parity_closed);
            CHECK_FALSE(m.round1_terminals);
            CHECK_FALSE(m.round2_terminals);
            CHECK(m.global_relations == 2);
        }
    for (int L : {2, 3, 4})
        for (auto s : {Sector::Z, Sector::X})
            CHECK(check_identities(build_maps(make(GeometryKind::Cube, L), s)).ok());
}

TEST_CASE("sectors are dual on the torus") {
    const int L = 3;
    const auto code = make(GeometryKind::Torus3, L);
    const auto& cx = code.complex();
    const auto mz = build_maps(code, Sector::Z), mx = build_maps(code, Sector::X);
    REQUIRE(mz.dim_Q() == mx.dim_Q());
    REQUIRE(mz.dim_M() == mx.dim_M());
    REQUIRE(mz.dim_S() == mx.dim_S());

    auto plus = [](Coord p, int a) {
        p[static_cast<std::size_t>(a)] += 1;
        return p;
    };
    auto wrap = [&](Coord p) {
        for (auto& c : p) c = (c % L + L) % L;
        return p;
    };
    auto edge_to_face = [&](std::size_t e) {
        const auto& c = cx.edges()[e];
        return *cx.face_at(wrap(plus(c.base, c.axis)), c.axis);
    };
    auto face_to_edge = [&](std::size_t f) {
        const auto& c = cx.faces()[f];
        const int b = (c.axis + 1) % 3, d = (c.axis + 2) % 3;
        return *cx.edge_at(wrap(plus(plus(c.base, b), d)), c.axis);
    };

    std::vector<std::size_t> qperm(mz.dim_Q());
    for (std::size_t q = 0; q < mz.dim_Q(); ++q) {
        const auto [is_face, cell] = code.qubit_cell(q);
        qperm[q] = is_face ? *code.edge_qubit(face_to_edge(cell)) : *code.face_qubit(edge_to_face(cell));
    }
    std::vector<std::size_t> mperm(mz.dim_M());
    for (std::size_t i = 0; i < mz.dim_M(); ++i) {
        const auto& c = mz.measurements[i];
        mperm[i] = coord_of(mx, c.label == "Xe" ? "Zf" : "Kf", edge_to_face(c.cell));
    }
    std::vector<std::size_t> sperm(mz.dim_S());
    for (std::size_t s = 0; s < mz.dim_S(); ++s) {
        const auto cube = *cx.cube_at(cx.vertices()[mz.stabilizer_cells[s]].base);
        sperm[s] = static_cast<std::size_t>(
            std::find(mx.stabilizer_cells.begin(), mx.stabilizer_cells.end(), cube) - mx.stabilizer_cells.begin());
    }

    for (std::size_t r = 0; r < mz.dim_M(); ++r)
        for (auto c : mz.delta_M.row(r)) CHECK(mx.delta_M.get(mperm[r], qperm[c]));
    for (std::size_t r = 0; r < mz.dim_S(); ++r) {
        CHECK(mz.delta_S.row(r).size() == mx.delta_S.row(sperm[r]).size());
        CHECK(mz.delta_R.row(r).size() == mx.delta_R.row(sperm[r]).size());
        for (auto c : mz.delta_S.row(r)) CHECK(mx.delta_S.get(sperm[r], mperm[c]));
        for (auto c : mz.delta_R.row(r)) CHECK(mx.delta_R.get(sperm[r], mperm[c]));
        for (auto c : mz.boundary_S.row(r)) CHECK(mx.boundary_S.get(sperm[r], qperm[c]));
    }
}

TEST_CASE("overcomplete six-family outcome") {
    const auto code = make(GeometryKind::Torus3, 3, Presentation::Overcomplete);
    const auto& cx = code.complex();
    const auto zero = empty_six_family(cx);
    const auto clean = overcomplete_outcome(code, PauliOperator(code.num_qubits()), zero);
    CHECK(clean.edge_relation_violations.empty());
    CHECK(clean.face_relation_violations.empty());

    auto mu = zero;
    mu.Be.set(5);
    const auto one = overcomplete_outcome(code, PauliOperator(code.num_qubits()), mu);
    CHECK(one.edge_relation_violations == std::vector<std::size_t>{5});

    const std::size_t f = 7;
    const auto zf = *code.Z_f(f);
    const auto r = overcomplete_outcome(code, zf, zero);
    CHECK(r.edge_relation_violations.empty());
    CHECK(r.values.Be == r.values.Ke);
    for (std::size_t e = 0; e < cx.edges().size(); ++e) {
        CHECK(r.values.Be.get(e) == symplectic_product(zf, *code.B_e(e)));
        CHECK(r.values.Xe.get(e) == symplectic_product(zf, *code.X_e(e)));
    }
    CHECK(r.values.Be.popcount() == 4);
    CHECK_THROWS_AS(overcomplete_outcome(make(GeometryKind::Torus3, 2), zf, zero), std::invalid_argument);
}

TEST_CASE("outcome dump format") {
    const auto m = build_maps(make(GeometryKind::SlabT2xI, 2), Sector::Z);
    BitVector z(m.dim_M());
    z.set(3);
    z.set(9);
    std::ostringstream out;
    write_outcome(out, m, z);
    CHECK(out.str() == "ZETA Z 2 SlabT2xI: 3,9\n");
}
