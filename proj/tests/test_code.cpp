#include <random>

#include "doctest.h"
#include "itc/code.hpp"
#include "json.hpp"
#include "support/reference.hpp"

using namespace itc;

namespace {

SubsystemCode make(GeometryKind kind, int L, Presentation pres = Presentation::KVC, bool mirrored = false) {
    return build_itc(Geometry{kind, L, mirrored}, pres);
}

bool spans_equal(const GeneratorSet& a, const GeneratorSet& b) {
    return ref::same_span(a.symplectic_rows(), b.symplectic_rows());
}

}  // namespace

TEST_CASE("torus check families") {
    const auto code = make(GeometryKind::Torus3, 2, Presentation::Toric);
    CHECK(code.checks().count("Xe") == 24);
    CHECK(code.checks().count("Zf") == 24);
    CHECK(code.checks().count("Be") == 24);
    CHECK(code.checks().count("Bf") == 24);
    CHECK(code.stabilizers().count("Av") == 8);
    CHECK(code.stabilizers().count("Ac") == 8);
    CHECK(code.nonlocal_stabilizers().size() == 6);
}

TEST_CASE("two-body K_e on the intertwined boundary") {
    for (int L : {2, 3}) {
        const auto code = make(GeometryKind::SlabT2xI, L);
        const auto kb = code.family_Ke_boundary();
        CHECK(kb.size() == static_cast<std::size_t>(2 * L * L));
        for (const auto& k : kb.rows) {
            CHECK(k.weight() == 2);
            CHECK(k.z.none());
        }
    }
}

TEST_CASE("logical qubit count") {
    for (int L : {2, 3, 4}) {
        CAPTURE(L);
        CHECK(count_logical_qubits(make(GeometryKind::Torus3, L)) == 0);
        CHECK(count_logical_qubits(make(GeometryKind::SlabT2xI, L)) == 2);
        CHECK(count_logical_qubits(make(GeometryKind::Cube, L)) == 1);
        CHECK(count_logical_qubits(make(GeometryKind::SlabT2xI, L, Presentation::Toric)) == 2);
    }
}

TEST_CASE("family ranks reproduce the closed forms") {
    for (int L : {2, 3}) {
        CAPTURE(L);
        const std::size_t l = static_cast<std::size_t>(L), l2 = l * l, l3 = l2 * l;
        const auto torus = make(GeometryKind::Torus3, L, Presentation::Toric);
        CHECK(ref::pauli_rank(torus.family_Be()) == 2 * l3 - 2);
        CHECK(ref::pauli_rank(torus.family_Av()) == l3 - 1);

        const auto slab = make(GeometryKind::SlabT2xI, L, Presentation::Toric);
        CHECK(ref::pauli_rank(slab.family_Av()) == l3 + l2 - 1);
        CHECK(ref::pauli_rank(slab.family_Ac()) == l3 - 1);
        CHECK(ref::pauli_rank(slab.family_Bf()) == 2 * l3 + l2 - 1);
        CHECK(ref::pauli_rank(slab.family_Be()) == 2 * l3 - l2 - 1);
        GeneratorSet slab_stabs = slab.family_Av();
        slab_stabs.append(slab.family_Ac());
        CHECK(centralizer_intersection_rank(slab.checks_and_stabilizers()) == ref::pauli_rank(slab_stabs));

        const auto cube = make(GeometryKind::Cube, L, Presentation::Toric);
        CHECK(ref::pauli_rank(cube.family_Bf()) == 2 * l3 + l2);
        CHECK(ref::pauli_rank(cube.family_Be()) == 2 * l3 - l2 - 1);
        CHECK(ref::pauli_rank(cube.family_Av()) == l3 + l2 - l - 1);
        CHECK(ref::pauli_rank(cube.family_Ac()) == l3);
    }
}

TEST_CASE("stabilizers are central and generated by checks") {
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (auto pres : {Presentation::Toric, Presentation::KVC, Presentation::Overcomplete}) {
            const auto code = make(kind, 2, pres);
            const PauliSpan checks(code.checks());
            for (const auto& s : code.stabilizers().rows) {
                for (const auto& g : code.checks().rows) CHECK(symplectic_product(s, g) == 0);
                const auto cert = checks.solve(s);
                REQUIRE(cert.has_value());
                PauliOperator prod(code.num_qubits());
                for (auto i : cert->ones()) prod *= code.checks().rows[i];
                CHECK(prod == s);
            }
        }
}

TEST_CASE("presentations span the same check group") {
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (int L : {2, 3}) {
            const auto toric = make(kind, L, Presentation::Toric);
            const auto kvc = make(kind, L, Presentation::KVC);
            const auto over = make(kind, L, Presentation::Overcomplete);
            CHECK(spans_equal(toric.checks(), kvc.checks()));
            CHECK(spans_equal(kvc.checks(), over.checks()));
        }
}

TEST_CASE("overcomplete per-edge relation") {
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube}) {
        const auto code = make(kind, 3, Presentation::Overcomplete);
        std::size_t tested = 0;
        for (std::size_t e = 0; e < code.complex().edges().size(); ++e) {
            const auto k = code.K_e(e), x = code.X_e(e), b = code.B_e(e);
            if (!k || !x || !b) continue;
            auto prod = *k;
            prod *= *x;
            prod *= *b;
            CHECK(prod.is_identity());
            ++tested;
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("logical operators") {
    for (auto kind : {GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (int L : {2, 3}) {
            CAPTURE(L);
            auto code = make(kind, L);
            code.build_logicals();
            const auto& bare = code.bare_logicals();
            const auto& dressed = code.dressed_logicals();
            REQUIRE(bare.size() == count_logical_qubits(code));
            REQUIRE(dressed.size() == bare.size());
            const auto all = code.checks_and_stabilizers();
            for (std::size_t i = 0; i < bare.size(); ++i) {
                for (std::size_t j = 0; j < bare.size(); ++j) {
                    CHECK(ref::commute(bare[i].x, bare[j].z) == (i != j));
                    CHECK(ref::commute(dressed[i].x, dressed[j].z));
                    CHECK(ref::commute(dressed[i].x, bare[j].z) == (i != j));
                    CHECK(ref::commute(bare[i].x, dressed[j].z) == (i != j));
                }
                for (const auto& g : code.checks().rows) {
                    CHECK(ref::commute(bare[i].x, g));
                    CHECK(ref::commute(bare[i].z, g));
                }
                for (const auto& s : code.stabilizers().rows) {
                    CHECK(ref::commute(dressed[i].x, s));
                    CHECK(ref::commute(dressed[i].z, s));
                }
                CHECK_FALSE(ref::in_span(all.symplectic_rows(), bare[i].x.symplectic()));
                CHECK_FALSE(ref::in_span(all.symplectic_rows(), bare[i].z.symplectic()));
                auto diff = bare[i].z;
                diff *= dressed[i].z;
                CHECK(ref::in_span(all.symplectic_rows(), diff.symplectic()));
            }
        }
}

TEST_CASE("dressed strings stay logical when moved by checks") {
    auto code = make(GeometryKind::SlabT2xI, 3);
    code.build_logicals();
    std::mt19937_64 rng(29);
    const auto bf = code.family_Bf();
    for (int it = 0; it < 20; ++it) {
        auto z = code.dressed_logicals()[0].z;
        for (int k = 0; k < 4; ++k) z *= bf.rows[rng() % bf.size()];
        for (const auto& s : code.stabilizers().rows) CHECK(ref::commute(z, s));
        CHECK_FALSE(ref::commute(z, code.bare_logicals()[0].x));
        CHECK(ref::commute(z, code.bare_logicals()[1].x));
    }
}

TEST_CASE("U_CX symmetry") {
    const auto torus = make(GeometryKind::Torus3, 2, Presentation::Toric);
    const auto image = apply_ucx(torus);
    CHECK(spans_equal(image, torus.checks()));
    const auto pairs = torus.ucx_pairs();
    for (std::size_t v = 0; v < torus.complex().vertices().size(); ++v)
        CHECK(conjugate_by_cx(*torus.A_v(v), pairs) == *torus.A_v(v));

    for (int L : {2, 3}) {
        const auto slab = make(GeometryKind::SlabT2xI, L, Presentation::Toric);
        const auto mirrored = make(GeometryKind::SlabT2xI, L, Presentation::Toric, true);
        REQUIRE(slab.num_qubits() == mirrored.num_qubits());
        CHECK(spans_equal(apply_ucx(slab), mirrored.checks()));
        CHECK_FALSE(spans_equal(slab.checks(), mirrored.checks()));
    }
}

TEST_CASE("gauge fixing yields commuting logical-preserving terms") {
    for (int L : {2, 3}) {
        auto code = make(GeometryKind::SlabT2xI, L);
        code.build_logicals();
        const auto all = code.checks_and_stabilizers().symplectic_rows();
        for (auto phase : {Phase::Para, Phase::TCE, Phase::TCF, Phase::TwoTC, Phase::RBH}) {
            CAPTURE(to_string(phase));
            const auto terms = gauge_fix(code, phase);
            REQUIRE(terms.size() > 0);
            for (std::size_t i = 0; i < terms.size(); ++i) {
                for (std::size_t j = i + 1; j < terms.size(); ++j) CHECK(ref::commute(terms.rows[i], terms.rows[j]));
                CHECK(ref::in_span(all, terms.rows[i].symplectic()));
                for (const auto& lp : code.bare_logicals()) {
                    CHECK(ref::commute(lp.x, terms.rows[i]));
                    CHECK(ref::commute(lp.z, terms.rows[i]));
                }
            }
        }
    }
    const auto torus = make(GeometryKind::Torus3, 2, Presentation::Toric);
    const auto two_tc = gauge_fix(torus, Phase::TwoTC);
    GeneratorSet expect = torus.family_Av();
    expect.append(torus.family_Ac());
    expect.append(torus.family_Be());
    expect.append(torus.family_Bf());
    expect.append(torus.stabilizers());
    CHECK(spans_equal(two_tc, expect));
}

TEST_CASE("RBH boundary decomposition of the membrane logical") {
    for (int L : {2, 3}) {
        auto code = make(GeometryKind::SlabT2xI, L);
        code.build_logicals();
        auto prod = rbh_boundary_logical(code);
        for (const auto& k : rbh_membrane_terms(code).rows) prod *= k;
        CHECK(prod == code.bare_logicals()[0].x);
    }
}

TEST_CASE("summary json") {
    const auto code = make(GeometryKind::SlabT2xI, 2);
    const auto j = nlohmann::json::parse(summary_json(code));
    CHECK(j["K"] == 2);
    CHECK(j["L"] == 2);
    CHECK(j["presentation"] == "kvc");
}
