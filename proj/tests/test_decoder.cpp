#include <random>

#include "doctest.h"
#include "itc/decoder.hpp"
#include "json.hpp"
#include "support/reference.hpp"

using namespace itc;

namespace {

struct Fixture {
    SubsystemCode code;
    SyndromeMaps maps;
    Fixture(GeometryKind kind, int L, Sector s) : code(build_itc(Geometry{kind, L}, Presentation::KVC)) {
        if (kind != GeometryKind::Torus3) code.build_logicals();
        maps = build_maps(code, s);
    }
};

/// Columns of dQ: the qubit supports of the gauge generators in this sector.
std::vector<BitVector> gauge_supports(const SyndromeMaps& m) {
    std::vector<BitVector> out;
    for (const auto& g : m.gauge) out.push_back(m.sector == Sector::Z ? g.op.z : g.op.x);
    return out;
}

std::size_t coord_of(const SyndromeMaps& m, const std::string& label, std::size_t cell) {
    for (std::size_t i = 0; i < m.measurements.size(); ++i)
        if (m.measurements[i].label == label && m.measurements[i].cell == cell) return i;
    return m.measurements.size();
}

}  // namespace

TEST_CASE("decoding graph distances agree with BFS") {
    for (auto kind : {GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (auto s : {Sector::Z, Sector::X}) {
            Fixture f(kind, 3, s);
            for (const auto* mat : {&f.maps.delta_R, &f.maps.boundary_S}) {
                const DecodingGraph g(*mat);
                const std::size_t n = mat->rows(), sink = n;
                std::vector<std::vector<std::size_t>> adj(n + 1);
                for (const auto& col : mat->columns()) {
                    if (col.size() == 2) {
                        adj[col[0]].push_back(col[1]);
                        adj[col[1]].push_back(col[0]);
                    } else if (col.size() == 1) {
                        adj[col[0]].push_back(sink);
                    }
                }
                // The sink has no outgoing edges, so BFS never routes through it.
                for (std::size_t u = 0; u < n; ++u) {
                    const auto d = ref::bfs(adj, u);
                    CHECK(g.sink_distance(u) == (d[sink] < 0 ? DecodingGraph::kUnreachable : d[sink]));
                    if (d[sink] >= 0) CHECK(g.path_to_sink(u).size() == static_cast<std::size_t>(d[sink]));
                    for (std::size_t v = 0; v < n; ++v) {
                        CHECK(g.distance(u, v) == d[v]);
                        if (d[v] > 0 && (u + v) % 4 == 0) {
                            BitVector flips(mat->cols());
                            for (auto c : g.path(u, v)) flips.flip(c);
                            CHECK(flips.popcount() == static_cast<std::size_t>(d[v]));
                            CHECK(mat->apply(flips).ones() == std::vector<std::size_t>{std::min(u, v), std::max(u, v)});
                        }
                    }
                }
            }
        }
}

TEST_CASE("zero outcome decodes to nothing") {
    Fixture f(GeometryKind::SlabT2xI, 3, Sector::Z);
    const auto r = Decoder(f.maps).decode(BitVector(f.maps.dim_M()));
    CHECK(r.mu_hat.none());
    CHECK(r.eps_hat.none());
    CHECK_THROWS_AS(Decoder(f.maps).decode(BitVector(3)), std::invalid_argument);
}

TEST_CASE("every single qubit error is corrected") {
    for (auto kind : {GeometryKind::SlabT2xI, GeometryKind::Cube, GeometryKind::Torus3})
        for (int L : {3, 4})
            for (auto s : {Sector::Z, Sector::X}) {
                if (kind != GeometryKind::SlabT2xI && L == 4) continue;
                CAPTURE(to_string(kind));
                CAPTURE(L);
                CAPTURE(to_string(s));
                Fixture f(kind, L, s);
                const Decoder dec(f.maps);
                const auto gauge = ref::unpack(gauge_supports(f.maps));
                std::size_t failures = 0, not_equivalent = 0;
                for (std::size_t q = 0; q < f.maps.dim_Q(); ++q) {
                    BitVector eps(f.maps.dim_Q());
                    eps.set(q);
                    const auto r = dec.decode(f.maps.delta_M.apply(eps));
                    const auto res = eps ^ r.eps_hat;
                    CHECK(f.maps.boundary_S.apply(res).none());
                    failures += is_logical_failure(f.code, s, res);
                    if (kind == GeometryKind::SlabT2xI && L == 3)
                        not_equivalent += !ref::solve(gauge, ref::unpack(res)).has_value();
                }
                CHECK(failures == 0);
                CHECK(not_equivalent == 0);
            }
}

TEST_CASE("single measurement flips are contained") {
    for (auto kind : {GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (auto s : {Sector::Z, Sector::X}) {
            Fixture f(kind, 3, s);
            const Decoder dec(f.maps);
            std::size_t failures = 0, max_weight = 0;
            for (std::size_t c = 0; c < f.maps.dim_M(); ++c) {
                BitVector zeta(f.maps.dim_M());
                zeta.set(c);
                const auto r = dec.decode(zeta);
                BitVector res = r.eps_hat;
                max_weight = std::max(max_weight, f.maps.boundary_S.apply(res).popcount());
                const auto r2 = dec.decode(f.maps.delta_M.apply(res));
                res ^= r2.eps_hat;
                CHECK(f.maps.boundary_S.apply(res).none());
                failures += is_logical_failure(f.code, s, res);
            }
            CHECK(failures == 0);
            if (kind == GeometryKind::SlabT2xI) CHECK(max_weight <= 2);
        }
}

TEST_CASE("a bulk measurement flip is explained as itself") {
    Fixture f(GeometryKind::SlabT2xI, 4, Sector::Z);
    const auto e = *f.code.complex().edge_at({1, 1, 2}, 0);
    const auto c = coord_of(f.maps, "Xe", e);
    REQUIRE(c < f.maps.dim_M());
    BitVector zeta(f.maps.dim_M());
    zeta.set(c);
    const auto r = Decoder(f.maps).decode(zeta);
    CHECK(r.mu_hat == zeta);
    CHECK(r.eps_hat.none());
    CHECK(r.residual_syndrome.none());
}

TEST_CASE("logical failure verdicts") {
    Fixture f(GeometryKind::SlabT2xI, 3, Sector::Z);
    const auto& cx = f.code.complex();
    CHECK(is_logical_failure(f.code, Sector::Z, f.code.dressed_logicals()[0].z.z));
    CHECK(is_logical_failure(f.code, Sector::Z, f.code.bare_logicals()[1].z.z));
    for (std::size_t face = 0; face < cx.faces().size(); ++face)
        if (auto b = f.code.B_f(face)) CHECK_FALSE(is_logical_failure(f.code, Sector::Z, b->z));

    std::mt19937_64 rng(4);
    GeneratorSet zb = f.code.family_Zf();
    zb.append(f.code.family_Bf());
    std::vector<BitVector> rows;
    for (const auto& r : zb.rows) rows.push_back(r.z);
    for (int it = 0; it < 50; ++it) {
        BitVector res(f.code.num_qubits());
        for (const auto& r : rows)
            if (rng() & 1) res ^= r;
        CHECK_FALSE(is_logical_failure(f.code, Sector::Z, res));
        CHECK(ref::solve(ref::unpack(rows), ref::unpack(res)).has_value());
    }
}

TEST_CASE("commuting with bare logicals is the same as lying in the check span") {
    std::mt19937_64 rng(31);
    for (int L : {2, 3})
        for (auto s : {Sector::Z, Sector::X}) {
            Fixture f(GeometryKind::SlabT2xI, L, s);
            const auto kernel = ref::nullspace(ref::unpack(f.maps.boundary_S.dense()), f.maps.dim_Q());
            const auto gauge = ref::unpack(gauge_supports(f.maps));
            for (int it = 0; it < (L == 2 ? 600 : 400); ++it) {
                ref::Bits v(f.maps.dim_Q(), 0);
                for (const auto& k : kernel)
                    if (rng() & 1)
                        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= k[i];
                BitVector res(f.maps.dim_Q());
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i]) res.set(i);
                CHECK(is_logical_failure(f.code, s, res) == !ref::solve(gauge, v).has_value());
            }
        }
}

TEST_CASE("verdicts ignore gauge shifts and are deterministic") {
    std::mt19937_64 rng(57);
    for (auto s : {Sector::Z, Sector::X}) {
        Fixture f(GeometryKind::SlabT2xI, 3, s);
        const Decoder dec(f.maps);
        for (int it = 0; it < 100; ++it) {
            BitVector eps(f.maps.dim_Q()), mu(f.maps.dim_M()), gamma(f.maps.dim_G());
            for (int k = 0; k < 3; ++k) eps.set(rng() % eps.size());
            for (int k = 0; k < 2; ++k) mu.set(rng() % mu.size());
            for (std::size_t g = 0; g < gamma.size(); ++g)
                if (rng() & 1) gamma.set(g);
            const auto plain = outcome(f.maps, eps, mu, BitVector(f.maps.dim_G())).zeta;
            const auto shifted = outcome(f.maps, eps, mu, gamma).zeta;
            const auto a = dec.decode(plain), a2 = dec.decode(plain), b = dec.decode(shifted);
            CHECK(a.eps_hat == a2.eps_hat);
            CHECK(a.mu_hat == a2.mu_hat);
            CHECK(logical_failures(f.code, s, eps ^ a.eps_hat) == logical_failures(f.code, s, eps ^ b.eps_hat));
        }
    }
}

TEST_CASE("decode result json") {
    Fixture f(GeometryKind::SlabT2xI, 3, Sector::Z);
    BitVector eps(f.maps.dim_Q());
    eps.set(5);
    const auto r = Decoder(f.maps).decode(f.maps.delta_M.apply(eps), 2);
    const auto j = nlohmann::json::parse(to_json(r, f.maps, f.code));
    CHECK(j["round"] == 2);
    CHECK(j["sector"] == "Z");
    CHECK(j["eps_hat"].size() == r.eps_hat.popcount());
    CHECK(j["residual_syndrome"].empty());
}
