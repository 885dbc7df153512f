#include <algorithm>
#include <random>
#include <string>

#include "itc/harness.hpp"

namespace itc {
namespace {

std::size_t expected_logicals(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::Torus3: return 0;
        case GeometryKind::SlabT2xI: return 2;
        case GeometryKind::Cube: return 1;
    }
    return 0;
}

bool chain_complex_closed(const CellComplex& cx) {
    for (std::size_t f = 0; f < cx.faces().size(); ++f) {
        std::vector<int> hits(cx.vertices().size(), 0);
        for (auto e : cx.face_boundary(f))
            for (auto v : cx.edge_boundary(e)) hits[v] ^= 1;
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h; })) return false;
    }
    for (std::size_t c = 0; c < cx.cubes().size(); ++c) {
        std::vector<int> hits(cx.edges().size(), 0);
        for (auto f : cx.cube_boundary(c))
            for (auto e : cx.face_boundary(f)) hits[e] ^= 1;
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h; })) return false;
    }
    return true;
}

bool stabilizers_central(const SubsystemCode& code) {
    const auto& s = code.stabilizers().rows;
    const auto& g = code.checks().rows;
    for (const auto& a : s) {
        for (const auto& b : g)
            if (symplectic_product(a, b)) return false;
        for (const auto& b : s)
            if (symplectic_product(a, b)) return false;
    }
    return true;
}

bool single_faults_corrected(const SubsystemCode& code, const SyndromeMaps& maps) {
    const Decoder dec(maps);
    for (std::size_t q = 0; q < maps.dim_Q(); ++q) {
        BitVector eps(maps.dim_Q());
        eps.set(q);
        const auto r = dec.decode(maps.delta_M.apply(eps));
        if (is_logical_failure(code, maps.sector, eps ^ r.eps_hat)) return false;
    }
    for (std::size_t m = 0; m < maps.dim_M(); ++m) {
        BitVector zeta(maps.dim_M());
        zeta.set(m);
        BitVector res = dec.decode(zeta).eps_hat;
        res ^= dec.decode(maps.delta_M.apply(res)).eps_hat;
        if (is_logical_failure(code, maps.sector, res)) return false;
    }
    return true;
}

bool matching_agrees_with_enumeration(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 1 + rng() % 8;
        MatchingProblem prob(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) prob.set_weight(i, j, static_cast<std::int64_t>(rng() % 20));
            if (rng() % 3) prob.boundary[i] = static_cast<std::int64_t>(rng() % 20);
        }
        if (n % 2 && !prob.has_boundary()) prob.boundary[0] = 5;
        if (solve(prob).total != brute_force(prob).total) return false;
    }
    return true;
}

}  // namespace

ValidationReport run_validate(const ExperimentConfig& cfg) {
    ValidationReport report;
    auto add = [&](const std::string& name, auto&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception&) {
            ok = false;
        }
        report.checks.emplace_back(name, ok);
    };
    for (int L : cfg.L) {
        const std::string tag = to_string(cfg.geometry) + " L=" + std::to_string(L) + " ";
        const Geometry geom{cfg.geometry, L, false};
        SubsystemCode code = build_itc(geom, cfg.presentation);
        add(tag + "boundary of boundary vanishes", [&] { return chain_complex_closed(code.complex()); });
        add(tag + "stabilizers commute with all checks", [&] { return stabilizers_central(code); });
        add(tag + "logical qubit count", [&] { return count_logical_qubits(code) == expected_logicals(cfg.geometry); });
        if (cfg.geometry == GeometryKind::Torus3) continue;
        add(tag + "logical commutation table", [&] {
            code.build_logicals();
            return code.bare_logicals().size() == expected_logicals(cfg.geometry);
        });
        if (cfg.presentation == Presentation::Toric) continue;
        for (auto s : cfg.sectors) {
            const auto stag = tag + to_string(s) + " ";
            std::unique_ptr<SyndromeMaps> maps;
            add(stag + "syndrome maps build", [&] {
                maps = std::make_unique<SyndromeMaps>(build_maps(code, s));
                return true;
            });
            if (!maps) continue;
            add(stag + "map identities", [&] { return check_identities(*maps).ok(); });
            if (L >= 3)
                add(stag + "single faults corrected", [&] { return single_faults_corrected(code, *maps); });
        }
    }
    add("matching agrees with enumeration", [&] { return matching_agrees_with_enumeration(cfg.seed); });
    return report;
}

}  // namespace itc
