#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "itc/cells.hpp"
#include "support/reference.hpp"

using namespace itc;

namespace {

std::vector<std::vector<std::size_t>> vertex_graph(const CellComplex& cx) {
    std::vector<std::vector<std::size_t>> adj(cx.vertices().size());
    for (std::size_t e = 0; e < cx.edges().size(); ++e) {
        const auto& b = cx.edge_boundary(e);
        adj[b[0]].push_back(b[1]);
        adj[b[1]].push_back(b[0]);
    }
    return adj;
}

std::vector<std::vector<std::size_t>> cube_graph(const CellComplex& cx) {
    std::vector<std::vector<std::size_t>> adj(cx.cubes().size());
    for (std::size_t f = 0; f < cx.faces().size(); ++f) {
        const auto& cob = cx.face_coboundary(f);
        if (cob.size() == 2) {
            adj[cob[0]].push_back(cob[1]);
            adj[cob[1]].push_back(cob[0]);
        }
    }
    return adj;
}

}  // namespace

TEST_CASE("torus L=2 cell counts") {
    CellComplex cx(Geometry{GeometryKind::Torus3, 2});
    CHECK(cx.vertices().size() == 8);
    CHECK(cx.edges().size() == 24);
    CHECK(cx.faces().size() == 24);
    CHECK(cx.cubes().size() == 8);
}

TEST_CASE("qubit counts follow the closed forms") {
    for (int L = 2; L <= 5; ++L) {
        const std::size_t l = static_cast<std::size_t>(L);
        CellComplex torus(Geometry{GeometryKind::Torus3, L});
        CHECK(torus.num_qubit_edges() == 3 * l * l * l);
        CHECK(torus.num_qubit_faces() == 3 * l * l * l);
        CellComplex slab(Geometry{GeometryKind::SlabT2xI, L});
        CHECK(slab.num_qubit_edges() == 3 * l * l * l + 2 * l * l);
        CHECK(slab.num_qubit_faces() == 3 * l * l * l - l * l);
        CellComplex cube(Geometry{GeometryKind::Cube, L});
        CHECK(cube.num_qubit_edges() == 3 * l * l * l + 2 * l * l - l);
        CHECK(cube.num_qubit_faces() == 3 * l * l * l - l * l);
        CHECK(cube.num_qubit_edges() + cube.num_qubit_faces() == 6 * l * l * l + l * l - l);
    }
    CellComplex slab2(Geometry{GeometryKind::SlabT2xI, 2});
    CHECK(slab2.num_qubit_edges() == 32);
    CHECK(slab2.num_qubit_faces() == 20);
}

TEST_CASE("rejects L below 2") {
    CHECK_THROWS_AS(CellComplex(Geometry{GeometryKind::Torus3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CellComplex(Geometry{GeometryKind::Cube, 0}), std::invalid_argument);
}

TEST_CASE("incidence is dual, closed and has bulk degrees") {
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (int L = 2; L <= 4; ++L) {
            CAPTURE(to_string(kind));
            CAPTURE(L);
            CellComplex cx(Geometry{kind, L});
            for (std::size_t f = 0; f < cx.faces().size(); ++f) {
                CHECK(cx.face_boundary(f).size() == 4);
                for (auto e : cx.face_boundary(f)) {
                    const auto& cob = cx.edge_coboundary(e);
                    CHECK(std::count(cob.begin(), cob.end(), f) == 1);
                }
            }
            for (std::size_t c = 0; c < cx.cubes().size(); ++c) {
                CHECK(cx.cube_boundary(c).size() == 6);
                std::map<std::size_t, int> edge_hits;
                for (auto f : cx.cube_boundary(c)) {
                    const auto& cob = cx.face_coboundary(f);
                    CHECK(std::count(cob.begin(), cob.end(), c) == 1);
                    for (auto e : cx.face_boundary(f)) ++edge_hits[e];
                }
                CHECK(edge_hits.size() == 12);
                for (auto [e, n] : edge_hits) CHECK(n == 2);
            }
            std::size_t degree_sum = 0;
            for (std::size_t v = 0; v < cx.vertices().size(); ++v) {
                const auto deg = cx.vertex_coboundary(v).size();
                CHECK(deg <= 6);
                if (kind == GeometryKind::Torus3) CHECK(deg == 6);
                degree_sum += deg;
            }
            CHECK(degree_sum == 2 * cx.edges().size());
            for (std::size_t e = 0; e < cx.edges().size(); ++e) {
                CHECK(cx.edge_coboundary(e).size() <= 4);
                if (kind == GeometryKind::Torus3) CHECK(cx.edge_coboundary(e).size() == 4);
            }
        }
}

TEST_CASE("slab and cube boundary roles") {
    CellComplex slab(Geometry{GeometryKind::SlabT2xI, 3});
    for (const auto& v : slab.vertices()) {
        CHECK(bool(v.roles & kTrivial) == (v.base[2] == 0));
        CHECK(bool(v.roles & kIntertwined) == (v.base[2] == 3));
    }
    CellComplex mirrored(Geometry{GeometryKind::SlabT2xI, 3, true});
    for (const auto& v : mirrored.vertices()) CHECK(bool(v.roles & kTrivial) == (v.base[2] == 3));

    CellComplex cube(Geometry{GeometryKind::Cube, 3});
    for (const auto& v : cube.vertices()) {
        CHECK(bool(v.roles & kECondensed) == (v.base[1] == 0 || v.base[1] == 3));
        CHECK(bool(v.roles & kMCondensed) == (v.base[0] == 0 || v.base[0] == 3));
    }
    for (const auto& f : slab.faces())
        if (f.axis == 2 && (f.base[2] == 0 || f.base[2] == 3)) CHECK_FALSE(f.qubit);
}

TEST_CASE("graph distance examples") {
    CellComplex t4(Geometry{GeometryKind::Torus3, 4});
    const auto a = *t4.vertex_at({0, 0, 0}), b = *t4.vertex_at({3, 0, 0});
    CHECK(t4.graph_distance(a, b) == 1);
    CHECK(t4.graph_distance(a, b, false) == 3);
    CHECK(t4.graph_distance(a, a) == 0);
    CHECK(t4.dual_graph_distance(0, 0) == 0);
    CHECK(t4.dual_graph_distance(*t4.cube_at({0, 0, 0}), *t4.cube_at({1, 0, 0})) == 1);
    CHECK(t4.dual_graph_distance(*t4.cube_at({0, 0, 0}), *t4.cube_at({3, 0, 0})) == 1);
}

TEST_CASE("graph distances agree with BFS") {
    for (auto kind : {GeometryKind::Torus3, GeometryKind::SlabT2xI, GeometryKind::Cube})
        for (int L : {3, 4}) {
            CellComplex cx(Geometry{kind, L});
            const auto vg = vertex_graph(cx);
            for (std::size_t s = 0; s < cx.vertices().size(); s += 5) {
                const auto d = ref::bfs(vg, s);
                for (std::size_t t = 0; t < cx.vertices().size(); ++t) CHECK(cx.graph_distance(s, t) == d[t]);
            }
            const auto cg = cube_graph(cx);
            for (std::size_t s = 0; s < cx.cubes().size(); s += 3) {
                const auto d = ref::bfs(cg, s);
                for (std::size_t t = 0; t < cx.cubes().size(); ++t) CHECK(cx.dual_graph_distance(s, t) == d[t]);
            }
        }
    CellComplex slab(Geometry{GeometryKind::SlabT2xI, 3});
    const auto s = *slab.vertex_at({0, 0, 0}), t = *slab.vertex_at({2, 2, 2});
    CHECK(slab.graph_distance(s, t) == ref::bfs(vertex_graph(slab), s)[t]);
}

TEST_CASE("dump is deterministic and lists every cell") {
    CellComplex cx(Geometry{GeometryKind::SlabT2xI, 2});
    std::ostringstream a, b;
    cx.dump(a);
    CellComplex(Geometry{GeometryKind::SlabT2xI, 2}).dump(b);
    CHECK(a.str() == b.str());
    std::size_t cells = 0;
    std::istringstream in(a.str());
    for (std::string line; std::getline(in, line);)
        if (line.rfind("CELL", 0) == 0) ++cells;
    CHECK(cells == cx.vertices().size() + cx.edges().size() + cx.faces().size() + cx.cubes().size());
}
