#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace itc {

enum class GeometryKind { Torus3, SlabT2xI, Cube };

std::string to_string(GeometryKind kind);
GeometryKind geometry_kind_from_string(const std::string& name);

/// Lattice geometry. Axis 0 runs front/back, axis 1 top/bottom and axis 2
/// left/right. The slab is open along axis 2 with vertex layers 0..L; the
/// cube is open along all three axes.
struct Geometry {
    GeometryKind kind = GeometryKind::Torus3;
    int L = 2;
    /// Swaps which open face of axis 2 carries the trivial and the
    /// intertwined boundary (default: trivial at 0, intertwined at L).
    bool mirrored = false;

    void validate() const;
    bool periodic(int axis) const;
};

/// Boundary-role bits. A cell carries a bit when it lies inside the
/// corresponding boundary plane (cubes: when one of their faces does).
enum Role : std::uint8_t {
    kBulk = 0,
    kTrivial = 1u << 0,
    kIntertwined = 1u << 1,
    kECondensed = 1u << 2,
    kMCondensed = 1u << 3,
};

std::string roles_to_string(std::uint8_t roles);

using Coord = std::array<int, 3>;

struct Cell {
    Coord base{};      // lowest corner
    int axis = -1;     // edges: direction; faces: normal; -1 otherwise
    std::uint8_t roles = kBulk;
    bool qubit = false;  // hosts a physical qubit (edges and faces only)
};

enum class CellKind { Vertex, Edge, Face, Cube };

/// Cubic cell complex with mod-2 incidence.
///
/// Linearization: within each kind, cells are numbered by the loop nest
/// (axis, z, y, x) with x fastest; vertices and cubes omit the axis loop.
/// Only cells that exist in the geometry are numbered.
class CellComplex {
public:
    explicit CellComplex(const Geometry& geometry);

    const Geometry& geometry() const noexcept { return geometry_; }
    int L() const noexcept { return geometry_.L; }

    const std::vector<Cell>& vertices() const noexcept { return vertices_; }
    const std::vector<Cell>& edges() const noexcept { return edges_; }
    const std::vector<Cell>& faces() const noexcept { return faces_; }
    const std::vector<Cell>& cubes() const noexcept { return cubes_; }

    // Boundary maps: edge -> 2 vertices, face -> 4 edges, cube -> 6 faces.
    const std::vector<std::size_t>& edge_boundary(std::size_t e) const { return edge_bnd_[e]; }
    const std::vector<std::size_t>& face_boundary(std::size_t f) const { return face_bnd_[f]; }
    const std::vector<std::size_t>& cube_boundary(std::size_t c) const { return cube_bnd_[c]; }
    // Coboundary maps (duals of the above).
    const std::vector<std::size_t>& vertex_coboundary(std::size_t v) const { return vertex_cob_[v]; }
    const std::vector<std::size_t>& edge_coboundary(std::size_t e) const { return edge_cob_[e]; }
    const std::vector<std::size_t>& face_coboundary(std::size_t f) const { return face_cob_[f]; }

    std::optional<std::size_t> vertex_at(const Coord& p) const;
    std::optional<std::size_t> edge_at(const Coord& base, int axis) const;
    std::optional<std::size_t> face_at(const Coord& base, int normal) const;
    std::optional<std::size_t> cube_at(const Coord& base) const;

    std::size_t num_qubit_edges() const noexcept { return qubit_edges_; }
    std::size_t num_qubit_faces() const noexcept { return qubit_faces_; }

    /// Number of vertex layers along an axis (L if periodic, L+1 if open).
    int vertex_extent(int axis) const;
    /// Number of edge/cube positions along an axis (always L).
    int cell_extent(int /*axis*/) const { return geometry_.L; }

    /// Shortest edge-path length between two vertices of the full lattice.
    /// With wrap=false periodic identifications are ignored.
    int graph_distance(std::size_t v1, std::size_t v2, bool wrap = true) const;
    /// Shortest path length in the cube adjacency graph (cubes sharing a face).
    int dual_graph_distance(std::size_t c1, std::size_t c2) const;

    /// Line-oriented incidence dump ("CELL kind id coords axis tags" and
    /// "BND kind id: id,id,...").
    void dump(std::ostream& out) const;

private:
    Coord wrap(Coord p) const;
    bool in_vertex_range(const Coord& p) const;
    std::size_t slot(const Coord& p, int axis) const;

    Geometry geometry_;
    std::vector<Cell> vertices_, edges_, faces_, cubes_;
    std::vector<std::vector<std::size_t>> edge_bnd_, face_bnd_, cube_bnd_;
    std::vector<std::vector<std::size_t>> vertex_cob_, edge_cob_, face_cob_;
    // Dense (axis, position) -> id lookups; npos when absent.
    std::vector<std::size_t> vertex_lut_, edge_lut_, face_lut_, cube_lut_;
    std::size_t qubit_edges_ = 0, qubit_faces_ = 0;
};

}  // namespace itc
