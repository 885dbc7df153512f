#include "itc/cells.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace itc {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Coord shifted(Coord p, int axis, int by = 1) {
    p[static_cast<std::size_t>(axis)] += by;
    return p;
}

std::string coord_string(const Coord& p) {
    return std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]);
}

}  // namespace

std::string to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::Torus3: return "Torus3";
        case GeometryKind::SlabT2xI: return "SlabT2xI";
        case GeometryKind::Cube: return "Cube";
    }
    return "?";
}

GeometryKind geometry_kind_from_string(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "torus3" || s == "torus") return GeometryKind::Torus3;
    if (s == "slabt2xi" || s == "slab") return GeometryKind::SlabT2xI;
    if (s == "cube") return GeometryKind::Cube;
    throw std::invalid_argument("unknown geometry '" + name + "'");
}

void Geometry::validate() const {
    if (L < 2) throw std::invalid_argument("geometry requires L >= 2 (got " + std::to_string(L) + ")");
}

bool Geometry::periodic(int axis) const {
    switch (kind) {
        case GeometryKind::Torus3: return true;
        case GeometryKind::SlabT2xI: return axis != 2;
        case GeometryKind::Cube: return false;
    }
    return false;
}

std::string roles_to_string(std::uint8_t roles) {
    if (roles == kBulk) return "bulk";
    std::string out;
    auto add = [&](std::uint8_t bit, const char* name) {
        if (!(roles & bit)) return;
        if (!out.empty()) out += "+";
        out += name;
    };
    add(kTrivial, "trivial");
    add(kIntertwined, "intertwined");
    add(kECondensed, "e-condensed");
    add(kMCondensed, "m-condensed");
    return out;
}

int CellComplex::vertex_extent(int axis) const {
    return geometry_.periodic(axis) ? geometry_.L : geometry_.L + 1;
}

Coord CellComplex::wrap(Coord p) const {
    for (int a = 0; a < 3; ++a)
        if (geometry_.periodic(a)) {
            auto& c = p[static_cast<std::size_t>(a)];
            c = ((c % geometry_.L) + geometry_.L) % geometry_.L;
        }
    return p;
}

bool CellComplex::in_vertex_range(const Coord& p) const {
    for (int a = 0; a < 3; ++a) {
        const int c = p[static_cast<std::size_t>(a)];
        if (c < 0 || c >= vertex_extent(a)) return false;
    }
    return true;
}

std::size_t CellComplex::slot(const Coord& p, int axis) const {
    const auto ex = static_cast<std::size_t>(vertex_extent(0));
    const auto ey = static_cast<std::size_t>(vertex_extent(1));
    const auto ez = static_cast<std::size_t>(vertex_extent(2));
    const auto a = static_cast<std::size_t>(std::max(axis, 0));
    return ((a * ez + static_cast<std::size_t>(p[2])) * ey + static_cast<std::size_t>(p[1])) * ex +
           static_cast<std::size_t>(p[0]);
}

CellComplex::CellComplex(const Geometry& geometry) : geometry_(geometry) {
    geometry_.validate();
    const int L = geometry_.L;
    const bool open_z = !geometry_.periodic(2);
    const bool box = geometry_.kind == GeometryKind::Cube;
    const int trivial_z = geometry_.mirrored ? L : 0;
    const int intertwined_z = geometry_.mirrored ? 0 : L;

    // Role bits for a cell lying in the plane {axis = k}.
    auto plane_roles = [&](int axis, int k) -> std::uint8_t {
        std::uint8_t r = kBulk;
        if (axis == 2 && open_z) {
            if (k == trivial_z) r |= kTrivial;
            if (k == intertwined_z) r |= kIntertwined;
        }
        if (box && axis == 1 && (k == 0 || k == L)) r |= kECondensed;
        if (box && axis == 0 && (k == 0 || k == L)) r |= kMCondensed;
        return r;
    };

    const std::size_t lut_size = 3u * static_cast<std::size_t>(vertex_extent(0) * vertex_extent(1) * vertex_extent(2));
    vertex_lut_.assign(lut_size, npos);
    edge_lut_.assign(lut_size, npos);
    face_lut_.assign(lut_size, npos);
    cube_lut_.assign(lut_size, npos);

    auto for_each_position = [&](const std::array<int, 3>& ext, auto&& fn) {
        for (int z = 0; z < ext[2]; ++z)
            for (int y = 0; y < ext[1]; ++y)
                for (int x = 0; x < ext[0]; ++x) fn(Coord{x, y, z});
    };

    // Vertices.
    for_each_position({vertex_extent(0), vertex_extent(1), vertex_extent(2)}, [&](const Coord& p) {
        Cell c{p, -1, kBulk, false};
        for (int a = 0; a < 3; ++a) c.roles |= plane_roles(a, p[static_cast<std::size_t>(a)]);
        vertex_lut_[slot(p, 0)] = vertices_.size();
        vertices_.push_back(c);
    });

    // Edges: axis a spans [p_a, p_a + 1].
    for (int a = 0; a < 3; ++a) {
        std::array<int, 3> ext{vertex_extent(0), vertex_extent(1), vertex_extent(2)};
        ext[static_cast<std::size_t>(a)] = L;
        for_each_position(ext, [&](const Coord& p) {
            Cell c{p, a, kBulk, false};
            for (int b = 0; b < 3; ++b)
                if (b != a) c.roles |= plane_roles(b, p[static_cast<std::size_t>(b)]);
            c.qubit = !(c.roles & kECondensed);
            edge_lut_[slot(p, a)] = edges_.size();
            edges_.push_back(c);
        });
    }

    // Faces: normal a, spanning the other two axes.
    for (int a = 0; a < 3; ++a) {
        std::array<int, 3> ext{L, L, L};
        ext[static_cast<std::size_t>(a)] = vertex_extent(a);
        for_each_position(ext, [&](const Coord& p) {
            Cell c{p, a, plane_roles(a, p[static_cast<std::size_t>(a)]), false};
            c.qubit = !(c.roles & (kTrivial | kIntertwined | kECondensed));
            face_lut_[slot(p, a)] = faces_.size();
            faces_.push_back(c);
        });
    }

    // Cubes.
    for_each_position({L, L, L}, [&](const Coord& p) {
        Cell c{p, -1, kBulk, false};
        for (int a = 0; a < 3; ++a) {
            c.roles |= plane_roles(a, p[static_cast<std::size_t>(a)]);
            c.roles |= plane_roles(a, p[static_cast<std::size_t>(a)] + 1);
        }
        cube_lut_[slot(p, 0)] = cubes_.size();
        cubes_.push_back(c);
    });

    for (const auto& e : edges_) {
        if (e.qubit) ++qubit_edges_;
    }
    for (const auto& f : faces_) {
        if (f.qubit) ++qubit_faces_;
    }

    // Boundary maps.
    edge_bnd_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        edge_bnd_[i] = {*vertex_at(e.base), *vertex_at(shifted(e.base, e.axis))};
    }
    face_bnd_.resize(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        const auto& f = faces_[i];
        const int b = (f.axis + 1) % 3, c = (f.axis + 2) % 3;
        face_bnd_[i] = {*edge_at(f.base, b), *edge_at(shifted(f.base, c), b), *edge_at(f.base, c),
                        *edge_at(shifted(f.base, b), c)};
    }
    cube_bnd_.resize(cubes_.size());
    for (std::size_t i = 0; i < cubes_.size(); ++i) {
        const auto& cu = cubes_[i];
        for (int a = 0; a < 3; ++a) {
            cube_bnd_[i].push_back(*face_at(cu.base, a));
            cube_bnd_[i].push_back(*face_at(shifted(cu.base, a), a));
        }
    }

    // Coboundaries by transposition. On small periodic lattices a cell can
    // meet the same neighbour twice (L=2 edge wrap); mod-2 incidence keeps
    // both entries, which is what products of Paulis need.
    vertex_cob_.resize(vertices_.size());
    edge_cob_.resize(edges_.size());
    face_cob_.resize(faces_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e)
        for (auto v : edge_bnd_[e]) vertex_cob_[v].push_back(e);
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (auto e : face_bnd_[f]) edge_cob_[e].push_back(f);
    for (std::size_t c = 0; c < cubes_.size(); ++c)
        for (auto f : cube_bnd_[c]) face_cob_[f].push_back(c);
}

std::optional<std::size_t> CellComplex::vertex_at(const Coord& p0) const {
    const Coord p = wrap(p0);
    if (!in_vertex_range(p)) return std::nullopt;
    const auto id = vertex_lut_[slot(p, 0)];
    if (id == npos) return std::nullopt;
    return id;
}

std::optional<std::size_t> CellComplex::edge_at(const Coord& base, int axis) const {
    if (axis < 0 || axis > 2) return std::nullopt;
    const Coord p = wrap(base);
    if (!in_vertex_range(p)) return std::nullopt;
    const auto id = edge_lut_[slot(p, axis)];
    if (id == npos) return std::nullopt;
    return id;
}

std::optional<std::size_t> CellComplex::face_at(const Coord& base, int normal) const {
    if (normal < 0 || normal > 2) return std::nullopt;
    const Coord p = wrap(base);
    if (!in_vertex_range(p)) return std::nullopt;
    const auto id = face_lut_[slot(p, normal)];
    if (id == npos) return std::nullopt;
    return id;
}

std::optional<std::size_t> CellComplex::cube_at(const Coord& base) const {
    const Coord p = wrap(base);
    if (!in_vertex_range(p)) return std::nullopt;
    const auto id = cube_lut_[slot(p, 0)];
    if (id == npos) return std::nullopt;
    return id;
}

int CellComplex::graph_distance(std::size_t v1, std::size_t v2, bool wrap_around) const {
    if (v1 >= vertices_.size() || v2 >= vertices_.size())
        throw std::out_of_range("graph_distance: vertex id out of range");
    const auto& a = vertices_[v1].base;
    const auto& b = vertices_[v2].base;
    int d = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        int delta = std::abs(a[k] - b[k]);
        if (wrap_around && geometry_.periodic(static_cast<int>(k))) delta = std::min(delta, geometry_.L - delta);
        d += delta;
    }
    return d;
}

int CellComplex::dual_graph_distance(std::size_t c1, std::size_t c2) const {
    if (c1 >= cubes_.size() || c2 >= cubes_.size())
        throw std::out_of_range("dual_graph_distance: cube id out of range");
    const auto& a = cubes_[c1].base;
    const auto& b = cubes_[c2].base;
    int d = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        int delta = std::abs(a[k] - b[k]);
        if (geometry_.periodic(static_cast<int>(k))) delta = std::min(delta, geometry_.L - delta);
        d += delta;
    }
    return d;
}

void CellComplex::dump(std::ostream& out) const {
    auto cells = [&](const char* kind, const std::vector<Cell>& list) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& c = list[i];
            out << "CELL " << kind << ' ' << i << ' ' << coord_string(c.base) << ' ' << c.axis << ' '
                << roles_to_string(c.roles) << (c.qubit ? " qubit" : "") << '\n';
        }
    };
    auto bnd = [&](const char* kind, const std::vector<std::vector<std::size_t>>& table) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            out << "BND " << kind << ' ' << i << ':';
            for (std::size_t k = 0; k < table[i].size(); ++k) out << (k ? "," : " ") << table[i][k];
            out << '\n';
        }
    };
    out << "GEOMETRY " << to_string(geometry_.kind) << " L=" << geometry_.L
        << (geometry_.mirrored ? " mirrored" : "") << '\n';
    cells("vertex", vertices_);
    cells("edge", edges_);
    cells("face", faces_);
    cells("cube", cubes_);
    bnd("edge", edge_bnd_);
    bnd("face", face_bnd_);
    bnd("cube", cube_bnd_);
}

}  // namespace itc
