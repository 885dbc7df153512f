#include "itc/code.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace itc {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

GeneratorSet collect(std::size_t n, std::size_t count, const std::string& label,
                     const std::function<std::optional<PauliOperator>(std::size_t)>& make) {
    GeneratorSet out(n);
    for (std::size_t i = 0; i < count; ++i)
        if (auto op = make(i)) out.add(std::move(*op), label);
    return out;
}

std::uint8_t intertwined_or_trivial() { return kTrivial | kIntertwined; }

}  // namespace

std::string to_string(Presentation p) {
    switch (p) {
        case Presentation::Toric: return "toric";
        case Presentation::KVC: return "kvc";
        case Presentation::Overcomplete: return "overcomplete";
    }
    return "?";
}

Presentation presentation_from_string(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "toric") return Presentation::Toric;
    if (s == "kvc") return Presentation::KVC;
    if (s == "overcomplete") return Presentation::Overcomplete;
    throw std::invalid_argument("unknown presentation '" + name + "'");
}

std::string to_string(Phase p) {
    switch (p) {
        case Phase::Para: return "Para";
        case Phase::TCE: return "TCE";
        case Phase::TCF: return "TCF";
        case Phase::TwoTC: return "TwoTC";
        case Phase::RBH: return "RBH";
    }
    return "?";
}

SubsystemCode::SubsystemCode(std::shared_ptr<const CellComplex> complex, Presentation presentation)
    : complex_(std::move(complex)), presentation_(presentation) {
    const auto& cx = *complex_;
    edge_qubit_.assign(cx.edges().size(), npos);
    face_qubit_.assign(cx.faces().size(), npos);
    for (std::size_t e = 0; e < cx.edges().size(); ++e)
        if (cx.edges()[e].qubit) {
            edge_qubit_[e] = qubit_cells_.size();
            qubit_cells_.emplace_back(false, e);
        }
    num_edge_qubits_ = qubit_cells_.size();
    for (std::size_t f = 0; f < cx.faces().size(); ++f)
        if (cx.faces()[f].qubit) {
            face_qubit_[f] = qubit_cells_.size();
            qubit_cells_.emplace_back(true, f);
        }
    num_qubits_ = qubit_cells_.size();

    checks_ = GeneratorSet(num_qubits_);
    checks_.append(family_Xe());
    checks_.append(family_Zf());
    switch (presentation_) {
        case Presentation::Toric:
            checks_.append(family_Be());
            checks_.append(family_Bf());
            checks_.append(family_Ke_boundary());
            break;
        case Presentation::KVC:
            checks_.append(family_Ke());
            checks_.append(family_Kf());
            break;
        case Presentation::Overcomplete:
            checks_.append(family_Be());
            checks_.append(family_Bf());
            checks_.append(family_Ke());
            checks_.append(family_Kf());
            break;
    }

    stabilizers_ = GeneratorSet(num_qubits_);
    stabilizers_.append(family_Av());
    stabilizers_.append(family_Ac());
    stabilizers_.append(nonlocal_stabilizers());

    redundancy_ = GeneratorSet(num_qubits_);
    for (std::size_t v = 0; v < cx.vertices().size(); ++v) {
        if (auto op = A2d(v)) redundancy_.add(std::move(*op), "Av2d");
        if (auto op = A2d_eff(v)) redundancy_.add(std::move(*op), "Av2deff");
    }
}

std::optional<std::size_t> SubsystemCode::edge_qubit(std::size_t e) const {
    if (e >= edge_qubit_.size() || edge_qubit_[e] == npos) return std::nullopt;
    return edge_qubit_[e];
}

std::optional<std::size_t> SubsystemCode::face_qubit(std::size_t f) const {
    if (f >= face_qubit_.size() || face_qubit_[f] == npos) return std::nullopt;
    return face_qubit_[f];
}

PauliOperator SubsystemCode::x_on_qubit(std::size_t q) const {
    PauliOperator p(num_qubits_);
    p.x.set(q);
    return p;
}

PauliOperator SubsystemCode::z_on_qubit(std::size_t q) const {
    PauliOperator p(num_qubits_);
    p.z.set(q);
    return p;
}

bool SubsystemCode::edge_in_plane(std::size_t e, std::uint8_t role) const {
    return complex_->edges()[e].roles & role;
}

bool SubsystemCode::face_in_plane(std::size_t f, std::uint8_t role) const {
    return complex_->faces()[f].roles & role;
}

std::optional<PauliOperator> SubsystemCode::X_e(std::size_t e) const {
    auto q = edge_qubit(e);
    if (!q || edge_in_plane(e, kIntertwined)) return std::nullopt;
    return x_on_qubit(*q);
}

std::optional<PauliOperator> SubsystemCode::Z_e(std::size_t e) const {
    auto q = edge_qubit(e);
    if (!q) return std::nullopt;
    return z_on_qubit(*q);
}

std::optional<PauliOperator> SubsystemCode::X_f(std::size_t f) const {
    auto q = face_qubit(f);
    if (!q) return std::nullopt;
    return x_on_qubit(*q);
}

std::optional<PauliOperator> SubsystemCode::Z_f(std::size_t f) const {
    auto q = face_qubit(f);
    if (!q) return std::nullopt;
    return z_on_qubit(*q);
}

std::optional<PauliOperator> SubsystemCode::B_e(std::size_t e) const {
    if (!edge_qubit(e) || edge_in_plane(e, intertwined_or_trivial())) return std::nullopt;
    PauliOperator p(num_qubits_);
    for (auto f : complex_->edge_coboundary(e))
        if (auto q = face_qubit(f)) p.x.flip(*q);
    if (p.is_identity()) return std::nullopt;
    return p;
}

std::optional<PauliOperator> SubsystemCode::B_f(std::size_t f) const {
    PauliOperator p(num_qubits_);
    for (auto e : complex_->face_boundary(f))
        if (auto q = edge_qubit(e)) p.z.flip(*q);
    if (p.is_identity()) return std::nullopt;
    return p;
}

std::optional<std::size_t> SubsystemCode::inner_face(std::size_t e) const {
    if (!edge_qubit(e) || !edge_in_plane(e, kIntertwined)) return std::nullopt;
    std::optional<std::size_t> found;
    for (auto f : complex_->edge_coboundary(e)) {
        if (!face_qubit(f)) continue;
        if (found) throw std::logic_error("intertwined edge with more than one qubit face");
        found = f;
    }
    return found;
}

std::optional<PauliOperator> SubsystemCode::K_e(std::size_t e) const {
    if (auto f = inner_face(e)) {
        PauliOperator p = x_on_qubit(*edge_qubit(e));
        p.x.set(*face_qubit(*f));
        return p;
    }
    auto x = X_e(e);
    auto b = B_e(e);
    if (!x || !b) return std::nullopt;
    return *x * *b;
}

std::optional<PauliOperator> SubsystemCode::K_f(std::size_t f) const {
    auto b = B_f(f);
    if (auto z = Z_f(f)) return b ? *z * *b : *z;
    return b;
}

std::optional<PauliOperator> SubsystemCode::A_v(std::size_t v) const {
    if (complex_->vertices()[v].roles & kECondensed) return std::nullopt;
    PauliOperator p(num_qubits_);
    for (auto e : complex_->vertex_coboundary(v))
        if (auto q = edge_qubit(e)) p.x.flip(*q);
    if (p.is_identity()) return std::nullopt;
    return p;
}

std::optional<PauliOperator> SubsystemCode::A_c(std::size_t c) const {
    PauliOperator p(num_qubits_);
    for (auto f : complex_->cube_boundary(c)) {
        if (auto q = face_qubit(f)) p.z.flip(*q);
        if (face_in_plane(f, kIntertwined))
            if (auto b = B_f(f)) p *= *b;
    }
    if (p.is_identity()) return std::nullopt;
    return p;
}

std::optional<std::size_t> SubsystemCode::bulk_edge(std::size_t v) const {
    const auto& cell = complex_->vertices()[v];
    if (!(cell.roles & intertwined_or_trivial())) return std::nullopt;
    Coord base = cell.base;
    if (base[2] != 0) base[2] -= 1;
    return complex_->edge_at(base, 2);
}

std::optional<PauliOperator> SubsystemCode::A2d(std::size_t v) const {
    if (!(complex_->vertices()[v].roles & kIntertwined)) return std::nullopt;
    auto a = A_v(v);
    auto e = bulk_edge(v);
    if (!a || !e) return std::nullopt;
    auto x = X_e(*e);
    if (!x) return std::nullopt;
    return *a * *x;
}

std::optional<PauliOperator> SubsystemCode::A2d_eff(std::size_t v) const {
    if (!(complex_->vertices()[v].roles & kTrivial)) return std::nullopt;
    auto a = A_v(v);
    auto e = bulk_edge(v);
    if (!a || !e) return std::nullopt;
    auto k = K_e(*e);
    if (!k) return std::nullopt;
    return *a * *k;
}

GeneratorSet SubsystemCode::family_Xe() const {
    return collect(num_qubits_, complex_->edges().size(), "Xe", [&](std::size_t e) { return X_e(e); });
}
GeneratorSet SubsystemCode::family_Zf() const {
    return collect(num_qubits_, complex_->faces().size(), "Zf", [&](std::size_t f) { return Z_f(f); });
}
GeneratorSet SubsystemCode::family_Be() const {
    return collect(num_qubits_, complex_->edges().size(), "Be", [&](std::size_t e) { return B_e(e); });
}
GeneratorSet SubsystemCode::family_Bf() const {
    return collect(num_qubits_, complex_->faces().size(), "Bf", [&](std::size_t f) { return B_f(f); });
}
GeneratorSet SubsystemCode::family_Ke() const {
    return collect(num_qubits_, complex_->edges().size(), "Ke", [&](std::size_t e) { return K_e(e); });
}
GeneratorSet SubsystemCode::family_Ke_boundary() const {
    return collect(num_qubits_, complex_->edges().size(), "Ke", [&](std::size_t e) -> std::optional<PauliOperator> {
        if (!inner_face(e)) return std::nullopt;
        return K_e(e);
    });
}
GeneratorSet SubsystemCode::family_Kf() const {
    return collect(num_qubits_, complex_->faces().size(), "Kf", [&](std::size_t f) { return K_f(f); });
}
GeneratorSet SubsystemCode::family_Av() const {
    return collect(num_qubits_, complex_->vertices().size(), "Av", [&](std::size_t v) { return A_v(v); });
}
GeneratorSet SubsystemCode::family_Ac() const {
    return collect(num_qubits_, complex_->cubes().size(), "Ac", [&](std::size_t c) { return A_c(c); });
}

GeneratorSet SubsystemCode::nonlocal_stabilizers() const {
    GeneratorSet out(num_qubits_);
    if (complex_->geometry().kind != GeometryKind::Torus3) return out;
    // X on the axis-a edges crossing the plane a = 1/2, and Z on the faces of
    // the plane a = 0.
    for (int a = 0; a < 3; ++a) {
        PauliOperator p(num_qubits_);
        for (std::size_t e = 0; e < complex_->edges().size(); ++e) {
            const auto& c = complex_->edges()[e];
            if (c.axis == a && c.base[static_cast<std::size_t>(a)] == 0) p.x.flip(*edge_qubit(e));
        }
        out.add(std::move(p), "nonlocal");
    }
    for (int a = 0; a < 3; ++a) {
        PauliOperator p(num_qubits_);
        for (std::size_t f = 0; f < complex_->faces().size(); ++f) {
            const auto& c = complex_->faces()[f];
            if (c.axis == a && c.base[static_cast<std::size_t>(a)] == 0) p.z.flip(*face_qubit(f));
        }
        out.add(std::move(p), "nonlocal");
    }
    return out;
}

GeneratorSet SubsystemCode::checks_and_stabilizers() const {
    GeneratorSet out = checks_;
    out.append(stabilizers_);
    return out;
}

std::vector<CxPair> SubsystemCode::ucx_pairs() const {
    std::vector<CxPair> pairs;
    for (std::size_t f = 0; f < complex_->faces().size(); ++f) {
        auto qf = face_qubit(f);
        if (!qf) continue;
        for (auto e : complex_->face_boundary(f))
            if (auto qe = edge_qubit(e)) pairs.emplace_back(*qe, *qf);
    }
    return pairs;
}

void SubsystemCode::build_logicals() {
    const auto kind = complex_->geometry().kind;
    if (kind == GeometryKind::Torus3) throw std::invalid_argument("build_logicals: the 3-torus encodes no logical qubits");
    const auto& cx = *complex_;
    const std::size_t n = num_qubits_;

    // Bare pair for "membrane axis" m (the X̄ edges point along m, the Z̄
    // faces are normal to o, the other periodic axis).
    auto bare_pair = [&](int m, int o) {
        LogicalPair pair{PauliOperator(n), PauliOperator(n)};
        for (std::size_t e = 0; e < cx.edges().size(); ++e) {
            const auto& c = cx.edges()[e];
            if (c.axis == m && c.base[static_cast<std::size_t>(m)] == 0) pair.x.x.flip(*edge_qubit(e));
            if (c.axis == m && c.base[static_cast<std::size_t>(o)] == 0 && (c.roles & kIntertwined))
                pair.z.z.flip(*edge_qubit(e));
        }
        for (std::size_t f = 0; f < cx.faces().size(); ++f) {
            const auto& c = cx.faces()[f];
            if (c.axis == o && c.base[static_cast<std::size_t>(o)] == 0) pair.z.z.flip(*face_qubit(f));
        }
        return pair;
    };
    // Dressed pair: Z̄' is the boundary string of Z̄, X̄' the dual string of
    // faces normal to o at m = 0 and z = 0.
    auto dressed_pair = [&](int m, int o) {
        LogicalPair pair{PauliOperator(n), PauliOperator(n)};
        for (std::size_t e = 0; e < cx.edges().size(); ++e) {
            const auto& c = cx.edges()[e];
            if (c.axis == m && c.base[static_cast<std::size_t>(o)] == 0 && (c.roles & kIntertwined))
                pair.z.z.flip(*edge_qubit(e));
        }
        for (std::size_t f = 0; f < cx.faces().size(); ++f) {
            const auto& c = cx.faces()[f];
            if (c.axis == o && c.base[static_cast<std::size_t>(m)] == 0 && c.base[2] == 0)
                pair.x.x.flip(*face_qubit(f));
        }
        return pair;
    };

    bare_.clear();
    dressed_.clear();
    bare_.push_back(bare_pair(1, 0));
    dressed_.push_back(dressed_pair(1, 0));
    if (kind == GeometryKind::SlabT2xI) {
        bare_.push_back(bare_pair(0, 1));
        dressed_.push_back(dressed_pair(0, 1));
    }

    // Guard the commutation table.
    const std::size_t k = bare_.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const bool expect = (i == j);
            if (symplectic_product(bare_[i].x, bare_[j].z) != expect ||
                symplectic_product(bare_[i].x, dressed_[j].z) != expect ||
                symplectic_product(dressed_[i].x, bare_[j].z) != expect ||
                symplectic_product(dressed_[i].x, dressed_[j].z))
                throw std::logic_error("build_logicals: logical commutation table violated");
            if (i != j && (symplectic_product(bare_[i].x, bare_[j].x) || symplectic_product(bare_[i].z, bare_[j].z)))
                throw std::logic_error("build_logicals: logical commutation table violated");
        }
    for (const auto& pair : bare_)
        for (const auto& row : checks_.rows)
            if (symplectic_product(pair.x, row) || symplectic_product(pair.z, row))
                throw std::logic_error("build_logicals: bare logical anticommutes with a check");
    for (const auto& pair : dressed_)
        for (const auto& row : stabilizers_.rows)
            if (symplectic_product(pair.x, row) || symplectic_product(pair.z, row))
                throw std::logic_error("build_logicals: dressed logical anticommutes with a stabilizer");
}

SubsystemCode build_itc(const Geometry& geometry, Presentation presentation) {
    return SubsystemCode(std::make_shared<const CellComplex>(geometry), presentation);
}

std::size_t count_logical_qubits(const SubsystemCode& code) {
    const GeneratorSet all = code.checks_and_stabilizers();
    const std::size_t g = rank(all);
    const std::size_t s = centralizer_intersection_rank(all);
    const std::size_t twice = 2 * code.num_qubits();
    if ((g + s) % 2 || g + s > twice) throw std::logic_error("count_logical_qubits: inconsistent ranks");
    return code.num_qubits() - (g + s) / 2;
}

GeneratorSet apply_ucx(const SubsystemCode& code, const GeneratorSet& set) {
    const auto pairs = code.ucx_pairs();
    GeneratorSet out(set.n);
    for (std::size_t i = 0; i < set.size(); ++i) out.add(conjugate_by_cx(set.rows[i], pairs), set.labels[i]);
    return out;
}

GeneratorSet apply_ucx(const SubsystemCode& code) { return apply_ucx(code, code.checks()); }

GeneratorSet gauge_fix(const SubsystemCode& code, Phase phase) {
    const auto& cx = code.complex();
    const std::size_t n = code.num_qubits();
    GeneratorSet terms(n);
    auto faces_in = [&](std::uint8_t role, const char* label) {
        for (std::size_t f = 0; f < cx.faces().size(); ++f)
            if (code.face_in_plane(f, role))
                if (auto b = code.B_f(f)) terms.add(std::move(*b), label);
    };

    switch (phase) {
        case Phase::Para:
            terms.append(code.family_Xe());
            terms.append(code.family_Zf());
            for (std::size_t v = 0; v < cx.vertices().size(); ++v)
                if (auto a = code.A2d(v)) terms.add(std::move(*a), "Av2d");
            faces_in(kIntertwined, "Bf2d");
            break;
        case Phase::TCE:
            terms.append(code.family_Av());
            terms.append(code.family_Zf());
            terms.append(code.family_Bf());
            break;
        case Phase::TCF:
            terms.append(code.family_Ac());
            terms.append(code.family_Xe());
            terms.append(code.family_Be());
            terms.append(code.family_Ke_boundary());
            break;
        case Phase::TwoTC:
            terms.append(code.family_Av());
            terms.append(code.family_Ac());
            terms.append(code.family_Be());
            terms.append(code.family_Bf());
            break;
        case Phase::RBH:
            terms.append(code.family_Ke());
            for (std::size_t f = 0; f < cx.faces().size(); ++f)
                if (code.face_qubit(f))
                    if (auto k = code.K_f(f)) terms.add(std::move(*k), "Kf");
            for (std::size_t v = 0; v < cx.vertices().size(); ++v)
                if (auto a = code.A2d_eff(v)) terms.add(std::move(*a), "Av2deff");
            faces_in(kTrivial, "Bf2d");
            break;
    }
    terms.append(code.stabilizers());

    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (symplectic_product(terms.rows[i], terms.rows[j]))
                throw std::logic_error("gauge_fix(" + to_string(phase) + "): terms " + terms.labels[i] + " and " +
                                       terms.labels[j] + " anticommute");
    const PauliSpan span(code.checks_and_stabilizers());
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!span.contains(terms.rows[i]))
            throw std::logic_error("gauge_fix(" + to_string(phase) + "): term " + terms.labels[i] +
                                   " is not in the check group");
    for (const auto& pair : code.bare_logicals())
        for (const auto& row : terms.rows)
            if (symplectic_product(pair.x, row) || symplectic_product(pair.z, row))
                throw std::logic_error("gauge_fix(" + to_string(phase) + "): bare logical anticommutes with a term");
    return terms;
}

PauliOperator rbh_boundary_logical(const SubsystemCode& code) {
    const auto& cx = code.complex();
    PauliOperator p(code.num_qubits());
    for (std::size_t e = 0; e < cx.edges().size(); ++e) {
        const auto& c = cx.edges()[e];
        if (c.axis == 1 && c.base[1] == 0 && (c.roles & kTrivial)) p.x.flip(*code.edge_qubit(e));
    }
    for (std::size_t f = 0; f < cx.faces().size(); ++f) {
        const auto& c = cx.faces()[f];
        if (c.axis != 0 || c.base[1] != 0 || !code.face_qubit(f)) continue;
        // Faces spanning between the trivial layer and its neighbour.
        const bool touches_trivial = std::any_of(cx.face_boundary(f).begin(), cx.face_boundary(f).end(),
                                                 [&](std::size_t e) { return code.edge_in_plane(e, kTrivial); });
        if (touches_trivial) p.x.flip(*code.face_qubit(f));
    }
    return p;
}

GeneratorSet rbh_membrane_terms(const SubsystemCode& code) {
    const auto& cx = code.complex();
    GeneratorSet out(code.num_qubits());
    for (std::size_t e = 0; e < cx.edges().size(); ++e) {
        const auto& c = cx.edges()[e];
        if (c.axis == 1 && c.base[1] == 0 && !(c.roles & kTrivial))
            if (auto k = code.K_e(e)) out.add(std::move(*k), "Ke");
    }
    return out;
}

std::string summary_json(const SubsystemCode& code) {
    nlohmann::ordered_json j;
    const auto& g = code.complex().geometry();
    j["geometry"] = to_string(g.kind);
    j["L"] = g.L;
    j["presentation"] = to_string(code.presentation());
    j["qubits"] = code.num_qubits();
    j["edge_qubits"] = code.num_edge_qubits();
    j["face_qubits"] = code.num_qubits() - code.num_edge_qubits();

    nlohmann::ordered_json families, ranks;
    const std::vector<std::pair<std::string, GeneratorSet>> list = {
        {"Xe", code.family_Xe()}, {"Zf", code.family_Zf()}, {"Be", code.family_Be()},
        {"Bf", code.family_Bf()}, {"Ke", code.family_Ke()}, {"Kf", code.family_Kf()},
        {"Av", code.family_Av()}, {"Ac", code.family_Ac()}, {"nonlocal", code.nonlocal_stabilizers()},
    };
    for (const auto& [name, set] : list) {
        families[name] = set.size();
        ranks[name] = rank(set);
    }
    j["family_sizes"] = families;
    j["family_ranks"] = ranks;
    j["checks"] = code.checks().size();
    j["stabilizers"] = code.stabilizers().size();
    j["rank_checks"] = rank(code.checks());
    j["rank_stabilizers"] = rank(code.stabilizers());
    j["K"] = count_logical_qubits(code);
    return j.dump(2);
}

}  // namespace itc
