#include "itc/decoder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace itc {
namespace {

constexpr std::int64_t kFar = 1'000'000;

}  // namespace

DecodingGraph::DecodingGraph(const SparseMatrix& matrix) : n_(matrix.rows()) {
    const auto cols = matrix.columns();
    std::map<std::vector<std::uint32_t>, bool> seen;
    adj_.assign(n_, {});
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& rows = cols[c];
        if (rows.empty()) continue;
        if (rows.size() > 2) throw std::logic_error("DecodingGraph: column touches more than two nodes");
        if (!seen.emplace(rows, true).second) continue;
        const auto id = static_cast<std::uint32_t>(edge_col_.size());
        edge_col_.push_back(static_cast<std::uint32_t>(c));
        edge_ends_.push_back({rows[0], rows.size() == 2 ? static_cast<std::int64_t>(rows[1]) : -1});
        adj_[rows[0]].push_back(id);
        if (rows.size() == 2) adj_[rows[1]].push_back(id);
        else has_sink_ = true;
    }

    dist_.assign(n_ * n_, kUnreachable);
    parent_edge_.assign(n_ * n_, -1);
    sink_dist_.assign(n_, kUnreachable);
    sink_via_.assign(n_, -1);
    sink_edge_.assign(n_, -1);
    for (std::size_t u = 0; u < n_; ++u)
        for (auto id : adj_[u])
            if (edge_ends_[id][1] < 0 && sink_edge_[u] < 0) sink_edge_[u] = static_cast<std::int32_t>(id);

#pragma omp parallel for schedule(dynamic, 8) if (n_ > 256)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n_); ++si) {
        const auto s = static_cast<std::size_t>(si);
        std::int32_t* dist = &dist_[s * n_];
        std::int32_t* parent = &parent_edge_[s * n_];
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        std::int32_t best = kUnreachable, via = -1;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            if (sink_edge_[u] >= 0 && (best == kUnreachable || dist[u] + 1 < best)) {
                best = dist[u] + 1;
                via = static_cast<std::int32_t>(u);
            }
            for (auto id : adj_[u]) {
                const auto& ends = edge_ends_[id];
                if (ends[1] < 0) continue;
                const auto w = static_cast<std::size_t>(ends[0] == static_cast<std::int64_t>(u) ? ends[1] : ends[0]);
                if (dist[w] != kUnreachable) continue;
                dist[w] = dist[u] + 1;
                parent[w] = static_cast<std::int32_t>(id);
                queue.push_back(w);
            }
        }
        sink_dist_[s] = best;
        sink_via_[s] = via;
    }
}

std::vector<std::uint32_t> DecodingGraph::path(std::size_t u, std::size_t v) const {
    if (distance(u, v) == kUnreachable) throw std::logic_error("DecodingGraph::path: nodes are disconnected");
    std::vector<std::uint32_t> out;
    const std::int32_t* parent = &parent_edge_[u * n_];
    std::size_t x = v;
    while (x != u) {
        const auto id = static_cast<std::size_t>(parent[x]);
        out.push_back(edge_col_[id]);
        const auto& ends = edge_ends_[id];
        x = static_cast<std::size_t>(ends[0] == static_cast<std::int64_t>(x) ? ends[1] : ends[0]);
    }
    return out;
}

std::vector<std::uint32_t> DecodingGraph::path_to_sink(std::size_t u) const {
    if (sink_dist_[u] == kUnreachable) throw std::logic_error("DecodingGraph::path_to_sink: no sink reachable");
    const auto via = static_cast<std::size_t>(sink_via_[u]);
    auto out = path(u, via);
    out.push_back(edge_col_[static_cast<std::size_t>(sink_edge_[via])]);
    return out;
}

Decoder::Decoder(const SyndromeMaps& maps, MatcherKind matcher)
    : maps_(&maps), matcher_(matcher), relation_graph_(maps.delta_R), stabilizer_graph_(maps.boundary_S) {}

BitVector Decoder::match(const DecodingGraph& graph, const BitVector& defects, std::size_t width) const {
    BitVector flips(width);
    const auto nodes = defects.ones();
    if (nodes.empty()) return flips;
    MatchingProblem problem(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const auto d = graph.distance(nodes[i], nodes[j]);
            problem.set_weight(i, j, d == DecodingGraph::kUnreachable ? kFar : d);
        }
        const auto b = graph.sink_distance(nodes[i]);
        if (b != DecodingGraph::kUnreachable) problem.boundary[i] = b;
    }
    const Pairing pairing = matcher_ == MatcherKind::Exact ? solve(problem) : greedy(problem);
    for (auto [i, j] : pairing.pairs)
        for (auto c : graph.path(nodes[i], nodes[j])) flips.flip(c);
    for (auto i : pairing.to_boundary)
        for (auto c : graph.path_to_sink(nodes[i])) flips.flip(c);
    return flips;
}

DecodeResult Decoder::decode(const BitVector& zeta, std::size_t round) const {
    const auto& m = *maps_;
    if (zeta.size() != m.dim_M()) throw std::invalid_argument("decode: outcome has the wrong dimension");
    DecodeResult r;
    r.round = round;

    // Round 1: explain the relation syndrome by measurement errors.
    const BitVector omega = m.delta_R.apply(zeta);
    r.mu_hat = match(relation_graph_, omega, m.dim_M());
    r.repaired = zeta ^ r.mu_hat;
    if (m.delta_R.apply(r.repaired).any()) throw std::logic_error("decode: relation syndrome not repaired");

    // Round 2: explain the repaired stabilizer syndrome by qubit errors.
    r.sigma = m.delta_S.apply(r.repaired);
    r.eps_hat = match(stabilizer_graph_, r.sigma, m.dim_Q());
    r.residual_syndrome = r.sigma ^ m.boundary_S.apply(r.eps_hat);
    if (r.residual_syndrome.any()) throw std::logic_error("decode: stabilizer syndrome not explained");
    return r;
}

DecodeResult decode(const SyndromeMaps& maps, const BitVector& zeta) { return Decoder(maps).decode(zeta); }

std::vector<bool> logical_failures(const SubsystemCode& code, Sector sector, const BitVector& residual) {
    if (residual.size() != code.num_qubits()) throw std::invalid_argument("logical_failures: wrong residual size");
    std::vector<bool> out;
    for (const auto& pair : code.bare_logicals())
        out.push_back(sector == Sector::Z ? pair.x.x.dot(residual) : pair.z.z.dot(residual));
    return out;
}

bool is_logical_failure(const SubsystemCode& code, Sector sector, const BitVector& residual) {
    const auto v = logical_failures(code, sector, residual);
    return std::any_of(v.begin(), v.end(), [](bool b) { return b; });
}

std::string to_json(const DecodeResult& result, const SyndromeMaps& maps, const SubsystemCode& code) {
    nlohmann::ordered_json j;
    j["round"] = result.round;
    j["sector"] = to_string(maps.sector);
    auto& mu = j["mu_hat"] = nlohmann::ordered_json::array();
    for (auto c : result.mu_hat.ones())
        mu.push_back({{"coord", c}, {"label", maps.measurements[c].label}, {"cell", maps.measurements[c].cell}});
    auto& eps = j["eps_hat"] = nlohmann::ordered_json::array();
    for (auto q : result.eps_hat.ones()) {
        const auto [is_face, cell] = code.qubit_cell(q);
        eps.push_back({{"qubit", q}, {"kind", is_face ? "face" : "edge"}, {"cell", cell}});
    }
    j["sigma"] = result.sigma.ones();
    j["residual_syndrome"] = result.residual_syndrome.ones();
    return j.dump();
}

}  // namespace itc
