#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "itc/code.hpp"
#include "itc/matching.hpp"
#include "itc/syndrome.hpp"

namespace itc {

/// Graph whose nodes are the rows of a GF(2) matrix and whose edges are its
/// columns. Columns touching one row connect it to a shared virtual sink;
/// columns with an identical row set are merged (the first one is kept).
/// All-pairs BFS distances and shortest-path trees are precomputed.
class DecodingGraph {
public:
    static constexpr std::int32_t kUnreachable = -1;

    explicit DecodingGraph(const SparseMatrix& matrix);

    std::size_t num_nodes() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edge_col_.size(); }
    bool has_sink() const noexcept { return has_sink_; }

    std::int32_t distance(std::size_t u, std::size_t v) const { return dist_[u * n_ + v]; }
    std::int32_t sink_distance(std::size_t u) const { return sink_dist_[u]; }

    /// Matrix columns along the stored shortest path.
    std::vector<std::uint32_t> path(std::size_t u, std::size_t v) const;
    std::vector<std::uint32_t> path_to_sink(std::size_t u) const;

private:
    std::size_t n_ = 0;
    bool has_sink_ = false;
    std::vector<std::uint32_t> edge_col_;
    std::vector<std::array<std::int64_t, 2>> edge_ends_;  // second = -1 for the sink
    std::vector<std::vector<std::uint32_t>> adj_;         // edge ids per node
    std::vector<std::int32_t> dist_;                      // n*n
    std::vector<std::int32_t> parent_edge_;               // n*n, BFS tree of the source
    std::vector<std::int32_t> sink_dist_, sink_via_;      // via: node adjacent to the sink
    std::vector<std::int32_t> sink_edge_;                 // per node: sink edge id or -1
};

struct DecodeResult {
    BitVector mu_hat;          // C_M
    BitVector eps_hat;         // C_Q
    BitVector repaired;        // zeta + mu_hat
    BitVector sigma;           // dS (zeta + mu_hat)
    BitVector residual_syndrome;  // sigma + dS_Q eps_hat (zero when consistent)
    std::size_t round = 0;
};

enum class MatcherKind { Exact, Greedy };

/// Two-round matching decoder bound to one sector's maps.
class Decoder {
public:
    explicit Decoder(const SyndromeMaps& maps, MatcherKind matcher = MatcherKind::Exact);

    DecodeResult decode(const BitVector& zeta, std::size_t round = 0) const;

    const DecodingGraph& relation_graph() const noexcept { return relation_graph_; }
    const DecodingGraph& stabilizer_graph() const noexcept { return stabilizer_graph_; }
    const SyndromeMaps& maps() const noexcept { return *maps_; }

private:
    /// Matches the defects of `graph` and returns the flipped columns.
    BitVector match(const DecodingGraph& graph, const BitVector& defects, std::size_t width) const;

    const SyndromeMaps* maps_;
    MatcherKind matcher_;
    DecodingGraph relation_graph_, stabilizer_graph_;
};

DecodeResult decode(const SyndromeMaps& maps, const BitVector& zeta);

/// Per logical qubit: the residual (Z-type in the Z sector, X-type in the X
/// sector) anticommutes with the bare X̄_i (resp. Z̄_i).
std::vector<bool> logical_failures(const SubsystemCode& code, Sector sector, const BitVector& residual);
bool is_logical_failure(const SubsystemCode& code, Sector sector, const BitVector& residual);

/// JSON text with the coordinates of mu_hat, eps_hat and the residual syndrome.
std::string to_json(const DecodeResult& result, const SyndromeMaps& maps, const SubsystemCode& code);

}  // namespace itc
