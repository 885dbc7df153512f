#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <tuple>
#include <optional>
#include <utility>
#include <vector>

namespace itc {

/// Complete weighted graph on n nodes; node i may additionally be matched
/// to a virtual boundary at cost boundary[i].
struct MatchingProblem {
    std::size_t n = 0;
    std::vector<std::int64_t> weights;  // n*n, symmetric
    std::vector<std::optional<std::int64_t>> boundary;

    MatchingProblem() = default;
    explicit MatchingProblem(std::size_t nodes) : n(nodes), weights(nodes * nodes, 0), boundary(nodes) {}

    std::int64_t weight(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
    void set_weight(std::size_t i, std::size_t j, std::int64_t w) {
        weights[i * n + j] = w;
        weights[j * n + i] = w;
    }
    bool has_boundary() const;
    void validate() const;
};

struct Pairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // i < j, sorted
    std::vector<std::size_t> to_boundary;                    // sorted
    std::int64_t total = 0;
};

/// Exact minimum-weight perfect matching (blossom algorithm).
Pairing solve(const MatchingProblem& problem);
/// Exhaustive enumeration; at most 10 nodes.
Pairing brute_force(const MatchingProblem& problem);
/// Cheapest-first greedy pairing. Not optimal; profiling aid only.
Pairing greedy(const MatchingProblem& problem);

/// Maximum-weight matching on a general graph. With max_cardinality the
/// result has maximum size and, among those, maximum weight. Returns
/// mate[v] (or -1).
std::vector<long> max_weight_matching(std::size_t num_vertices,
                                      const std::vector<std::tuple<long, long, std::int64_t>>& edges,
                                      bool max_cardinality);

/// "NODE i" / "W i j w" / "B i w" lines.
void dump(std::ostream& out, const MatchingProblem& problem);

}  // namespace itc
