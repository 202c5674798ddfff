#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cmst {

// Edge of the complete graph; endpoints are kept ordered u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge ordered_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Row-major upper-triangle index of edge (i,j), i < j.
inline std::size_t edge_index(int i, int j, int n) noexcept {
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2
         + static_cast<std::size_t>(j - i - 1);
}

// Complete-graph instance with weights and costs drawn from U^gamma.
// Immutable after creation; safe to read from many threads.
struct Instance {
    int n = 0;
    double gamma = 1.0;
    std::uint64_t seed = 0;
    std::vector<double> weights;  // size n(n-1)/2, row-major upper triangle
    std::vector<double> costs;

    std::size_t edge_count() const { return weights.size(); }
    double weight(int i, int j) const {
        return weights[i < j ? edge_index(i, j, n) : edge_index(j, i, n)];
    }
    double cost(int i, int j) const {
        return costs[i < j ? edge_index(i, j, n) : edge_index(j, i, n)];
    }
};

struct SpanningTree {
    std::vector<Edge> edges;  // sorted by (u,v)
    double total_weight = 0.0;
    double total_cost = 0.0;
};

// Draws every edge value of a fresh instance. The random stream is keyed by
// (seed, entry counter) with the m = n(n-1)/2 weight entries (row-major upper
// triangle) consumed before the m cost entries; each entry is u^gamma for an
// independent uniform (0,1) draw u. Identical (n, gamma, seed) reproduce the
// matrices bit-for-bit regardless of thread count.
Instance sample_instance(int n, double gamma, std::uint64_t seed);

// Serial reference for the generator above; must agree bit-for-bit.
Instance sample_instance_serial(int n, double gamma, std::uint64_t seed);

// Sorts the edges and fills in cached totals.
SpanningTree make_tree(const Instance& inst, std::vector<Edge> edges);

// Cached totals agree with recomputed sums to within tol (relative to size).
bool tree_totals_consistent(const SpanningTree& tree, const Instance& inst, double tol = 1e-12);

// JSON round trip: {n, gamma, seed, weights, costs}; matrices as row-major
// upper-triangle arrays. Serialization is decimal and bit-exact on reload.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string tree_to_json(const SpanningTree& tree);

} // namespace cmst
