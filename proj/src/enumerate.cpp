#include "cmst/enumerate.hpp"

#include <limits>

namespace cmst {

std::uint64_t spanning_tree_count(int n) {
    if (n < 2 || n > max_enumeration_vertices)
        throw std::invalid_argument("spanning_tree_count: need 2 <= n <= 9");
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
    return count;
}

std::optional<SpanningTree> exact_constrained_mst(const Instance& inst, double c0) {
    if (inst.n > max_enumeration_vertices)
        throw std::invalid_argument("exact_constrained_mst: n must be <= 9");
    if (c0 < 0.0) throw std::invalid_argument("exact_constrained_mst: c0 must be >= 0");

    double best_weight = std::numeric_limits<double>::infinity();
    std::vector<Edge> best_edges;
    for_each_spanning_tree(inst.n, [&](std::span<const Edge> edges) {
        double w = 0.0, c = 0.0;
        for (const Edge& e : edges) {
            w += inst.weight(e.u, e.v);
            c += inst.cost(e.u, e.v);
        }
        if (c <= c0 && w < best_weight) {
            best_weight = w;
            best_edges.assign(edges.begin(), edges.end());
        }
    });
    if (best_edges.empty()) return std::nullopt;
    return make_tree(inst, std::move(best_edges));
}

} // namespace cmst
