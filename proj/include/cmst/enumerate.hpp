#pragma once

// Exhaustive small-instance oracles: visit all n^{n-2} labelled spanning trees
// of K_n by decoding every Pruefer sequence, and solve the budget-constrained
// problem exactly by filtering that stream.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "cmst/instance.hpp"

namespace cmst {

inline constexpr int max_enumeration_vertices = 9;

// n^{n-2} for 2 <= n <= 9.
std::uint64_t spanning_tree_count(int n);

namespace detail {

// Linear Pruefer decode; out must hold n-1 edges.
inline void decode_pruefer(const int* code, int n, Edge* out) {
    int deg[max_enumeration_vertices];
    for (int v = 0; v < n; ++v) deg[v] = 1;
    for (int i = 0; i < n - 2; ++i) ++deg[code[i]];

    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        const int u = code[i];
        out[i] = ordered_edge(leaf, u);
        if (--deg[u] == 1 && u < ptr) {
            leaf = u;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    out[n - 2] = ordered_edge(leaf, n - 1);
}

} // namespace detail

// Calls visit(std::span<const Edge>) once per labelled spanning tree of K_n.
// The buffer is reused between calls; copy it if you keep it.
template <class Visitor>
void for_each_spanning_tree(int n, Visitor&& visit) {
    if (n < 2 || n > max_enumeration_vertices)
        throw std::invalid_argument("for_each_spanning_tree: need 2 <= n <= 9");
    Edge edges[max_enumeration_vertices - 1];
    if (n == 2) {
        edges[0] = {0, 1};
        visit(std::span<const Edge>(edges, 1));
        return;
    }
    int code[max_enumeration_vertices - 2] = {0};
    const int len = n - 2;
    for (;;) {
        detail::decode_pruefer(code, n, edges);
        visit(std::span<const Edge>(edges, static_cast<std::size_t>(n - 1)));
        int pos = len - 1;
        while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
        if (pos < 0) break;
        ++code[pos];
    }
}

// Ground-truth W*: the tree minimizing total weight among trees with total
// cost <= c0, or nullopt when no spanning tree fits the budget. n <= 9 only.
std::optional<SpanningTree> exact_constrained_mst(const Instance& inst, double c0);

} // namespace cmst
