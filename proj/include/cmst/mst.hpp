#pragma once

// Dense-graph minimum spanning tree.
//
// Prim growth with linear scans: O(n^2) value evaluations per call, no heap.
// Candidates are ordered by (value, edge index); the index component makes the
// order strict, so the optimum is unique and the serial and OpenMP kernels
// return the same tree for every thread count. Kernel selection depends only
// on n, never on the runtime thread count.

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmst/instance.hpp"

namespace cmst {

inline constexpr int mst_parallel_threshold = 512;

namespace detail {

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    std::size_t edge = static_cast<std::size_t>(-1);
    int parent = -1;
};

inline bool improves(double value, std::size_t edge, const Candidate& c) noexcept {
    return value < c.value || (value == c.value && edge < c.edge);
}

struct alignas(64) MinSlot {
    double value = std::numeric_limits<double>::infinity();
    std::size_t edge = static_cast<std::size_t>(-1);
    int vertex = -1;
};

} // namespace detail

// Serial reference kernel. `value(i, j)` must be symmetric and finite.
template <class ValueFn>
SpanningTree mst_serial(const Instance& inst, ValueFn&& value) {
    const int n = inst.n;
    std::vector<detail::Candidate> cand(n);
    std::vector<char> done(n, 0);
    done[0] = 1;
    for (int v = 1; v < n; ++v)
        cand[v] = {value(0, v), edge_index(0, v, n), 0};

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int step = 1; step < n; ++step) {
        int pick = -1;
        for (int v = 1; v < n; ++v)
            if (!done[v] && (pick < 0 || detail::improves(cand[v].value, cand[v].edge, cand[pick])))
                pick = v;
        done[pick] = 1;
        edges.push_back(ordered_edge(cand[pick].parent, pick));
        for (int v = 1; v < n; ++v) {
            if (done[v]) continue;
            const Edge e = ordered_edge(pick, v);
            const std::size_t idx = edge_index(e.u, e.v, n);
            const double val = value(e.u, e.v);
            if (detail::improves(val, idx, cand[v])) cand[v] = {val, idx, pick};
        }
    }
    return make_tree(inst, std::move(edges));
}

// OpenMP kernel: the argmin scan and the candidate update are split over
// static per-thread chunks. Thread-local minima are folded under the same
// strict order, so the result matches mst_serial bit-for-bit.
template <class ValueFn>
SpanningTree mst_parallel(const Instance& inst, ValueFn&& value) {
#ifndef _OPENMP
    return mst_serial(inst, std::forward<ValueFn>(value));
#else
    const int n = inst.n;
    std::vector<detail::Candidate> cand(n);
    std::vector<char> done(n, 0);
    done[0] = 1;
    std::vector<detail::MinSlot> slots(omp_get_max_threads());
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int picked = 0;

    #pragma omp parallel
    {
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        const int lo = 1 + static_cast<int>((static_cast<long long>(n - 1) * tid) / nt);
        const int hi = 1 + static_cast<int>((static_cast<long long>(n - 1) * (tid + 1)) / nt);
        for (int v = lo; v < hi; ++v)
            cand[v] = {value(0, v), edge_index(0, v, n), 0};
        #pragma omp barrier

        for (int step = 1; step < n; ++step) {
            detail::MinSlot local;
            for (int v = lo; v < hi; ++v) {
                if (done[v]) continue;
                if (cand[v].value < local.value
                    || (cand[v].value == local.value && cand[v].edge < local.edge))
                    local = {cand[v].value, cand[v].edge, v};
            }
            slots[tid] = local;
            #pragma omp barrier
            #pragma omp single
            {
                int best = -1;
                for (int t = 0; t < nt; ++t) {
                    if (slots[t].vertex < 0) continue;
                    if (best < 0 || slots[t].value < slots[best].value
                        || (slots[t].value == slots[best].value && slots[t].edge < slots[best].edge))
                        best = t;
                }
                picked = slots[best].vertex;
                done[picked] = 1;
                edges.push_back(ordered_edge(cand[picked].parent, picked));
            }  // implicit barrier
            const int p = picked;
            for (int v = lo; v < hi; ++v) {
                if (done[v]) continue;
                const Edge e = ordered_edge(p, v);
                const std::size_t idx = edge_index(e.u, e.v, n);
                const double val = value(e.u, e.v);
                if (detail::improves(val, idx, cand[v])) cand[v] = {val, idx, p};
            }
            #pragma omp barrier
        }
    }
    return make_tree(inst, std::move(edges));
#endif
}

template <class ValueFn>
SpanningTree minimum_spanning_tree(const Instance& inst, ValueFn&& value) {
    if (inst.n >= mst_parallel_threshold)
        return mst_parallel(inst, std::forward<ValueFn>(value));
    return mst_serial(inst, std::forward<ValueFn>(value));
}

inline SpanningTree mst_weights(const Instance& inst) {
    return minimum_spanning_tree(inst, [&](int i, int j) { return inst.weight(i, j); });
}

inline SpanningTree mst_costs(const Instance& inst) {
    return minimum_spanning_tree(inst, [&](int i, int j) { return inst.cost(i, j); });
}

inline SpanningTree mst_lagrangian(const Instance& inst, double lambda) {
    if (lambda == 0.0) return mst_weights(inst);
    return minimum_spanning_tree(
        inst, [&](int i, int j) { return inst.weight(i, j) + lambda * inst.cost(i, j); });
}

} // namespace cmst
