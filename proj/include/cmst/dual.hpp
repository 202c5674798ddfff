#pragma once

// Lagrangian dual of the budget-constrained MST:
//   phi(lambda) = min_T [ W(T) + lambda (C(T) - c0) ],   lambda >= 0,
// a concave piecewise-linear function whose subgradient at lambda is the cost
// slack of the minimizing tree. maximize_dual bisects on the slack sign;
// gr_repair walks between the bracketing trees by single edge exchanges until
// the cost overshoot is at most one tree edge.

#include <cstdint>
#include <optional>
#include <string>

#include "cmst/instance.hpp"

namespace cmst {

struct DualPoint {
    double lambda = 0.0;
    SpanningTree tree;         // minimizes W + lambda C
    double phi = 0.0;          // tree weight + lambda * slack
    double slack = 0.0;        // C(tree) - c0
};

struct DualSolution {
    bool feasible_problem = true;  // false: no spanning tree fits the budget
    double lambda_star = 0.0;
    double phi_star = 0.0;
    std::optional<SpanningTree> tree_minus;  // bracketing tree with slack > 0
    std::optional<SpanningTree> tree_plus;   // bracketing tree with slack <= 0
    std::optional<double> slack_minus;
    std::optional<double> slack_plus;
    std::optional<SpanningTree> repaired;
    double bracket_width = 0.0;
    long mst_calls = 0;
    bool hit_lambda_max = false;   // bracket search ran past the 8n default cap
    bool tightened = false;        // repaired comes from a tightened-budget pass
};

// One dual evaluation (a single MST call).
DualPoint eval_dual(const Instance& inst, double lambda, double c0);

// Maximizes phi over lambda >= 0. If the slack at lambda = 0 is already <= 0
// the unconstrained optimum is returned with lambda* = 0; otherwise the slack
// sign is bisected over [0, 8n] (doubling past 8n with a warning flag) until
// the bracket is narrower than tol. Exact zero slack counts as the feasible
// side. Returns feasible_problem = false when even the minimum-cost tree
// exceeds the budget.
DualSolution maximize_dual(const Instance& inst, double c0, double tol);

// Edge-exchange repair: starting from tree_minus, repeatedly applies the
// single exchange (drop e in T\T+, add f in T+\T across the cut) with the
// smallest increase of W + lambda* C, stopping at the first tree whose cost
// is at most c0 plus its own maximum edge cost. With lambda* = 0 the
// unconstrained optimum is returned unchanged.
SpanningTree gr_repair(const Instance& inst, double c0, const DualSolution& dual);

// max over tree edges of W_e + lambda C_e, and max cost on the tree.
struct EdgeMaxima {
    double z_max = 0.0;
    double c_max = 0.0;
};
EdgeMaxima tree_edge_maxima(const SpanningTree& tree, const Instance& inst, double lambda);

// Full pipeline: maximize_dual + gr_repair, optionally followed by one
// tightened-budget pass with c0_hat = c0 - c_max(first repair) so the final
// tree meets the original budget. lambda_star/phi_star always refer to the
// original budget; the tightened pass only replaces the repaired tree. The
// pass is skipped when the first repair is already within budget.
DualSolution solve_budget(const Instance& inst, double c0, double tol, bool tighten_budget);

// JSON with keys {lambda_star, phi_star, slack_minus, slack_plus,
// repaired: {edges, W, C}, bracket_width, mst_calls}.
std::string dual_solution_to_json(const DualSolution& sol);

} // namespace cmst
