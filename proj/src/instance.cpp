#include "cmst/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmst/rng.hpp"
#include "json.hpp"

namespace cmst {

namespace {

void check_sample_args(int n, double gamma) {
    if (n < 2) throw std::invalid_argument("sample_instance: n must be >= 2");
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("sample_instance: gamma must lie in (0,1]");
}

double power_draw(std::uint64_t seed, std::uint64_t counter, double gamma) {
    const double u = stream_u01(seed, counter);
    return gamma == 1.0 ? u : std::pow(u, gamma);
}

} // namespace

Instance sample_instance(int n, double gamma, std::uint64_t seed) {
    check_sample_args(n, gamma);
    Instance inst;
    inst.n = n;
    inst.gamma = gamma;
    inst.seed = seed;
    const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    inst.weights.resize(m);
    inst.costs.resize(m);
    const long long mm = static_cast<long long>(m);
    #pragma omp parallel for schedule(static) if (mm >= 4096)
    for (long long e = 0; e < mm; ++e) {
        inst.weights[e] = power_draw(seed, static_cast<std::uint64_t>(e), gamma);
        inst.costs[e] = power_draw(seed, m + static_cast<std::uint64_t>(e), gamma);
    }
    return inst;
}

Instance sample_instance_serial(int n, double gamma, std::uint64_t seed) {
    check_sample_args(n, gamma);
    Instance inst;
    inst.n = n;
    inst.gamma = gamma;
    inst.seed = seed;
    const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    inst.weights.resize(m);
    inst.costs.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
        inst.weights[e] = power_draw(seed, e, gamma);
        inst.costs[e] = power_draw(seed, m + e, gamma);
    }
    return inst;
}

SpanningTree make_tree(const Instance& inst, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    double w = 0.0, c = 0.0;
    for (const Edge& e : edges) {
        w += inst.weight(e.u, e.v);
        c += inst.cost(e.u, e.v);
    }
    return SpanningTree{std::move(edges), w, c};
}

bool tree_totals_consistent(const SpanningTree& tree, const Instance& inst, double tol) {
    double w = 0.0, c = 0.0;
    for (const Edge& e : tree.edges) {
        w += inst.weight(e.u, e.v);
        c += inst.cost(e.u, e.v);
    }
    const double scale = 1.0 + std::abs(w) + std::abs(c);
    return std::abs(w - tree.total_weight) <= tol * scale
        && std::abs(c - tree.total_cost) <= tol * scale;
}

std::string instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["n"] = inst.n;
    j["gamma"] = inst.gamma;
    j["seed"] = inst.seed;
    j["weights"] = inst.weights;
    j["costs"] = inst.costs;
    return j.dump();
}

Instance instance_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("instance JSON: expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "n" && key != "gamma" && key != "seed" && key != "weights" && key != "costs")
            throw std::invalid_argument("instance JSON: unknown field '" + key + "'");
    }
    for (const char* key : {"n", "gamma", "seed", "weights", "costs"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("instance JSON: missing field '") + key + "'");

    Instance inst;
    inst.n = j.at("n").get<int>();
    inst.gamma = j.at("gamma").get<double>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.weights = j.at("weights").get<std::vector<double>>();
    inst.costs = j.at("costs").get<std::vector<double>>();

    if (inst.n < 2) throw std::invalid_argument("instance JSON: n must be >= 2");
    if (!(inst.gamma > 0.0) || inst.gamma > 1.0)
        throw std::invalid_argument("instance JSON: gamma must lie in (0,1]");
    const std::size_t m = static_cast<std::size_t>(inst.n) * (inst.n - 1) / 2;
    if (inst.weights.size() != m || inst.costs.size() != m)
        throw std::invalid_argument("instance JSON: matrix arrays must have n(n-1)/2 entries");
    for (double x : inst.weights)
        if (!(x > 0.0) || !(x < 1.0))
            throw std::invalid_argument("instance JSON: weights must lie strictly in (0,1)");
    for (double x : inst.costs)
        if (!(x > 0.0) || !(x < 1.0))
            throw std::invalid_argument("instance JSON: costs must lie strictly in (0,1)");
    return inst;
}

std::string tree_to_json(const SpanningTree& tree) {
    nlohmann::json j;
    auto edges = nlohmann::json::array();
    for (const Edge& e : tree.edges) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    j["W"] = tree.total_weight;
    j["C"] = tree.total_cost;
    return j.dump();
}

} // namespace cmst
