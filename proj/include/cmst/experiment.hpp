#pragma once

// Monte Carlo harness. Replicate seeds are derived from (master_seed, cell,
// replicate), so sweep output is a pure function of its configuration and is
// byte-identical for any worker thread count. Wall time is only measured on
// request, because measured timings would break that contract.

#include <cstdint>
#include <string>
#include <vector>

#include "cmst/theory.hpp"

namespace cmst {

struct SweepConfig {
    enum class C0Rule { absolute, alpha_n, case1_midpoint };

    std::vector<int> n_values;
    double gamma = 1.0;
    C0Rule c0_kind = C0Rule::absolute;
    double c0_value = 0.0;      // budget (absolute) or alpha (alpha_n)
    int replicates = 1;
    std::uint64_t master_seed = 0;
    double tol = 0.0;           // 0: per-trial default 1e-9 * n
    bool tighten_budget = false;
};

void validate(const SweepConfig& cfg);

// Budget for one cell under the configured rule. case1_midpoint is the
// geometric midpoint of the case-1 bracket, c1 sqrt(n) / 2.
double cell_budget(const SweepConfig& cfg, int n);

struct TrialRecord {
    std::uint64_t seed = 0;
    int n = 0;
    double gamma = 1.0;
    double c0 = 0.0;
    double lambda_star = 0.0;
    double phi_star = 0.0;
    double repaired_w = 0.0;
    double repaired_c = 0.0;
    bool feasible = false;      // repaired_c <= c0
    double z_max = 0.0;
    double c_max = 0.0;
    double predicted_w = 0.0;   // NaN when the regime carries no prediction
    Regime regime = Regime::out_of_range;
    long mst_calls = 0;
    double wall_time_ms = 0.0;  // 0 unless timing was requested
};

// Runs the full pipeline on one seeded instance. Infeasible budgets produce a
// record with NaN solver fields rather than an error. Deterministic given the
// parameters (timing fields excluded when measure_time is set).
TrialRecord run_trial(int n, double gamma, double c0, std::uint64_t seed, double tol,
                      bool tighten_budget, bool measure_time = false);

// Checked on every persisted record: the repaired cost never exceeds
// c0 + c_max, and the dual value and repaired weight sandwich correctly
// (weak duality when the repaired tree is feasible, the repair guarantee
// when it is not). Throws std::logic_error on violation.
void validate_record(const TrialRecord& rec, double tol);

// Replicates for every (n, budget) cell, cell-major order. num_threads <= 0
// uses the OpenMP default. Output does not depend on the thread count.
std::vector<TrialRecord> run_sweep(const SweepConfig& cfg, int num_threads = 0,
                                   bool measure_time = false);

struct CellSummary {
    int n = 0;
    double gamma = 1.0;
    double c0 = 0.0;
    Regime regime = Regime::out_of_range;
    int count = 0;
    double mean_phi = 0.0;
    double sd_phi = 0.0;
    double cv_phi = 0.0;        // concentration proxy
    double mean_repaired_w = 0.0;
    double sd_repaired_w = 0.0;
    double ratio_repaired = 0.0;  // mean repaired / predicted (NaN if none)
    double ratio_phi = 0.0;
    double ci_lo = 0.0;           // 95% normal CI on the repaired mean
    double ci_hi = 0.0;
};

std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records);

// Header exactly:
// seed,n,gamma,c0,lambda_star,phi_star,repaired_W,repaired_C,feasible,z_max,
// c_max,predicted_W,regime,mst_calls,wall_time_ms
// with floats printed as 17-significant-digit decimal.
std::string records_to_csv(const std::vector<TrialRecord>& records);

std::string summaries_to_csv(const std::vector<CellSummary>& cells);

// Strict parse of the sweep configuration JSON; unknown fields are rejected.
SweepConfig sweep_config_from_json(const std::string& text);

} // namespace cmst
