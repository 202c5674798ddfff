#pragma once

// Special functions backing the series evaluations: log-gamma (Lanczos) and
// the regularized incomplete gamma pair (power series / continued fraction).
// All functions are pure and thread-safe.

#include <cstdint>

namespace cmst {

struct SeriesConfig {
    double rel_tol = 1e-12;
    long max_terms = 1'000'000;
};

// Throws std::invalid_argument unless 0 < rel_tol < 1e-3 and max_terms >= 100.
void validate(const SeriesConfig& cfg);

// Value plus the error bracket achieved by the evaluation.
struct SeriesValue {
    double value = 0.0;
    double abs_error = 0.0;
    long terms = 0;
};

// log Gamma(x) for x > 0; relative accuracy ~1e-14.
double log_gamma(double x);

// Regularized incomplete gamma: P(s,x) = gamma(s,x)/Gamma(s), Q = 1 - P.
// Power series for x < s+1, Lentz continued fraction otherwise.
double gamma_p(double s, double x);
double gamma_q(double s, double x);

// Lower incomplete gamma(s,x); overflows for s beyond ~170 (use gamma_p then).
double lower_incomplete_gamma(double s, double x);

// zeta(3) by partial sums plus an integral tail bracket (midpoint added).
SeriesValue zeta3(const SeriesConfig& cfg = {});

} // namespace cmst
