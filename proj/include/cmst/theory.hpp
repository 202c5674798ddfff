#pragma once

// Closed-form constants, series functions and regime predictions for the
// random budget-constrained MST. The series family
//
//   f(b)  = sum_k (k^{k-2}/k!) [ sqrt(b) I1_k(b) + I2_k(b) ],
//   I1_k(b) = int_0^b x^{k-3/2} e^{-kx} dx,   I2_k(b) = int_b^inf x^{k-1} e^{-kx} dx,
//   f'(b) = (1/2) sum_k (k^{k-2}/k!) b^{-1/2} I1_k(b),
//   g(b)  = f(b) - b f'(b),
//
// drives the constant-order budget regimes; c1 (and its gamma analogue C_gamma)
// drives the mid-range regime. Everything is evaluated through the regularized
// incomplete gamma with weights formed in log space, so no term overflows.

#include <optional>
#include <string>

#include "cmst/special.hpp"

namespace cmst {

// c1 = (1/sqrt(2)) sum_k Gamma(k-1/2) / (k^{3/2} k!), with tail bracket.
SeriesValue c1_const(const SeriesConfig& cfg = {});

// C_gamma = (gamma/2) Gamma(2/gamma+1)^{gamma/2} / Gamma(1/gamma+1)^gamma
//           * sum_k Gamma(k+gamma/2-1) / (k^{gamma/2+1} k!);  C_1 = c1.
SeriesValue C_gamma_const(double gamma, const SeriesConfig& cfg = {});

// Single series element f_k(b) = sqrt(b) I1_k(b) + I2_k(b); k >= 1, b >= 0.
double f_k(int k, double beta, const SeriesConfig& cfg = {});

SeriesValue f_beta(double beta, const SeriesConfig& cfg = {});
SeriesValue f_beta_prime(double beta, const SeriesConfig& cfg = {});  // f'(0) = 1 as the limit
SeriesValue g_beta(double beta, const SeriesConfig& cfg = {});

// Unique root of f'(b) = 2 alpha for alpha in (0, 1/2]; f' decreases 1 -> 0.
double solve_beta_case2(double alpha, const SeriesConfig& cfg = {});

// Unique root of g(b) = alpha for alpha > zeta(3); g increases from zeta(3).
double solve_beta_case3(double alpha, const SeriesConfig& cfg = {});

enum class Regime {
    case1,
    case2_supercritical,
    case2,
    case3_infeasible,
    case3,
    gamma_regime,
    out_of_range,
};

const char* regime_name(Regime r);

struct RegimePrediction {
    Regime regime = Regime::out_of_range;
    std::optional<double> w_star;       // absent for infeasible / out_of_range
    std::optional<double> beta_star;    // present only for case2 / case3
    std::optional<double> lambda_star;
    std::optional<double> alpha;        // normalized budget when applicable
};

// Classifies (n, c0, gamma) into the asymptotic regimes and evaluates the
// matching W* prediction. gamma = 1 tiles (0, n]: the bracket
// [c1 sqrt(500 ln n), c1 n / sqrt(8000 ln n)] is case 1, larger budgets follow
// the alpha = c0/n branches, smaller ones the constant-budget branches with
// infeasibility below zeta(3). gamma < 1 yields a prediction only where the
// implied multiplier falls in the formula's validity window; elsewhere
// out_of_range is reported, unless `extrapolate` forces the nearest formula.
RegimePrediction predict_wstar(int n, double c0, double gamma,
                               const SeriesConfig& cfg = {}, bool extrapolate = false);

// Leading-order maximizer of the expected dual for the matching regime.
double lambda_star_prediction(int n, double c0, double gamma, const SeriesConfig& cfg = {});

// Probability that a unit-square point (u,v) satisfies
// u/(1+lambda) + v/(1+1/lambda) <= p: triangle / trapezoid / complement.
double phat(double p, double lambda);

// Inverse of phat in p, dispatched on the computed breakpoint images.
double phat_inv(double q, double lambda);

// Measure of {(u,v) in [0,1]^2 : u^gamma + lambda v^gamma < t} for t <= 1,
// lambda >= 1, gamma in (0,1). Callers reduce lambda < 1 by symmetry.
double phat_gamma(double t, double lambda, double gamma);

struct ThresholdT0 {
    double t0 = 0.0;
    bool in_range = false;  // t0 <= 1, i.e. lambda above the window's lower edge
};

// t0 with phat_gamma(t0) = 1000 log(n)/n.
ThresholdT0 t0_threshold(int n, double lambda, double gamma);

// Expected optimal total of W_e + lambda C_e over spanning trees:
// gamma = 1 dispatches between c1 sqrt(lambda n) (mid window) and the
// f-series with beta = lambda n/2 (small lambda) or beta = n/(2 lambda)
// scaled by lambda (large lambda). gamma < 1 requires lambda inside the
// validity window and uses C_gamma lambda^{1/2} n^{1-gamma/2}.
double expected_ln(int n, double lambda, double gamma, const SeriesConfig& cfg = {});

struct MinPower {
    double exact = 0.0;       // Gamma(n+1) Gamma(gamma+1) / Gamma(n+gamma+1)
    double asymptotic = 0.0;  // Gamma(gamma+1) n^{-gamma}
};

// Expected minimum of n independent U^gamma draws (exactly 1/(n+1) at gamma=1).
MinPower expected_min_ugamma(int n, double gamma);

} // namespace cmst
