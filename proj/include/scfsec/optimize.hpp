#pragma once

#include <functional>
#include <variant>

#include "scfsec/channel.hpp"
#include "scfsec/scf.hpp"

namespace scfsec {

/// Maximize R_s(a, beta) freely over the scaling ratio.
struct Unconstrained {};

/// Maximize R_s(a, beta) subject to R_CF^B(a, beta) <= cap (the node-C
/// decodability constraint C(P_B / sigma^2) of the LC scheme).
struct BRateCap {
    double cap;
};

/// Maximize the eavesdropper-channel objective
///   sum_i min(R~_CF^i(h), R~_CF^i(h')) - C(h1'^2 P_A + h2'^2 P_B).
struct EveObjective {
    EveChannelConfig cfg;
};

using BetaObjective = std::variant<Unconstrained, BRateCap, EveObjective>;

struct BetaSearchResult {
    double ratio = 1.0;   // maximizing beta_A / beta_B
    double value = 0.0;
    bool feasible = true;  // false: no ratio satisfied the constraint
    long long evaluations = 0;
};

/// 1-D maximization over t = beta_A/beta_B (common scaling of beta is
/// rate-neutral, so the search space is one-dimensional in log2 t).
/// 512-point grid over log2 t in [-20, 20], top-5 bracket refinement by
/// golden section to 1e-10 interval width; infeasible points are masked and
/// refinement keeps the best probe seen, which makes the kinked min()
/// objectives safe.
BetaSearchResult optimize_beta(const CoefficientPair& a, const ChannelConfig& cfg,
                               const BetaObjective& objective);

struct OptimizationResult {
    SCFDesign best;
    double value = 0.0;
    bool constrained = false;
    bool feasible = true;
    long long evaluations = 0;
};

/// Enumerate canonical coefficient pairs (a1 in [1, a_max], a2 in
/// [-a_max, a_max] \ {0}, gcd-reduced), run the ratio search for each and
/// return the argmax. Deterministic tie-break: first pair in the order
/// (|a1|, |a2|) ascending with positive a2 before negative wins ties.
OptimizationResult search_coefficients(const ChannelConfig& cfg, int a_max,
                                       const BetaObjective& objective);

/// Generic variant used by the scheme formulas whose maximand couples a and
/// beta (relay-power scaling factors). `value_at` gets (a, log2 t) and may
/// return -inf for invalid points.
OptimizationResult search_coefficients_custom(
    const ChannelConfig& cfg, int a_max,
    const std::function<double(const CoefficientPair&, double)>& value_at);

struct ClosedFormOptimum {
    CoefficientPair a;
    double beta_ratio;  // beta_A / beta_B
    double value;
};

/// Analytic maximum of R_s over (a, beta): a = (1,1),
/// beta_A/beta_B = sqrt(P_B(1+P_A)/(P_A(1+P_B))), value
/// (1/2) log2[(1+P_A+P_B)/((sqrt((1+P_A)(1+P_B)) - sqrt(P_A P_B))^2)] - 1.
ClosedFormOptimum closed_form_optimum(const ChannelConfig& cfg);

}  // namespace scfsec
