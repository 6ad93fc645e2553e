#include "scfsec/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scfsec/baselines.hpp"

namespace scfsec {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double rb_rate(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    if (below_sigma_threshold(cfg)) {
        // The relay-power factor min(C(P_R)/R_CF^A, 1) depends on (a, beta),
        // so the scaled objective is maximized jointly.
        const double c_pr = gaussian_capacity(cfg.p_r);
        auto value_at = [&](const CoefficientPair& a, double lt) {
            const ScalingPair beta{std::exp2(lt), 1.0};
            const double ra = computation_rate(Node::A, a, beta, cfg);
            if (ra <= 0.0) return kNegInf;
            return std::min(c_pr / ra, 1.0) * scf_objective(a, beta, cfg);
        };
        return search_coefficients_custom(cfg, 8, value_at).value;
    }
    const double c_pa = gaussian_capacity(cfg.p_a);
    const double rate = c_pa + gaussian_capacity(cfg.p_b / cfg.sigma2) -
                        gaussian_capacity(cfg.p_a + cfg.p_b);
    return std::min(gaussian_capacity(cfg.p_r) / c_pa, 1.0) * rate;
}

double lc_rate(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    const double c_pr = gaussian_capacity(cfg.p_r);
    if (below_sigma_threshold(cfg)) {
        return std::min(search_coefficients(cfg, 8, Unconstrained{}).value, c_pr);
    }
    const double cap = gaussian_capacity(cfg.p_b / cfg.sigma2);
    return std::min(search_coefficients(cfg, 8, BRateCap{cap}).value, c_pr);
}

double combined_lower_bound(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    if (below_sigma_threshold(cfg)) return lc_rate(cfg);
    const double rb_style = (gaussian_capacity(cfg.p_a) +
                             gaussian_capacity(cfg.p_b / cfg.sigma2) -
                             gaussian_capacity(cfg.p_a + cfg.p_b)) *
                            gaussian_capacity(cfg.p_r) / gaussian_capacity(cfg.p_a);
    return std::max(lc_rate(cfg), rb_style);
}

double corollary_collocated(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    if (cfg.sigma2 != 0.0)
        throw PreconditionViolated("corollary_collocated requires sigma = 0");
    if (cfg.p_r < cfg.p_a)
        throw PreconditionViolated("corollary_collocated requires P_R >= P_A");
    return closed_form_optimum(cfg).value;
}

double corollary_symmetric(double p) {
    if (!(p > 0.0)) throw PreconditionViolated("corollary_symmetric requires p > 0");
    return 0.5 * std::log2(0.5 + p) - 0.5;
}

double eve_rb_rate(const EveChannelConfig& e) {
    ensure_valid(e);
    // Powers enter the coefficient search through the untrusted-config shim;
    // the objective itself uses the gain-substituted rates.
    const ChannelConfig shim{e.p_a, e.p_b, e.p_r, 0.0};
    const bool full_relay = e.p_r >= (e.h1 * e.h1) / (e.h2 * e.h2) * e.p_a;
    const double leak_cap = gaussian_capacity(e.h1p * e.h1p * e.p_a + e.h2p * e.h2p * e.p_b);
    const double c_relay = gaussian_capacity(e.h2 * e.h2 * e.p_r);

    auto value_at = [&](const CoefficientPair& a, double lt) {
        const ScalingPair beta{std::exp2(lt), 1.0};
        const double ra = std::min(
            eve_computation_rate(Node::A, a, beta, e.h1, e.h2, e.p_a, e.p_b),
            eve_computation_rate(Node::A, a, beta, e.h1p, e.h2p, e.p_a, e.p_b));
        const double rb = std::min(
            eve_computation_rate(Node::B, a, beta, e.h1, e.h2, e.p_a, e.p_b),
            eve_computation_rate(Node::B, a, beta, e.h1p, e.h2p, e.p_a, e.p_b));
        const double diff = ra + rb - leak_cap;
        if (full_relay) return diff;
        if (ra <= 0.0) return kNegInf;
        return diff * c_relay / ra;
    };
    return search_coefficients_custom(shim, 8, value_at).value;
}

}  // namespace scfsec
