#include "scfsec/scf.hpp"

#include <cmath>
#include <limits>

#include "scfsec/baselines.hpp"

namespace scfsec {

double noise_term(const CoefficientPair& a, const ScalingPair& beta, const ChannelConfig& cfg) {
    ensure_valid(cfg);
    if (a.a1 == 0 || a.a2 == 0) throw std::invalid_argument("coefficients must be nonzero");
    if (!(beta.beta_a > 0.0) || !(beta.beta_b > 0.0))
        throw std::invalid_argument("scalings must be positive");
    const double u = a.a1 * beta.beta_a;
    const double v = a.a2 * beta.beta_b;
    const double n = (cfg.p_a * cfg.p_b * (u - v) * (u - v) + u * u * cfg.p_a + v * v * cfg.p_b) /
                     (cfg.p_a + cfg.p_b + 1.0);
    if (!(n > 0.0)) throw std::domain_error("degenerate effective noise");
    return n;
}

double computation_rate(Node node, const CoefficientPair& a, const ScalingPair& beta,
                        const ChannelConfig& cfg) {
    const double n = noise_term(a, beta, cfg);
    const double num = node == Node::A ? beta.beta_a * beta.beta_a * cfg.p_a
                                       : beta.beta_b * beta.beta_b * cfg.p_b;
    return 0.5 * std::log2(num / n);
}

double scf_objective(const CoefficientPair& a, const ScalingPair& beta, const ChannelConfig& cfg) {
    return computation_rate(Node::A, a, beta, cfg) + computation_rate(Node::B, a, beta, cfg) -
           gaussian_capacity(cfg.p_a + cfg.p_b);
}

double leakage_bound(const ChannelConfig& cfg, double r_t_b) {
    if (r_t_b < 0.0) throw std::domain_error("leakage_bound requires r_t_b >= 0");
    return gaussian_capacity(cfg.p_a + cfg.p_b) - r_t_b;
}

double sigma_threshold(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    const double den = cfg.p_a * cfg.p_b - cfg.p_a - 1.0;
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(1.0 + (1.0 + cfg.p_a + cfg.p_b) / den);
}

bool below_sigma_threshold(const ChannelConfig& cfg) {
    const double sbar = sigma_threshold(cfg);
    if (std::isinf(sbar)) return true;
    return cfg.sigma2 <= sbar * sbar;
}

double eve_noise_term(const CoefficientPair& a, const ScalingPair& beta, double h_a, double h_b,
                      double p_a, double p_b) {
    // N(a, beta) with every P_i substituted by h_i^2 P_i.
    ChannelConfig sub{h_a * h_a * p_a, h_b * h_b * p_b, 1.0, 0.0};
    return noise_term(a, beta, sub);
}

double eve_computation_rate(Node node, const CoefficientPair& a, const ScalingPair& beta,
                            double h_a, double h_b, double p_a, double p_b) {
    ChannelConfig sub{h_a * h_a * p_a, h_b * h_b * p_b, 1.0, 0.0};
    return computation_rate(node, a, beta, sub);
}

double eve_leakage_bound(const EveChannelConfig& cfg, double r_t_b) {
    if (r_t_b < 0.0) throw std::domain_error("eve_leakage_bound requires r_t_b >= 0");
    return gaussian_capacity(cfg.h1p * cfg.h1p * cfg.p_a + cfg.h2p * cfg.h2p * cfg.p_b) - r_t_b;
}

}  // namespace scfsec
