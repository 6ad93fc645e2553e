#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace scfsec {

/// Untrusted-relay model: transmit powers (linear SNR, unit noise) for the
/// source A, the cooperative jammer B and the relay R, plus the variance of
/// the jammer-to-destination noise. sigma2 == 0 encodes the collocated
/// jammer/destination case. All internal arithmetic is in linear units; dB
/// appears only at the CLI boundary.
struct ChannelConfig {
    double p_a = 0.0;
    double p_b = 0.0;
    double p_r = 0.0;
    double sigma2 = 0.0;
};

/// External-eavesdropper model: powers plus the five real channel gains
/// (h1, h2 toward the relay/destination; h1', h2' toward the eavesdropper in
/// phase 1; h3 toward the eavesdropper in phase 2). h3 enters no rate
/// expression but is part of the model.
struct EveChannelConfig {
    double p_a = 0.0;
    double p_b = 0.0;
    double p_r = 0.0;
    double h1 = 1.0;
    double h2 = 1.0;
    double h1p = 1.0;
    double h2p = 1.0;
    double h3 = 1.0;
};

/// Integer coefficient pair of the decoded linear combination. Both entries
/// nonzero; sign-flipped pairs are equivalent (the effective-noise expression
/// contains only squares), so canonical form has a1 > 0.
struct CoefficientPair {
    int a1 = 1;
    int a2 = 1;

    friend bool operator==(const CoefficientPair&, const CoefficientPair&) = default;
};

/// Positive codebook scaling coefficients (beta_A, beta_B). Only the ratio
/// beta_A/beta_B affects any rate.
struct ScalingPair {
    double beta_a = 1.0;
    double beta_b = 1.0;
};

/// A coefficient/scaling choice together with the rates it induces.
struct SCFDesign {
    CoefficientPair coeffs;
    ScalingPair scalings;
    double r_cf_a = 0.0;       // computation rate of node A, bits/channel use
    double r_cf_b = 0.0;       // computation rate of node B
    double objective = 0.0;    // R_s(a, beta)
    double leakage_bound = 0.0;  // upper bound on the leakage rate R_o
};

enum class ConfigErrorKind { NonPositivePower, NegativeSigma, NonPositiveGain };

struct ConfigError {
    ConfigErrorKind kind;
    const char* field;

    std::string message() const {
        switch (kind) {
            case ConfigErrorKind::NonPositivePower:
                return std::string("NonPositivePower: ") + field + " must be > 0";
            case ConfigErrorKind::NegativeSigma:
                return std::string("NegativeSigma: ") + field + " must be >= 0";
            case ConfigErrorKind::NonPositiveGain:
                return std::string("NonPositiveGain: ") + field + " must be > 0";
        }
        return "unknown config error";
    }
};

/// 10^(x/10); -inf maps to 0. Inverse of 10*log10 on (0, inf).
inline double db_to_linear(double x_db) {
    if (std::isinf(x_db) && x_db < 0) return 0.0;
    return std::pow(10.0, x_db / 10.0);
}

inline double linear_to_db(double x) {
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(x);
}

/// nullopt when all invariants hold, otherwise the first violated one.
inline std::optional<ConfigError> validate(const ChannelConfig& cfg) {
    if (!(cfg.p_a > 0.0)) return ConfigError{ConfigErrorKind::NonPositivePower, "p_a"};
    if (!(cfg.p_b > 0.0)) return ConfigError{ConfigErrorKind::NonPositivePower, "p_b"};
    if (!(cfg.p_r > 0.0)) return ConfigError{ConfigErrorKind::NonPositivePower, "p_r"};
    if (!(cfg.sigma2 >= 0.0)) return ConfigError{ConfigErrorKind::NegativeSigma, "sigma2"};
    return std::nullopt;
}

inline std::optional<ConfigError> validate(const EveChannelConfig& cfg) {
    if (!(cfg.p_a > 0.0)) return ConfigError{ConfigErrorKind::NonPositivePower, "p_a"};
    if (!(cfg.p_b > 0.0)) return ConfigError{ConfigErrorKind::NonPositivePower, "p_b"};
    if (!(cfg.p_r > 0.0)) return ConfigError{ConfigErrorKind::NonPositivePower, "p_r"};
    if (!(cfg.h1 > 0.0)) return ConfigError{ConfigErrorKind::NonPositiveGain, "h1"};
    if (!(cfg.h2 > 0.0)) return ConfigError{ConfigErrorKind::NonPositiveGain, "h2"};
    if (!(cfg.h1p > 0.0)) return ConfigError{ConfigErrorKind::NonPositiveGain, "h1p"};
    if (!(cfg.h2p > 0.0)) return ConfigError{ConfigErrorKind::NonPositiveGain, "h2p"};
    if (!(cfg.h3 > 0.0)) return ConfigError{ConfigErrorKind::NonPositiveGain, "h3"};
    return std::nullopt;
}

template <class Config>
void ensure_valid(const Config& cfg) {
    if (auto err = validate(cfg)) throw std::invalid_argument(err->message());
}

/// Canonicalize a coefficient pair: entries nonzero, a1 > 0 (global sign
/// flip leaves every rate unchanged).
inline CoefficientPair canonical(CoefficientPair a) {
    if (a.a1 == 0 || a.a2 == 0)
        throw std::invalid_argument("CoefficientPair entries must be nonzero");
    if (a.a1 < 0) {
        a.a1 = -a.a1;
        a.a2 = -a.a2;
    }
    return a;
}

}  // namespace scfsec
