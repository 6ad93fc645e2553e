#pragma once

#include "scfsec/channel.hpp"

namespace scfsec {

/// (1/2) log2(1 + x), the point-to-point Gaussian capacity at SNR x.
/// Throws std::domain_error for x < 0.
double gaussian_capacity(double snr);

/// Phase-1 secrecy upper bound. `r_b` is the MAC-wiretap bound, `effective`
/// additionally caps it by the phase-2 capacity C(P_R).
struct UpperBoundResult {
    double rho = 0.0;
    double r_b = 0.0;
    double effective = 0.0;
};

/// Correlation-coefficient form of the converse. p_b -> 0 degenerates to a
/// 0/0 expression; that case returns the all-zero result (no jammer, no
/// secrecy), matching the numeric limit.
UpperBoundResult secrecy_upper_bound(const ChannelConfig& cfg);

/// Rate of a baseline scheme that is defined only for the collocated
/// jammer/destination case. `sigma_ignored` flags that the config carried
/// sigma2 > 0, which the formula does not model.
struct BaselineRate {
    double value = 0.0;
    bool sigma_ignored = false;
};

/// Amplify-and-forward with Gaussian jamming. sigma = 0 model.
BaselineRate af_rate_sun(const ChannelConfig& cfg);

/// Modulo-and-forward (lattice source code, modulo at the relay). sigma = 0
/// model. At symmetric powers this reduces to
/// C(P_A) - 1/2 - (1/2)log2(1 + P_A/(1+P_A)).
BaselineRate mf_rate_zhang(const ChannelConfig& cfg);

/// Compress-and-forward: the relay forwards a quantized description of its
/// reception. Inner maximization over the transmit powers (p_A, p_B] is
/// numeric: 64x64 log grid plus coordinate-wise golden-section refinement.
double cf_rate_he(const ChannelConfig& cfg);

/// Compute-and-forward with random binning, symmetric P_A=P_B=P_R, sigma=0:
/// (1/2)log2(1/2 + P) - 1. Same rate holds under strong secrecy.
double cnf_rate_he2(double p_a);

/// Perfect-secrecy variant: (1/2)log2(1/2 + P) - 1 - log2(e).
double perfect_rate_vatedka(double p_a);

}  // namespace scfsec
