#pragma once

#include "scfsec/channel.hpp"

namespace scfsec {

/// Effective noise N(a, beta) seen by the relay when decoding the integer
/// combination a1*T_A + a2*T_B from beta-scaled codebooks:
///   [P_A P_B (a1 bA - a2 bB)^2 + (a1 bA)^2 P_A + (a2 bB)^2 P_B] / (P_A+P_B+1).
/// Strictly positive for nonzero coefficients, positive scalings and powers;
/// a degenerate zero value throws (invalid inputs).
double noise_term(const CoefficientPair& a, const ScalingPair& beta, const ChannelConfig& cfg);

enum class Node { A, B };

/// Computation rate (1/2) log2(beta_i^2 P_i / N(a, beta)). May be negative.
/// Invariant under common scaling of beta and under global sign flip of a.
double computation_rate(Node node, const CoefficientPair& a, const ScalingPair& beta,
                        const ChannelConfig& cfg);

/// Secrecy objective R_s(a, beta) = R_CF^A + R_CF^B - C(P_A + P_B).
double scf_objective(const CoefficientPair& a, const ScalingPair& beta, const ChannelConfig& cfg);

/// Upper bound on the leakage rate to the relay: C(P_A + P_B) - R_t^B.
double leakage_bound(const ChannelConfig& cfg, double r_t_b);

/// Threshold on the jammer-to-destination noise std deviation:
///   sigma_bar = sqrt(1 + (1 + P_A + P_B)/(P_A P_B - P_A - 1))
/// when P_A P_B > P_A + 1, +infinity otherwise (the decodability
/// constraint then never binds).
double sigma_threshold(const ChannelConfig& cfg);

/// True when the scheme-selection branch for sigma <= sigma_bar applies.
bool below_sigma_threshold(const ChannelConfig& cfg);

/// Effective noise of the eavesdropper-channel model: N(a, beta) with every
/// P_i substituted by h_i^2 P_i. h_pair = (h_A, h_B) are the phase-1 gains
/// toward the node doing the decoding.
double eve_noise_term(const CoefficientPair& a, const ScalingPair& beta, double h_a, double h_b,
                      double p_a, double p_b);

/// Computation rate (1/2) log2(beta_i^2 h_i^2 P_i / N(a, beta, h)).
double eve_computation_rate(Node node, const CoefficientPair& a, const ScalingPair& beta,
                            double h_a, double h_b, double p_a, double p_b);

/// Leakage bound toward the external eavesdropper:
/// C(h1'^2 P_A + h2'^2 P_B) - R_t^B.
double eve_leakage_bound(const EveChannelConfig& cfg, double r_t_b);

}  // namespace scfsec
