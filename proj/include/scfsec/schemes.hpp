#pragma once

#include "scfsec/channel.hpp"
#include "scfsec/optimize.hpp"

namespace scfsec {

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Random-binning scheme. Below the sigma threshold the rate is
/// max_{a,beta} min(C(P_R)/R_CF^A, 1) * R_s(a, beta); the factor couples a
/// and beta through R_CF^A, so the scaled objective is maximized jointly
/// rather than scaling the unconstrained optimum. Above the threshold:
/// min(C(P_R)/C(P_A), 1) * (C(P_A) + C(P_B/sigma^2) - C(P_A+P_B)).
/// Returned raw (possibly negative); clamping is a plotting concern.
double rb_rate(const ChannelConfig& cfg);

/// Lattice-chain scheme: min(max_{a,beta} R_s, C(P_R)) below the threshold;
/// above it the maximization additionally enforces
/// R_CF^B(a, beta) <= C(P_B/sigma^2).
double lc_rate(const ChannelConfig& cfg);

/// Envelope of the two schemes. Below the threshold it equals lc_rate; above
/// it, the max of the constrained LC value and the RB-style expression
/// (C(P_A)+C(P_B/sigma^2)-C(P_A+P_B)) * C(P_R)/C(P_A).
double combined_lower_bound(const ChannelConfig& cfg);

/// Collocated-jammer corollary (sigma = 0, P_R >= P_A): the closed-form
/// optimum value. Throws PreconditionViolated outside its domain.
double corollary_collocated(const ChannelConfig& cfg);

/// Symmetric corollary (sigma = 0, P_A = P_B = P_R):
/// (1/2) log2(1/2 + P) - 1/2.
double corollary_symmetric(double p);

/// Eavesdropper-channel rate. For P_R >= (h1/h2)^2 P_A maximizes
/// sum_i min(R~_CF^i(h), R~_CF^i(h')) - C(h1'^2 P_A + h2'^2 P_B) over
/// (a, beta); otherwise the bracketed difference is scaled by
/// C(h2^2 P_R) / min(R~_CF^A(h), R~_CF^A(h')) inside the maximization.
double eve_rb_rate(const EveChannelConfig& cfg);

}  // namespace scfsec
