#pragma once

#include <cstdint>
#include <string>

#include "scfsec/asymptotics.hpp"
#include "scfsec/channel.hpp"
#include "scfsec/lattice.hpp"

namespace scfsec {

/// Single-config JSON report: every baseline and scheme rate (raw and
/// clamped), the upper bound, sigma threshold and the optimal SCF design.
std::string rate_report_json(const ChannelConfig& cfg, int a_max);

/// JSON report of the coefficient/scaling search.
std::string optimize_report_json(const ChannelConfig& cfg, int a_max);

struct ChainSimRequest {
    ScalarLatticeChain chain;
    ChainMode mode = ChainMode::Chain;
    long long trials = 1000;
    std::uint64_t seed = 0;
    bool randomize_beta = true;  // fresh denominator<=8 rationals per trial
};

/// Randomized recovery-identity trials; failures counts trials whose
/// recovered point differs from the transmitted one.
std::string chain_sim_report_json(const ChainSimRequest& req);

std::string leakage_report_json(const ScalarLatticeChain& chain, LeakageReduction reduce);

struct BinningSimRequest {
    long long l = 8;
    double h_bits = 1.0;
    int n_dims = 1;
    double r_t = 2.0;
    double r_o = 1.0;
    long long inner_alphabet = 4;
    std::uint64_t seed = 0;
    long long trials = 256;
};

std::string binning_report_json(const BinningSimRequest& req);

/// CSV of pre-limit gaps vs the Table-I reference:
/// P_A_db, G0, G_<scheme>, table1_reference, residual. For the He-scheme
/// gamma>=1 interval cell the reference column holds the closest endpoint.
std::string asymptotics_csv(Table1Row row, const AsymptoticScenario& scn);

}  // namespace scfsec
