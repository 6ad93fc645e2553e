#include "scfsec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "scfsec/baselines.hpp"
#include "scfsec/binning.hpp"
#include "scfsec/optimize.hpp"
#include "scfsec/schemes.hpp"
#include "scfsec/sweep.hpp"

namespace scfsec {

namespace {

using json = nlohmann::ordered_json;

double clamp0(double v) { return std::max(0.0, v); }

json finite_or_string(double v) {
    if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
    return json(v);
}

json config_json(const ChannelConfig& cfg) {
    return json{{"pa", cfg.p_a},
                {"pb", cfg.p_b},
                {"pr", cfg.p_r},
                {"sigma2", cfg.sigma2},
                {"pa_db", finite_or_string(linear_to_db(cfg.p_a))},
                {"pb_db", finite_or_string(linear_to_db(cfg.p_b))},
                {"pr_db", finite_or_string(linear_to_db(cfg.p_r))},
                {"sigma2_db", finite_or_string(linear_to_db(cfg.sigma2))}};
}

json design_json(const SCFDesign& d) {
    return json{{"a1", d.coeffs.a1},
                {"a2", d.coeffs.a2},
                {"beta_ratio", d.scalings.beta_a / d.scalings.beta_b},
                {"r_cf_a", d.r_cf_a},
                {"r_cf_b", d.r_cf_b},
                {"objective", d.objective},
                {"leakage_bound", d.leakage_bound}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string rate_report_json(const ChannelConfig& cfg, int a_max) {
    ensure_valid(cfg);
    json j;
    j["config"] = config_json(cfg);

    const UpperBoundResult ub = secrecy_upper_bound(cfg);
    j["upper_bound"] = {{"rho", ub.rho}, {"r_b", ub.r_b}, {"effective", ub.effective}};
    j["sigma_threshold"] = finite_or_string(sigma_threshold(cfg));

    json raw, clamped, warnings = json::array();
    auto put = [&](const char* key, double v) {
        raw[key] = v;
        clamped[key] = clamp0(v);
    };
    put("rb", rb_rate(cfg));
    put("lc", lc_rate(cfg));
    put("combined", combined_lower_bound(cfg));
    const BaselineRate sun = af_rate_sun(cfg);
    const BaselineRate zhang = mf_rate_zhang(cfg);
    put("sun_af", sun.value);
    put("zhang_mf", zhang.value);
    put("he_cf", cf_rate_he(cfg));
    put("he2_cnf", cnf_rate_he2(cfg.p_a));
    put("vatedka_perfect", perfect_rate_vatedka(cfg.p_a));
    put("capacity", std::min(gaussian_capacity(cfg.p_a), gaussian_capacity(cfg.p_r)));
    if (sun.sigma_ignored) warnings.push_back("sun_af: defined for sigma = 0; sigma2 ignored");
    if (zhang.sigma_ignored)
        warnings.push_back("zhang_mf: defined for sigma = 0; sigma2 ignored");
    if (!(cfg.p_a == cfg.p_b && cfg.p_b == cfg.p_r))
        warnings.push_back("he2_cnf/vatedka_perfect: closed forms assume P_A = P_B = P_R");
    j["rates_raw"] = raw;
    j["rates_clamped"] = clamped;

    const bool below = below_sigma_threshold(cfg);
    BetaObjective objective;
    if (below)
        objective = Unconstrained{};
    else
        objective = BRateCap{gaussian_capacity(cfg.p_b / cfg.sigma2)};
    const OptimizationResult opt = search_coefficients(cfg, a_max, objective);
    j["optimum"] = design_json(opt.best);
    j["optimum"]["constrained"] = opt.constrained;
    j["optimum"]["feasible"] = opt.feasible;
    j["warnings"] = warnings;
    return dump(j);
}

std::string optimize_report_json(const ChannelConfig& cfg, int a_max) {
    ensure_valid(cfg);
    const bool below = below_sigma_threshold(cfg);
    BetaObjective objective;
    if (below)
        objective = Unconstrained{};
    else
        objective = BRateCap{gaussian_capacity(cfg.p_b / cfg.sigma2)};
    const OptimizationResult opt = search_coefficients(cfg, a_max, objective);
    json j;
    j["config"] = config_json(cfg);
    j["a_max"] = a_max;
    j["objective"] = below ? "unconstrained" : "b_rate_cap";
    if (!below) j["b_rate_cap"] = gaussian_capacity(cfg.p_b / cfg.sigma2);
    j["best"] = design_json(opt.best);
    j["value"] = opt.value;
    j["constrained"] = opt.constrained;
    j["feasible"] = opt.feasible;
    j["evaluations"] = opt.evaluations;
    return dump(j);
}

namespace {

json chain_json(const ScalarLatticeChain& chain) {
    return json{{"m_s", chain.m_s},
                {"m_e", chain.m_e},
                {"m_b", chain.m_b},
                {"beta_a", chain.beta_a.str()},
                {"beta_b", chain.beta_b.str()},
                {"a1", chain.coeffs.a1},
                {"a2", chain.coeffs.a2},
                {"dims", chain.dims}};
}

}  // namespace

std::string chain_sim_report_json(const ChainSimRequest& req) {
    ScalarLatticeChain chain = req.chain;
    chain.ensure_valid();
    if (!chain.nesting_ok())
        throw NestingViolation("simulate chain: coarse lattices are not nested");
    long long failures = 0;
    for (long long trial = 0; trial < req.trials; ++trial) {
        const std::uint64_t seed = req.seed + static_cast<std::uint64_t>(trial);
        ScalarLatticeChain c = chain;
        if (req.randomize_beta) {
            std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
            auto draw = [&rng] {
                const long long num = 1 + static_cast<long long>(rng() % 8);
                const long long den = 1 + static_cast<long long>(rng() % 8);
                return Rational(num, den);
            };
            c.beta_a = draw();
            c.beta_b = draw();
        }
        const ChainTrialInput in = random_trial_input(c, seed);
        const SimOutcome outcome = run_chain_trial(c, req.mode, in);
        failures += outcome.exact_match ? 0 : 1;
    }
    json j;
    j["chain"] = chain_json(chain);
    j["mode"] = req.mode == ChainMode::Chain ? "chain" : "plain";
    j["randomize_beta"] = req.randomize_beta;
    j["trials"] = req.trials;
    j["failures"] = failures;
    j["seed"] = req.seed;
    return dump(j);
}

std::string leakage_report_json(const ScalarLatticeChain& chain, LeakageReduction reduce) {
    const LeakageResult res = exhaustive_leakage(chain, reduce);
    json j;
    j["chain"] = chain_json(chain);
    j["reduce"] = reduce == LeakageReduction::ModCoarse ? "mod-coarse" : "none";
    j["triples"] = res.triples;
    j["support"] = res.support;
    j["leakage_bits"] = res.bits;
    j["exactly_zero"] = res.exactly_zero;
    return dump(j);
}

std::string binning_report_json(const BinningSimRequest& req) {
    const BinningCodeSpec spec =
        make_binning_spec(req.l, req.h_bits, req.n_dims, req.r_t, req.r_o, req.seed);
    const BinningCode code(spec, req.inner_alphabet);
    std::vector<long long> labels;
    const long long n = std::min<long long>(req.trials, spec.bins);
    labels.reserve(n);
    for (long long i = 0; i < n; ++i)
        labels.push_back(i % spec.bins);
    const RoundtripResult rt = binning_roundtrip(code, labels, req.seed + 1);
    json j;
    j["spec"] = {{"l", spec.l},       {"l_prime", spec.l_prime},   {"bins", spec.bins},
                 {"bin_size", spec.bin_size}, {"seed", spec.seed},
                 {"inner_alphabet", req.inner_alphabet},
                 {"codeword_length", code.codeword_length()}};
    j["stored_codewords"] = code.stored_codewords();
    j["discarded_codewords"] = code.discarded_codewords();
    j["empty_bins"] = code.empty_bins();
    j["roundtrip"] = {{"trials", rt.trials},
                      {"failures", rt.failures},
                      {"empty_bin_events", rt.empty_bin_events}};
    return dump(j);
}

std::string asymptotics_csv(Table1Row row, const AsymptoticScenario& scn) {
    const ConvergenceReport rep = convergence_check(row, scn, 1.0);
    const std::vector<double> g0 = gap_g0(scn);
    std::string csv = "pa_db,g0,gap,table1_reference,residual\n";
    char buf[160];
    for (std::size_t i = 0; i < scn.p_a_list.size(); ++i) {
        // Interval reference (He scheme, gamma >= 1): report the endpoint
        // closest to the observed gap.
        const double ref = rep.gaps[i] > rep.reference.hi ? rep.reference.hi : rep.reference.lo;
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      linear_to_db(scn.p_a_list[i]), g0[i], rep.gaps[i], ref, rep.residuals[i]);
        csv += buf;
    }
    return csv;
}

}  // namespace scfsec
