#include "scfsec/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "scfsec/baselines.hpp"

namespace scfsec {

namespace {

constexpr double kLogLo = -20.0;
constexpr double kLogHi = 20.0;
constexpr int kGridPoints = 512;
constexpr int kBrackets = 5;
constexpr double kRefineWidth = 1e-10;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct RatioProbe {
    double log2_t = 0.0;
    double value = kNegInf;
};

// Grid scan + golden-section refinement of the top brackets. `f` returns
// -inf for infeasible/invalid ratios; refinement keeps the best probe seen,
// so kinked (min of rates) and masked objectives are handled without
// unimodality assumptions.
RatioProbe maximize_over_log_ratio(const std::function<double(double)>& f, long long* evals) {
    std::array<double, kGridPoints> xs, vs;
    for (int i = 0; i < kGridPoints; ++i) {
        xs[i] = kLogLo + (kLogHi - kLogLo) * i / (kGridPoints - 1);
        vs[i] = f(xs[i]);
    }
    *evals += kGridPoints;

    std::array<int, kGridPoints> order;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vs[a] > vs[b]; });

    RatioProbe best;
    constexpr double invphi = 0.6180339887498949;
    int refined = 0;
    std::array<int, kBrackets> centers{};
    for (int k = 0; k < kGridPoints && refined < kBrackets; ++k) {
        const int i = order[k];
        if (vs[i] == kNegInf) break;
        // One bracket per distinct peak: skip points adjacent to a bracket
        // that was already refined.
        bool near = false;
        for (int j = 0; j < refined; ++j) near |= std::abs(centers[j] - i) <= 2;
        if (near) continue;
        centers[refined] = i;
        if (vs[i] > best.value) best = {xs[i], vs[i]};
        double lo = xs[std::max(i - 1, 0)];
        double hi = xs[std::min(i + 1, kGridPoints - 1)];
        double x1 = hi - invphi * (hi - lo);
        double x2 = lo + invphi * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        *evals += 2;
        while (hi - lo > kRefineWidth) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + invphi * (hi - lo);
                f2 = f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - invphi * (hi - lo);
                f1 = f(x1);
            }
            ++*evals;
            if (f1 > best.value) best = {x1, f1};
            if (f2 > best.value) best = {x2, f2};
        }
        ++refined;
    }
    return best;
}

double eve_objective_value(const CoefficientPair& a, double t, const EveChannelConfig& e) {
    const ScalingPair beta{t, 1.0};
    const double ra_h = eve_computation_rate(Node::A, a, beta, e.h1, e.h2, e.p_a, e.p_b);
    const double ra_hp = eve_computation_rate(Node::A, a, beta, e.h1p, e.h2p, e.p_a, e.p_b);
    const double rb_h = eve_computation_rate(Node::B, a, beta, e.h1, e.h2, e.p_a, e.p_b);
    const double rb_hp = eve_computation_rate(Node::B, a, beta, e.h1p, e.h2p, e.p_a, e.p_b);
    return std::min(ra_h, ra_hp) + std::min(rb_h, rb_hp) -
           gaussian_capacity(e.h1p * e.h1p * e.p_a + e.h2p * e.h2p * e.p_b);
}

}  // namespace

BetaSearchResult optimize_beta(const CoefficientPair& a, const ChannelConfig& cfg,
                               const BetaObjective& objective) {
    ensure_valid(cfg);
    const CoefficientPair ca = canonical(a);
    BetaSearchResult res;
    res.feasible = true;

    std::function<double(double)> f;
    if (std::holds_alternative<Unconstrained>(objective)) {
        f = [&](double lt) {
            return scf_objective(ca, ScalingPair{std::exp2(lt), 1.0}, cfg);
        };
    } else if (const auto* cap = std::get_if<BRateCap>(&objective)) {
        const double c = cap->cap;
        f = [&, c](double lt) {
            const ScalingPair beta{std::exp2(lt), 1.0};
            if (computation_rate(Node::B, ca, beta, cfg) > c) return kNegInf;
            return scf_objective(ca, beta, cfg);
        };
    } else {
        const auto& eve = std::get<EveObjective>(objective).cfg;
        f = [&, eve](double lt) { return eve_objective_value(ca, std::exp2(lt), eve); };
    }

    const RatioProbe probe = maximize_over_log_ratio(f, &res.evaluations);
    if (probe.value == kNegInf) {
        // No grid point satisfied the constraint; report the unconstrained
        // best with the infeasible flag set.
        res.feasible = false;
        long long e2 = 0;
        const RatioProbe fallback = maximize_over_log_ratio(
            [&](double lt) { return scf_objective(ca, ScalingPair{std::exp2(lt), 1.0}, cfg); },
            &e2);
        res.evaluations += e2;
        res.ratio = std::exp2(fallback.log2_t);
        res.value = fallback.value;
        return res;
    }
    res.ratio = std::exp2(probe.log2_t);
    res.value = probe.value;
    return res;
}

namespace {

SCFDesign make_design(const CoefficientPair& a, double ratio, const ChannelConfig& cfg) {
    SCFDesign d;
    d.coeffs = a;
    d.scalings = ScalingPair{ratio, 1.0};
    d.r_cf_a = computation_rate(Node::A, a, d.scalings, cfg);
    d.r_cf_b = computation_rate(Node::B, a, d.scalings, cfg);
    d.objective = scf_objective(a, d.scalings, cfg);
    d.leakage_bound = leakage_bound(cfg, std::max(d.r_cf_b, 0.0));
    return d;
}

template <class PerPair>
OptimizationResult run_pair_search(const ChannelConfig& cfg, int a_max, PerPair&& per_pair) {
    if (a_max < 1) throw std::invalid_argument("a_max must be >= 1");
    OptimizationResult out;
    out.value = kNegInf;
    bool found = false;
    // Canonical order (a1 asc, |a2| asc, positive a2 first) makes the
    // strict-greater comparison implement the documented tie-break.
    for (int a1 = 1; a1 <= a_max; ++a1) {
        for (int m = 1; m <= a_max; ++m) {
            if (std::gcd(a1, m) != 1) continue;
            for (int sign : {+1, -1}) {
                const CoefficientPair a{a1, sign * m};
                BetaSearchResult r = per_pair(a);
                out.evaluations += r.evaluations;
                if (!found || r.value > out.value) {
                    found = true;
                    out.value = r.value;
                    out.feasible = r.feasible;
                    out.best = make_design(a, r.ratio, cfg);
                }
            }
        }
    }
    return out;
}

}  // namespace

OptimizationResult search_coefficients(const ChannelConfig& cfg, int a_max,
                                       const BetaObjective& objective) {
    ensure_valid(cfg);
    OptimizationResult out = run_pair_search(
        cfg, a_max, [&](const CoefficientPair& a) { return optimize_beta(a, cfg, objective); });
    out.constrained = std::holds_alternative<BRateCap>(objective);
    return out;
}

OptimizationResult search_coefficients_custom(
    const ChannelConfig& cfg, int a_max,
    const std::function<double(const CoefficientPair&, double)>& value_at) {
    ensure_valid(cfg);
    return run_pair_search(cfg, a_max, [&](const CoefficientPair& a) {
        BetaSearchResult r;
        const RatioProbe probe = maximize_over_log_ratio(
            [&](double lt) { return value_at(a, lt); }, &r.evaluations);
        r.ratio = std::exp2(probe.log2_t);
        r.value = probe.value;
        r.feasible = probe.value != kNegInf;
        return r;
    });
}

ClosedFormOptimum closed_form_optimum(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    const double pa = cfg.p_a, pb = cfg.p_b;
    ClosedFormOptimum opt;
    opt.a = CoefficientPair{1, 1};
    opt.beta_ratio = std::sqrt(pb * (1.0 + pa) / (pa * (1.0 + pb)));
    const double diff = std::sqrt((1.0 + pa) * (1.0 + pb)) - std::sqrt(pa * pb);
    opt.value = 0.5 * std::log2((1.0 + pa + pb) / (diff * diff)) - 1.0;
    return opt;
}

}  // namespace scfsec
