#include "scfsec/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace scfsec {

double gaussian_capacity(double snr) {
    if (snr < 0.0) throw std::domain_error("NegativeSnr: capacity requires snr >= 0");
    return 0.5 * std::log2(1.0 + snr);
}

UpperBoundResult secrecy_upper_bound(const ChannelConfig& cfg) {
    if (cfg.p_b <= 0.0) {
        // 0/0 in the rho expression; the numeric limit is zero rate.
        return UpperBoundResult{0.0, 0.0, 0.0};
    }
    ensure_valid(cfg);
    const double pa = cfg.p_a, pb = cfg.p_b;
    const double disc = 4.0 * pb * pa * pa + 4.0 * pb * pa + pb * pb * pa * pa +
                        2.0 * pb * pb * pa + pb * pb;
    const double rho = (2.0 * pa + pa * pb + pb - std::sqrt(disc)) / (2.0 * pa);
    const double num = (pa + 1.0) * (pa + pb + 1.0) - (pa + rho) * (pa + rho);
    const double den = (pa + pb + 1.0) * (1.0 - rho * rho);
    UpperBoundResult r;
    r.rho = rho;
    r.r_b = 0.5 * std::log2(num / den);
    r.effective = std::min(r.r_b, gaussian_capacity(cfg.p_r));
    return r;
}

BaselineRate af_rate_sun(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    const double pa = cfg.p_a, pb = cfg.p_b, pr = cfg.p_r;
    BaselineRate r;
    r.sigma_ignored = cfg.sigma2 > 0.0;
    r.value = 0.5 * std::log2(1.0 + pa * pr / (pa + pb + pr + 1.0)) -
              0.5 * std::log2(1.0 + pa / (pb + 1.0));
    return r;
}

BaselineRate mf_rate_zhang(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    const double pa = cfg.p_a, pb = cfg.p_b, pr = cfg.p_r;
    BaselineRate r;
    r.sigma_ignored = cfg.sigma2 > 0.0;
    r.value = 0.5 * std::log2((pa + pr + pa * pr + 1.0) / (pa + pr + 2.0)) -
              0.5 * std::log2(1.0 + pa / (pb + 1.0));
    return r;
}

namespace {

double he_objective(double p_a, double p_b, double p_r, double s2) {
    const double sc2 = (p_a + 1.0 + (s2 > 0.0 ? p_b * s2 / (p_b + s2) : 0.0)) / p_r;
    const double den = (1.0 + s2 + sc2) - (s2 > 0.0 ? s2 * s2 / (p_b + s2) : 0.0);
    return 0.5 * std::log2(1.0 + p_a / den) - 0.5 * std::log2(1.0 + p_a / (1.0 + p_b));
}

// Golden-section maximization over [lo, hi], tracking the best probe. The
// best-probe tracking keeps the result safe even off unimodal brackets.
template <class F>
double golden_max(F&& f, double lo, double hi, double* best_x = nullptr) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    double bx = f1 >= f2 ? x1 : x2;
    double bv = std::max(f1, f2);
    while (hi - lo > 1e-8) {
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
        if (f1 > bv) bv = f1, bx = x1;
        if (f2 > bv) bv = f2, bx = x2;
    }
    if (best_x) *best_x = bx;
    return bv;
}

}  // namespace

double cf_rate_he(const ChannelConfig& cfg) {
    ensure_valid(cfg);
    const double s2 = cfg.sigma2, pr = cfg.p_r;

    // Coarse 64x64 log grid over (0, P_i], then coordinate-wise
    // golden-section refinement. The objective can peak in the interior
    // (the first term saturates at C(P_R) while the penalty keeps growing).
    constexpr int n = 64;
    auto grid_point = [](double cap, int i) {
        return cap * std::pow(10.0, -9.0 * (1.0 - double(i) / (n - 1)));
    };
    double best = -std::numeric_limits<double>::infinity();
    double best_a = cfg.p_a, best_b = cfg.p_b;
    for (int i = 0; i < n; ++i) {
        const double pa = grid_point(cfg.p_a, i);
        for (int j = 0; j < n; ++j) {
            const double pb = grid_point(cfg.p_b, j);
            const double v = he_objective(pa, pb, pr, s2);
            if (v > best) {
                best = v;
                best_a = pa;
                best_b = pb;
            }
        }
    }
    for (int pass = 0; pass < 3; ++pass) {
        const double la = std::log(best_a);
        golden_max(
            [&](double l) { return he_objective(std::exp(l), best_b, pr, s2); },
            std::max(std::log(cfg.p_a) - 9.0 * std::log(10.0), la - 1.0),
            std::min(std::log(cfg.p_a), la + 1.0), &best_a);
        best_a = std::exp(best_a);
        const double lb = std::log(best_b);
        golden_max(
            [&](double l) { return he_objective(best_a, std::exp(l), pr, s2); },
            std::max(std::log(cfg.p_b) - 9.0 * std::log(10.0), lb - 1.0),
            std::min(std::log(cfg.p_b), lb + 1.0), &best_b);
        best_b = std::exp(best_b);
        best = std::max(best, he_objective(best_a, best_b, pr, s2));
    }
    return best;
}

double cnf_rate_he2(double p_a) {
    if (!(p_a > 0.0)) throw std::domain_error("cnf_rate_he2 requires p_a > 0");
    return 0.5 * std::log2(0.5 + p_a) - 1.0;
}

double perfect_rate_vatedka(double p_a) {
    if (!(p_a > 0.0)) throw std::domain_error("perfect_rate_vatedka requires p_a > 0");
    return 0.5 * std::log2(0.5 + p_a) - 1.0 - std::log2(std::exp(1.0));
}

}  // namespace scfsec
