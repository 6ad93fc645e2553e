#include "scfsec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "scfsec/baselines.hpp"
#include "scfsec/schemes.hpp"

namespace scfsec {

namespace {

struct SchemeNameEntry {
    const char* name;
    SchemeId id;
};

constexpr SchemeNameEntry kSchemes[] = {
    {"capacity", SchemeId::Capacity},
    {"upper", SchemeId::Upper},
    {"rb", SchemeId::Rb},
    {"lc", SchemeId::Lc},
    {"combined", SchemeId::Combined},
    {"he_cf", SchemeId::HeCf},
    {"zhang_mf", SchemeId::ZhangMf},
    {"sun_af", SchemeId::SunAf},
    {"he2_cnf", SchemeId::He2Cnf},
    {"vatedka_perfect", SchemeId::VatedkaPerfect},
    {"eve_rb", SchemeId::EveRb},
};

constexpr SchemeNameEntry kAliases[] = {
    {"he", SchemeId::HeCf},   {"zhang", SchemeId::ZhangMf},      {"sun", SchemeId::SunAf},
    {"he2", SchemeId::He2Cnf}, {"vatedka", SchemeId::VatedkaPerfect},
};

bool is_symmetric(const ChannelConfig& cfg) {
    return cfg.p_a == cfg.p_b && cfg.p_b == cfg.p_r;
}

}  // namespace

std::optional<SchemeId> scheme_from_name(std::string_view name) {
    for (const auto& e : kSchemes)
        if (name == e.name) return e.id;
    for (const auto& e : kAliases)
        if (name == e.name) return e.id;
    return std::nullopt;
}

const char* scheme_name(SchemeId id) {
    for (const auto& e : kSchemes)
        if (e.id == id) return e.name;
    return "?";
}

std::vector<std::string> scheme_names() {
    std::vector<std::string> names;
    for (const auto& e : kSchemes) names.emplace_back(e.name);
    return names;
}

double scheme_rate(SchemeId id, const ChannelConfig& cfg) {
    switch (id) {
        case SchemeId::Capacity:
            return std::min(gaussian_capacity(cfg.p_a), gaussian_capacity(cfg.p_r));
        case SchemeId::Upper: return secrecy_upper_bound(cfg).effective;
        case SchemeId::Rb: return rb_rate(cfg);
        case SchemeId::Lc: return lc_rate(cfg);
        case SchemeId::Combined: return combined_lower_bound(cfg);
        case SchemeId::HeCf: return cf_rate_he(cfg);
        case SchemeId::ZhangMf: return mf_rate_zhang(cfg).value;
        case SchemeId::SunAf: return af_rate_sun(cfg).value;
        case SchemeId::He2Cnf: return cnf_rate_he2(cfg.p_a);
        case SchemeId::VatedkaPerfect: return perfect_rate_vatedka(cfg.p_a);
        case SchemeId::EveRb: break;
    }
    throw std::invalid_argument("eve_rb needs the eavesdropper config");
}

void SweepResult::check() const {
    for (const auto& [x, rates] : rows) {
        (void)x;
        if (rates.size() != scheme_labels.size())
            throw std::logic_error("SweepResult: row width mismatch");
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (!(rows[i].first < rows[i + 1].first))
            throw std::logic_error("SweepResult: x values must be strictly increasing");
}

std::optional<VaryParam> vary_from_name(std::string_view name) {
    if (name == "pa") return VaryParam::Pa;
    if (name == "pb") return VaryParam::Pb;
    if (name == "pr") return VaryParam::Pr;
    if (name == "sigma2") return VaryParam::Sigma2;
    if (name == "h2p") return VaryParam::H2p;
    return std::nullopt;
}

namespace {

// Configures both model variants for one x value (axis units).
using Configure = std::function<void(double, ChannelConfig&, EveChannelConfig&)>;

std::vector<double> rates_for(const std::vector<SchemeId>& schemes, const ChannelConfig& cfg,
                              const EveChannelConfig& eve, std::vector<std::string>* warnings) {
    std::vector<double> rates;
    rates.reserve(schemes.size());
    for (SchemeId id : schemes) {
        if (id == SchemeId::EveRb) {
            rates.push_back(eve_rb_rate(eve));
            continue;
        }
        if (warnings) {
            if ((id == SchemeId::SunAf || id == SchemeId::ZhangMf) && cfg.sigma2 > 0.0)
                warnings->push_back(std::string(scheme_name(id)) +
                                    ": defined for sigma = 0; sigma2 ignored");
            if ((id == SchemeId::He2Cnf || id == SchemeId::VatedkaPerfect) && !is_symmetric(cfg))
                warnings->push_back(std::string(scheme_name(id)) +
                                    ": closed form assumes P_A = P_B = P_R");
        }
        rates.push_back(scheme_rate(id, cfg));
    }
    return rates;
}

SweepResult run_grid(std::string x_label, std::vector<SchemeId> schemes,
                     const std::vector<double>& xs, const ChannelConfig& base,
                     const EveChannelConfig& eve_base, const Configure& configure, int threads) {
    SweepResult out;
    out.x_label = std::move(x_label);
    for (SchemeId id : schemes) out.scheme_labels.emplace_back(scheme_name(id));
    out.rows.resize(xs.size());

    auto row_at = [&](std::size_t i, std::vector<std::string>* warn) {
        ChannelConfig cfg = base;
        EveChannelConfig eve = eve_base;
        configure(xs[i], cfg, eve);
        return std::pair{xs[i], rates_for(schemes, cfg, eve, warn)};
    };

    // First row on the caller thread so warnings are collected exactly once.
    out.rows[0] = row_at(0, &out.warnings);

    const unsigned hw = std::thread::hardware_concurrency();
    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads) : (hw > 0 ? hw : 1u);
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(xs.size()));
    std::atomic<std::size_t> next{1};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < xs.size(); i = next.fetch_add(1)) {
            try {
                out.rows[i] = row_at(i, nullptr);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    out.check();
    return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("need at least 2 grid points");
    if (!(lo < hi)) throw std::invalid_argument("range must satisfy from < to");
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

}  // namespace

SweepResult run_sweep(const SweepRequest& req) {
    if (req.schemes.empty()) throw std::invalid_argument("sweep needs at least one scheme");
    const VaryParam vary = req.vary;
    Configure configure = [vary](double x_db, ChannelConfig& cfg, EveChannelConfig& eve) {
        const double lin = db_to_linear(x_db);
        switch (vary) {
            case VaryParam::Pa: cfg.p_a = lin; eve.p_a = lin; break;
            case VaryParam::Pb: cfg.p_b = lin; eve.p_b = lin; break;
            case VaryParam::Pr: cfg.p_r = lin; eve.p_r = lin; break;
            case VaryParam::Sigma2: cfg.sigma2 = lin; break;
            case VaryParam::H2p: eve.h2p = lin; break;
        }
    };
    return run_grid("x_db", req.schemes, linspace(req.from_db, req.to_db, req.steps), req.base,
                    req.eve_base, configure, req.threads);
}

namespace {

const std::vector<SchemeId> kComparisonSchemes = {
    SchemeId::Capacity, SchemeId::Upper,   SchemeId::Rb,    SchemeId::Lc,
    SchemeId::HeCf,     SchemeId::ZhangMf, SchemeId::SunAf,
};

constexpr double kP20 = 100.0;   // 20 dB
constexpr double kP30 = 1000.0;  // 30 dB

}  // namespace

std::vector<std::string> figure_names() {
    return {"fig4",  "fig5a", "fig5b", "fig5c", "fig6a", "fig6b", "fig6c",
            "fig6d", "fig6e", "fig6f", "fig7a", "fig7b", "fig9"};
}

SweepResult run_figure(const std::string& name, std::optional<double> from_db,
                       std::optional<double> to_db, std::optional<int> steps, int threads) {
    auto grid = [&](double lo, double hi, int n) {
        return linspace(from_db.value_or(lo), to_db.value_or(hi), steps.value_or(n));
    };
    const EveChannelConfig no_eve{1, 1, 1, 1, 1, 1, 1, 1};
    auto db_sweep = [&](std::vector<SchemeId> schemes, ChannelConfig base,
                        std::vector<double> xs, auto&& apply) {
        Configure configure = [apply](double x_db, ChannelConfig& cfg, EveChannelConfig&) {
            apply(cfg, db_to_linear(x_db));
        };
        return run_grid("x_db", std::move(schemes), xs, base, no_eve, configure, threads);
    };

    if (name == "fig4")
        return db_sweep({SchemeId::Capacity, SchemeId::Upper, SchemeId::Rb, SchemeId::Lc,
                         SchemeId::HeCf, SchemeId::ZhangMf, SchemeId::SunAf, SchemeId::He2Cnf,
                         SchemeId::VatedkaPerfect},
                        ChannelConfig{1, 1, 1, 0}, grid(0, 40, 81),
                        [](ChannelConfig& c, double p) { c.p_a = c.p_b = c.p_r = p; });
    if (name == "fig5a")
        return db_sweep({SchemeId::Capacity, SchemeId::Upper, SchemeId::Rb, SchemeId::Lc},
                        ChannelConfig{kP30, kP30, 1, 0}, grid(0, 30, 61),
                        [](ChannelConfig& c, double p) { c.p_r = p; });
    if (name == "fig5b")
        return db_sweep({SchemeId::Capacity, SchemeId::Upper, SchemeId::Rb, SchemeId::Lc},
                        ChannelConfig{kP30, kP30, kP30, 0}, grid(-5, 20, 51),
                        [](ChannelConfig& c, double s2) { c.sigma2 = s2; });
    if (name == "fig5c")
        return db_sweep({SchemeId::Capacity, SchemeId::Upper, SchemeId::Rb, SchemeId::Lc},
                        ChannelConfig{kP20, kP20, 1, db_to_linear(3.0)}, grid(0, 30, 61),
                        [](ChannelConfig& c, double p) { c.p_r = p; });
    if (name == "fig6a")
        return db_sweep(kComparisonSchemes, ChannelConfig{1, kP20, kP20, 0}, grid(0, 20, 41),
                        [](ChannelConfig& c, double p) { c.p_a = p; });
    if (name == "fig6b")
        return db_sweep(kComparisonSchemes, ChannelConfig{kP20, 1, kP20, 0}, grid(0, 20, 41),
                        [](ChannelConfig& c, double p) { c.p_b = p; });
    if (name == "fig6c")
        return db_sweep(kComparisonSchemes, ChannelConfig{kP20, kP20, 1, 0}, grid(0, 30, 61),
                        [](ChannelConfig& c, double p) { c.p_r = p; });
    if (name == "fig6d")
        return db_sweep(kComparisonSchemes, ChannelConfig{1, 1, 1, 0}, grid(0, 40, 81),
                        [](ChannelConfig& c, double p) {
                            c.p_a = p;
                            c.p_b = 10.0 * p;
                            c.p_r = p;
                        });
    if (name == "fig6e")
        return db_sweep(kComparisonSchemes, ChannelConfig{1, 1, 1, 0}, grid(0, 40, 81),
                        [](ChannelConfig& c, double p) {
                            c.p_a = p;
                            c.p_b = 0.1 * p;
                            c.p_r = p;
                        });
    if (name == "fig6f")
        return db_sweep(kComparisonSchemes, ChannelConfig{1, 1, kP20, 0}, grid(0, 40, 81),
                        [](ChannelConfig& c, double p) {
                            c.p_a = p;
                            c.p_b = 0.1 * p;
                        });
    if (name == "fig7a")
        return db_sweep({SchemeId::Capacity, SchemeId::Upper, SchemeId::Rb, SchemeId::Lc,
                         SchemeId::HeCf},
                        ChannelConfig{kP30, kP30, kP30, 0}, grid(-5, 20, 51),
                        [](ChannelConfig& c, double s2) { c.sigma2 = s2; });
    if (name == "fig7b")
        return db_sweep({SchemeId::Capacity, SchemeId::Upper, SchemeId::Rb, SchemeId::Lc,
                         SchemeId::HeCf},
                        ChannelConfig{kP20, kP20, 1, db_to_linear(3.0)}, grid(0, 30, 61),
                        [](ChannelConfig& c, double p) { c.p_r = p; });
    if (name == "fig9") {
        // Eavesdropper channel; h2' on a linear axis.
        const std::vector<double> xs =
            linspace(from_db.value_or(0.5), to_db.value_or(3.0), steps.value_or(51));
        const EveChannelConfig eve{kP20, kP20, kP20, 1.0, 1.0, 1.0, 1.0, 1.0};
        Configure configure = [](double h2p, ChannelConfig&, EveChannelConfig& e) {
            e.h2p = h2p;
        };
        return run_grid("h2p", {SchemeId::EveRb}, xs, ChannelConfig{kP20, kP20, kP20, 0}, eve,
                        configure, threads);
    }
    throw std::invalid_argument("unknown figure: " + name);
}

std::string to_csv(const SweepResult& result, bool clamped) {
    result.check();
    std::string csv = result.x_label;
    for (const auto& label : result.scheme_labels) {
        csv += ',';
        csv += label;
    }
    csv += '\n';
    char buf[64];
    for (const auto& [x, rates] : result.rows) {
        std::snprintf(buf, sizeof buf, "%.6f", x);
        csv += buf;
        for (double r : rates) {
            const double v = clamped ? std::max(0.0, r) : r;
            std::snprintf(buf, sizeof buf, ",%.6f", v);
            csv += buf;
        }
        csv += '\n';
    }
    return csv;
}

}  // namespace scfsec
