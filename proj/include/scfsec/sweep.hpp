#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scfsec/channel.hpp"

namespace scfsec {

enum class SchemeId {
    Capacity,  // no-secrecy two-hop capacity min(C(P_A), C(P_R))
    Upper,     // min(R_b, C(P_R))
    Rb,
    Lc,
    Combined,
    HeCf,
    ZhangMf,
    SunAf,
    He2Cnf,
    VatedkaPerfect,
    EveRb,
};

std::optional<SchemeId> scheme_from_name(std::string_view name);
const char* scheme_name(SchemeId id);
std::vector<std::string> scheme_names();

/// Raw (unclamped) rate of one scheme at one config. EveRb is not part of the
/// untrusted-relay family and throws here; use eve_rb_rate directly.
double scheme_rate(SchemeId id, const ChannelConfig& cfg);

/// Tabular rate-vs-parameter data. Rows hold raw rates; clamping happens at
/// CSV emission.
struct SweepResult {
    std::string x_label;
    std::vector<std::string> scheme_labels;
    std::vector<std::pair<double, std::vector<double>>> rows;
    std::vector<std::string> warnings;

    void check() const;  // one value per label per row, x strictly increasing
};

enum class VaryParam { Pa, Pb, Pr, Sigma2, H2p };

std::optional<VaryParam> vary_from_name(std::string_view name);

struct SweepRequest {
    VaryParam vary = VaryParam::Pa;
    double from_db = 0.0;
    double to_db = 20.0;
    int steps = 41;
    ChannelConfig base;         // non-varied untrusted-model parameters
    EveChannelConfig eve_base;  // used by EveRb (and H2p sweeps)
    std::vector<SchemeId> schemes;
    int threads = 0;  // 0 = hardware concurrency
};

/// Evaluate every scheme on the dB grid. Grid points are dispatched to a
/// worker pool; rows are assembled in input order, so output is
/// deterministic regardless of thread count.
SweepResult run_sweep(const SweepRequest& req);

std::vector<std::string> figure_names();

/// Preset sweeps reproducing the paper's comparison figures. Ranges are the
/// declared defaults and can be overridden.
SweepResult run_figure(const std::string& name, std::optional<double> from_db,
                       std::optional<double> to_db, std::optional<int> steps, int threads);

/// Fixed 6-decimal CSV, '.' separator, header "x_label,scheme,...". Clamped
/// emission floors every rate at 0; raw emission keeps negatives.
std::string to_csv(const SweepResult& result, bool clamped);

}  // namespace scfsec
