#include "scfsec/lattice.hpp"

#include <cmath>
#include <map>
#include <random>

namespace scfsec {

namespace {

constexpr long long kLeakageBudget = 1LL << 20;

void check_span(std::size_t got, int dims, const char* what) {
    if (got != static_cast<std::size_t>(dims))
        throw std::invalid_argument(std::string(what) + ": wrong number of dimensions");
}

}  // namespace

Rational mod_lattice(const Rational& x, const Rational& modulus) {
    if (!(modulus > Rational(0))) throw ZeroModulus("mod_lattice: modulus must be positive");
    const Rational q = x / modulus;
    return x - modulus * Rational(q.floor());
}

std::vector<Rational> encode_source(const ScalarLatticeChain& chain,
                                    std::span<const long long> message,
                                    std::span<const long long> random_index,
                                    std::span<const Rational> dither) {
    chain.ensure_valid();
    check_span(message.size(), chain.dims, "message");
    check_span(random_index.size(), chain.dims, "random_index");
    check_span(dither.size(), chain.dims, "dither");
    const Rational coarse(chain.coarse_modulus());
    const Rational region = coarse / chain.beta_a;
    std::vector<Rational> x;
    x.reserve(chain.dims);
    for (int d = 0; d < chain.dims; ++d) {
        if (message[d] < 0 || message[d] >= chain.m_s)
            throw IndexOutOfRange("encode_source: message outside [0, m_s)");
        if (random_index[d] < 0 || random_index[d] >= chain.m_e)
            throw IndexOutOfRange("encode_source: random index outside [0, m_e)");
        const Rational point(message[d] + chain.m_s * random_index[d]);
        x.push_back(mod_lattice(point / chain.beta_a + dither[d], region));
    }
    return x;
}

std::vector<Rational> encode_jammer(const ScalarLatticeChain& chain,
                                    std::span<const long long> v_b,
                                    std::span<const Rational> dither) {
    chain.ensure_valid();
    check_span(v_b.size(), chain.dims, "v_b");
    check_span(dither.size(), chain.dims, "dither");
    const Rational region = Rational(chain.m_b) / chain.beta_b;
    std::vector<Rational> x;
    x.reserve(chain.dims);
    for (int d = 0; d < chain.dims; ++d) {
        if (v_b[d] < 0 || v_b[d] >= chain.m_b)
            throw IndexOutOfRange("encode_jammer: word outside [0, m_b)");
        x.push_back(mod_lattice(Rational(v_b[d]) / chain.beta_b + dither[d], region));
    }
    return x;
}

std::vector<long long> relay_combine(const ScalarLatticeChain& chain,
                                     std::span<const long long> t_a,
                                     std::span<const long long> v_a,
                                     std::span<const long long> v_b) {
    chain.ensure_valid();
    check_span(t_a.size(), chain.dims, "t_a");
    check_span(v_a.size(), chain.dims, "v_a");
    check_span(v_b.size(), chain.dims, "v_b");
    std::vector<long long> u;
    u.reserve(chain.dims);
    for (int d = 0; d < chain.dims; ++d)
        u.push_back(chain.coeffs.a1 * (t_a[d] + v_a[d]) + chain.coeffs.a2 * v_b[d]);
    return u;
}

std::vector<Rational> relay_modulo(const ScalarLatticeChain& chain, std::span<const long long> u_r,
                                   ChainMode mode) {
    chain.ensure_valid();
    check_span(u_r.size(), chain.dims, "u_r");
    const Rational modulus(mode == ChainMode::Plain ? chain.coarse_modulus() : chain.m_s);
    std::vector<Rational> out;
    out.reserve(chain.dims);
    for (int d = 0; d < chain.dims; ++d)
        out.push_back(mod_lattice(Rational(u_r[d]) / Rational(chain.coeffs.a1), modulus));
    return out;
}

std::vector<Rational> destination_recover(const ScalarLatticeChain& chain,
                                          std::span<const Rational> u_tilde,
                                          std::span<const long long> v_b, ChainMode mode) {
    chain.ensure_valid();
    if (!chain.nesting_ok())
        throw NestingViolation("destination_recover: coarse lattices are not nested");
    check_span(u_tilde.size(), chain.dims, "u_tilde");
    check_span(v_b.size(), chain.dims, "v_b");
    const Rational modulus(mode == ChainMode::Plain ? chain.coarse_modulus() : chain.m_s);
    const Rational scale = Rational(chain.coeffs.a2) / Rational(chain.coeffs.a1);
    std::vector<Rational> out;
    out.reserve(chain.dims);
    for (int d = 0; d < chain.dims; ++d)
        out.push_back(mod_lattice(u_tilde[d] - scale * Rational(v_b[d]), modulus));
    return out;
}

SimOutcome run_chain_trial(const ScalarLatticeChain& chain, ChainMode mode,
                           const ChainTrialInput& in) {
    chain.ensure_valid();
    if (mode == ChainMode::Plain && chain.m_e != 1)
        throw std::invalid_argument("plain mode requires m_e = 1");
    SimOutcome out;
    out.t_a = in.message;
    out.v_a.reserve(chain.dims);
    for (int d = 0; d < chain.dims; ++d) out.v_a.push_back(chain.m_s * in.random_index[d]);
    out.v_b = in.v_b;

    // Channel inputs are formed (and range-checked) even though the granted
    // relay decoder works on the lattice points directly.
    const auto x_a = encode_source(chain, in.message, in.random_index, in.dither_a);
    const auto x_b = encode_jammer(chain, in.v_b, in.dither_b);
    const Rational region_a = Rational(chain.coarse_modulus()) / chain.beta_a;
    const Rational region_b = Rational(chain.m_b) / chain.beta_b;
    for (int d = 0; d < chain.dims; ++d) {
        if (x_a[d] < Rational(0) || !(x_a[d] < region_a))
            throw std::logic_error("source input left its fundamental region");
        if (x_b[d] < Rational(0) || !(x_b[d] < region_b))
            throw std::logic_error("jammer input left its fundamental region");
    }

    out.u_r = relay_combine(chain, out.t_a, out.v_a, out.v_b);
    out.u_tilde = relay_modulo(chain, out.u_r, mode);
    out.recovered = destination_recover(chain, out.u_tilde, out.v_b, mode);

    out.exact_match = true;
    for (int d = 0; d < chain.dims; ++d) {
        const long long target =
            mode == ChainMode::Chain ? out.t_a[d] : out.t_a[d] + out.v_a[d];
        out.exact_match &= out.recovered[d] == Rational(target);
    }
    return out;
}

ChainTrialInput random_trial_input(const ScalarLatticeChain& chain, std::uint64_t seed) {
    chain.ensure_valid();
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](long long n) {
        return static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
    };
    ChainTrialInput in;
    const Rational region_a = Rational(chain.coarse_modulus()) / chain.beta_a;
    const Rational region_b = Rational(chain.m_b) / chain.beta_b;
    // Dithers on the rational grid with denominator <= 64, inside [0, region).
    auto dither = [&](const Rational& region) {
        const long long den = uniform(64) + 1;
        const long long max_num = (region * Rational(den)).floor();
        if (max_num < 1) return Rational(0);
        return Rational(uniform(max_num), den);
    };
    for (int d = 0; d < chain.dims; ++d) {
        in.message.push_back(uniform(chain.m_s));
        in.random_index.push_back(uniform(chain.m_e));
        in.v_b.push_back(uniform(chain.m_b));
        in.dither_a.push_back(dither(region_a));
        in.dither_b.push_back(dither(region_b));
    }
    return in;
}

LeakageResult exhaustive_leakage(const ScalarLatticeChain& chain, LeakageReduction reduce) {
    chain.ensure_valid();
    if (chain.dims != 1)
        throw std::invalid_argument("exhaustive_leakage: enumeration is per dimension (dims = 1)");
    if (chain.m_s * chain.m_e * chain.m_b > kLeakageBudget)
        throw BudgetExceeded("exhaustive_leakage: m_s*m_e*m_b exceeds 2^20");

    // Exact joint counts over the uniform (T, V_A, V_B) grid. T is uniform,
    // so H(U|T) needs only the per-T conditional counts.
    const long long coarse = chain.coarse_modulus();
    std::map<std::pair<long long, long long>, long long> joint;
    std::map<long long, long long> marginal_u;
    for (long long t = 0; t < chain.m_s; ++t) {
        for (long long ai = 0; ai < chain.m_e; ++ai) {
            for (long long vb = 0; vb < chain.m_b; ++vb) {
                long long u = chain.coeffs.a1 * (t + chain.m_s * ai) + chain.coeffs.a2 * vb;
                if (reduce == LeakageReduction::ModCoarse) {
                    u %= coarse;
                    if (u < 0) u += coarse;
                }
                ++joint[{t, u}];
                ++marginal_u[u];
            }
        }
    }
    const long long n = chain.m_s * chain.m_e * chain.m_b;
    const long long per_t = chain.m_e * chain.m_b;

    LeakageResult res;
    res.triples = n;
    res.support = static_cast<long long>(marginal_u.size());
    res.exactly_zero = true;
    double bits = 0.0;
    for (const auto& [tu, c] : joint) {
        const long long cu = marginal_u.at(tu.second);
        // ratio = P(t,u) / (P(t) P(u)) as an exact integer quotient;
        // c * n and per_t * cu stay below 2^40 << 2^53, so the doubles are
        // exact and independence yields log2(1.0) == 0.0 exactly.
        const double ratio = static_cast<double>(c * n) / static_cast<double>(per_t * cu);
        if (c * n != per_t * cu) res.exactly_zero = false;
        bits += (static_cast<double>(c) / static_cast<double>(n)) * std::log2(ratio);
    }
    res.bits = res.exactly_zero ? 0.0 : bits;
    return res;
}

}  // namespace scfsec
