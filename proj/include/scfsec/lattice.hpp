#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "scfsec/channel.hpp"
#include "scfsec/rational.hpp"

namespace scfsec {

struct NestingViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// One-dimensional nested integer lattice chain, the exact-arithmetic desk
/// surrogate for the scheme's lattice algebra. Fine lattice Z; mid (message
/// randomization) lattice m_s Z; coarse source lattice m_s m_e Z; jammer
/// coarse lattice m_b Z. Per dimension: messages live in [0, m_s),
/// randomization indices in [0, m_e), jammer words in [0, m_b).
struct ScalarLatticeChain {
    long long m_s = 2;  // message modulus
    long long m_e = 1;  // randomization modulus (1 = plain SCF code)
    long long m_b = 2;  // jammer modulus
    Rational beta_a{1};
    Rational beta_b{1};
    CoefficientPair coeffs{1, 1};
    int dims = 1;

    long long coarse_modulus() const { return m_s * m_e; }

    /// One coarse lattice nested in the other: m_b | m_s*m_e or m_s*m_e | m_b.
    bool nesting_ok() const {
        long long c = coarse_modulus();
        return c % m_b == 0 || m_b % c == 0;
    }

    void ensure_valid() const {
        if (m_s < 1 || m_e < 1 || m_b < 1)
            throw std::invalid_argument("lattice moduli must be positive");
        if (!(beta_a > Rational(0)) || !(beta_b > Rational(0)))
            throw std::invalid_argument("beta must be positive");
        if (coeffs.a1 == 0 || coeffs.a2 == 0)
            throw std::invalid_argument("coefficients must be nonzero");
        if (dims < 1) throw std::invalid_argument("dims must be >= 1");
    }
};

enum class ChainMode { Plain, Chain };

/// x - m * floor(x/m), in [0, m). Floor-to-multiple quantizer convention.
Rational mod_lattice(const Rational& x, const Rational& modulus);

/// Channel input of the source: [(T + V)/beta_A + D] mod (m_s m_e / beta_A),
/// with V = m_s * random_index. Plain mode is m_e = 1, V = 0.
std::vector<Rational> encode_source(const ScalarLatticeChain& chain,
                                    std::span<const long long> message,
                                    std::span<const long long> random_index,
                                    std::span<const Rational> dither);

/// Jammer input: [V_B/beta_B + D] mod (m_b / beta_B).
std::vector<Rational> encode_jammer(const ScalarLatticeChain& chain,
                                    std::span<const long long> v_b,
                                    std::span<const Rational> dither);

/// Decoded integer combination U^R = a1 (T + V_A) + a2 V_B. Decoding success
/// is granted at desk scale; this is the exact combination.
std::vector<long long> relay_combine(const ScalarLatticeChain& chain,
                                     std::span<const long long> t_a,
                                     std::span<const long long> v_a,
                                     std::span<const long long> v_b);

/// Relay output (U^R / a1) reduced by the coarse lattice (plain: m_s m_e) or
/// the mid lattice (chain: m_s).
std::vector<Rational> relay_modulo(const ScalarLatticeChain& chain, std::span<const long long> u_r,
                                   ChainMode mode);

/// Node-C recovery [u~ - (a2/a1) V_B] mod (m_s m_e | m_s). Requires the
/// nesting invariant (throws NestingViolation otherwise); under it the result
/// equals the transmitted lattice point exactly, for every input and dither.
std::vector<Rational> destination_recover(const ScalarLatticeChain& chain,
                                          std::span<const Rational> u_tilde,
                                          std::span<const long long> v_b, ChainMode mode);

struct SimOutcome {
    std::vector<long long> t_a;
    std::vector<long long> v_a;  // mid-lattice point m_s * index
    std::vector<long long> v_b;
    std::vector<long long> u_r;
    std::vector<Rational> u_tilde;
    std::vector<Rational> recovered;
    bool exact_match = false;
};

struct ChainTrialInput {
    std::vector<long long> message;       // in [0, m_s)
    std::vector<long long> random_index;  // in [0, m_e)
    std::vector<long long> v_b;           // in [0, m_b)
    std::vector<Rational> dither_a;
    std::vector<Rational> dither_b;
};

/// Full encode/combine/reduce/recover pass. The recovery target in chain mode
/// is T; in plain mode the transmitted point T + V_A (with m_e = 1 that is T).
SimOutcome run_chain_trial(const ScalarLatticeChain& chain, ChainMode mode,
                           const ChainTrialInput& in);

/// Draw a uniformly random trial input (dithers on the denominator <= 64
/// rational grid inside the fundamental regions). Deterministic in seed.
ChainTrialInput random_trial_input(const ScalarLatticeChain& chain, std::uint64_t seed);

enum class LeakageReduction { ModCoarse, None };

struct LeakageResult {
    double bits = 0.0;          // I(T; U) per dimension, exact-count based
    long long triples = 0;      // enumerated (T, V_A, V_B) combinations
    long long support = 0;      // number of distinct U values
    bool exactly_zero = false;  // independence held exactly in counts
};

/// Exhaustive mutual-information oracle: enumerates all uniform triples,
/// forms U = a1 (T + V_A) + a2 V_B (reduced mod m_s m_e if requested) and
/// computes I(T; U) from the exact joint counts. dims must be 1 and
/// m_s * m_e * m_b <= 2^20 (BudgetExceeded otherwise). When T and U are
/// exactly independent the returned value is exactly 0.0: every log term is
/// log2 of an exact integer ratio equal to one.
LeakageResult exhaustive_leakage(const ScalarLatticeChain& chain, LeakageReduction reduce);

}  // namespace scfsec
