#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "scfsec/lattice.hpp"

namespace scfsec {

/// Outer random-binning code parameters. bins = 2^floor(l * H); each holds at
/// most bin_size = 2^floor(l' * N * R_o) codewords, where
/// l' = l * H / (N * (R_t - R_o)). Codewords are length-ceil(l') sequences
/// over the inner (lattice codebook) alphabet.
struct BinningCodeSpec {
    long long l = 1;
    double l_prime = 1.0;
    long long bins = 1;
    long long bin_size = 1;
    std::uint64_t seed = 0;
};

/// Derive the spec from the rate parameters. Requires r_t > r_o > 0 and
/// l * h_bits >= 1.
BinningCodeSpec make_binning_spec(long long l, double h_bits, int n_dims, double r_t, double r_o,
                                  std::uint64_t seed);

class BinningCode {
  public:
    /// Build the code table: min(alphabet^ceil(l'), bins * bin_size) distinct
    /// codewords, each dropped into a uniformly random bin; a codeword whose
    /// bin is already full is discarded (bin_size is an upper bound, so
    /// assignment must not force fullness). bins * bin_size <= 2^22
    /// (BudgetExceeded otherwise).
    BinningCode(const BinningCodeSpec& spec, long long inner_alphabet);

    const BinningCodeSpec& spec() const { return spec_; }
    long long inner_alphabet() const { return alphabet_; }
    int codeword_length() const { return codeword_len_; }
    long long stored_codewords() const { return stored_; }
    long long discarded_codewords() const { return discarded_; }
    long long empty_bins() const { return empty_bins_; }

    struct Encoded {
        std::uint64_t codeword = 0;  // symbols packed base `inner_alphabet`
        bool empty_bin_fallback = false;
    };

    /// Uniformly random codeword from the labeled bin; an empty bin falls
    /// back to a random codeword sequence and flags the event.
    Encoded encode(long long label, std::uint64_t trial_seed) const;

    /// Table lookup; nullopt for codewords not in any bin.
    std::optional<long long> decode(std::uint64_t codeword) const;

    std::vector<std::uint64_t> bin(long long label) const;

  private:
    BinningCodeSpec spec_;
    long long alphabet_ = 2;
    int codeword_len_ = 1;
    long long stored_ = 0;
    long long discarded_ = 0;
    long long empty_bins_ = 0;
    std::vector<std::vector<std::uint64_t>> bins_;
    std::unordered_map<std::uint64_t, long long> decoder_;
};

struct RoundtripResult {
    long long trials = 0;
    long long failures = 0;          // decoded label != sent label
    long long empty_bin_events = 0;  // encoder fell back to a random word
};

/// Encode-then-decode each label; per-trial RNG stream seed = seed + index.
RoundtripResult binning_roundtrip(const BinningCode& code, std::span<const long long> labels,
                                  std::uint64_t seed);

}  // namespace scfsec
