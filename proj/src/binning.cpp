#include "scfsec/binning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

namespace scfsec {

namespace {
constexpr long long kBinBudget = 1LL << 22;
}

BinningCodeSpec make_binning_spec(long long l, double h_bits, int n_dims, double r_t, double r_o,
                                  std::uint64_t seed) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    if (n_dims < 1) throw std::invalid_argument("n_dims must be >= 1");
    if (!(r_o > 0.0) || !(r_t > r_o))
        throw std::invalid_argument("rates must satisfy r_t > r_o > 0");
    if (!(h_bits > 0.0)) throw std::invalid_argument("h_bits must be positive");
    BinningCodeSpec spec;
    spec.l = l;
    spec.l_prime = static_cast<double>(l) * h_bits / (n_dims * (r_t - r_o));
    const double label_bits = std::floor(static_cast<double>(l) * h_bits);
    const double size_bits = std::floor(spec.l_prime * n_dims * r_o);
    if (label_bits < 1.0) throw std::invalid_argument("l*H must be >= 1 bit");
    if (label_bits > 40.0 || size_bits > 40.0)
        throw BudgetExceeded("binning spec exceeds the desk-scale budget");
    spec.bins = 1LL << static_cast<long long>(label_bits);
    spec.bin_size = 1LL << static_cast<long long>(size_bits);
    spec.seed = seed;
    return spec;
}

BinningCode::BinningCode(const BinningCodeSpec& spec, long long inner_alphabet)
    : spec_(spec), alphabet_(inner_alphabet) {
    if (inner_alphabet < 2) throw std::invalid_argument("inner alphabet must have >= 2 symbols");
    if (spec.bins < 1 || spec.bin_size < 1) throw std::invalid_argument("bins and bin_size >= 1");
    const long long capacity = spec.bins * spec.bin_size;
    if (capacity > kBinBudget || spec.bins > kBinBudget / spec.bin_size)
        throw BudgetExceeded("binning code exceeds the 2^22 codeword budget");
    codeword_len_ = static_cast<int>(std::ceil(spec.l_prime - 1e-12));
    if (codeword_len_ < 1) codeword_len_ = 1;

    // Codeword space size, saturating; packed-symbol codewords need the
    // space to fit 63 bits.
    const double space_bits = codeword_len_ * std::log2(static_cast<double>(alphabet_));
    if (space_bits > 62.0)
        throw BudgetExceeded("codeword space exceeds the packed 64-bit representation");
    long long space = 1;
    for (int i = 0; i < codeword_len_; ++i) space *= alphabet_;

    const long long n_codewords = std::min(space, capacity);
    std::mt19937_64 rng(spec.seed);

    // Distinct codewords: sample without replacement. A partial
    // Fisher-Yates covers the dense case; rejection covers sparse draws
    // from a large space.
    std::vector<std::uint64_t> words;
    words.reserve(n_codewords);
    if (space <= 4 * n_codewords) {
        std::vector<std::uint64_t> all(space);
        std::iota(all.begin(), all.end(), 0);
        for (long long i = 0; i < n_codewords; ++i) {
            const auto j = i + static_cast<long long>(rng() % (space - i));
            std::swap(all[i], all[j]);
            words.push_back(all[i]);
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(n_codewords * 2);
        while (static_cast<long long>(words.size()) < n_codewords) {
            const std::uint64_t w = rng() % space;
            if (seen.insert(w).second) words.push_back(w);
        }
    }

    bins_.resize(spec.bins);
    decoder_.reserve(n_codewords * 2);
    for (const std::uint64_t w : words) {
        const long long b = static_cast<long long>(rng() % static_cast<std::uint64_t>(spec.bins));
        if (static_cast<long long>(bins_[b].size()) >= spec.bin_size) {
            ++discarded_;  // bin_size is an upper bound; excess words are lost
            continue;
        }
        bins_[b].push_back(w);
        decoder_.emplace(w, b);
        ++stored_;
    }
    for (const auto& b : bins_) empty_bins_ += b.empty() ? 1 : 0;
}

BinningCode::Encoded BinningCode::encode(long long label, std::uint64_t trial_seed) const {
    if (label < 0 || label >= spec_.bins)
        throw std::out_of_range("encode: label outside the bin alphabet");
    std::mt19937_64 rng(trial_seed);
    const auto& bin = bins_[static_cast<std::size_t>(label)];
    Encoded enc;
    if (bin.empty()) {
        // Fallback: a random codeword sequence, flagged for the caller.
        enc.empty_bin_fallback = true;
        std::uint64_t w = 0;
        for (int i = 0; i < codeword_len_; ++i)
            w = w * static_cast<std::uint64_t>(alphabet_) + rng() % alphabet_;
        enc.codeword = w;
        return enc;
    }
    enc.codeword = bin[rng() % bin.size()];
    return enc;
}

std::optional<long long> BinningCode::decode(std::uint64_t codeword) const {
    const auto it = decoder_.find(codeword);
    if (it == decoder_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::uint64_t> BinningCode::bin(long long label) const {
    if (label < 0 || label >= spec_.bins)
        throw std::out_of_range("bin: label outside the bin alphabet");
    return bins_[static_cast<std::size_t>(label)];
}

RoundtripResult binning_roundtrip(const BinningCode& code, std::span<const long long> labels,
                                  std::uint64_t seed) {
    RoundtripResult res;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto enc = code.encode(labels[i], seed + i);
        res.empty_bin_events += enc.empty_bin_fallback ? 1 : 0;
        const auto dec = code.decode(enc.codeword);
        res.failures += (!dec || *dec != labels[i]) ? 1 : 0;
        ++res.trials;
    }
    return res;
}

}  // namespace scfsec
