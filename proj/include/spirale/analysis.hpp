#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "spirale/alphabet.hpp"
#include "spirale/cipher.hpp"
#include "spirale/keystream.hpp"

namespace spirale {

// English-text index of coincidence (Friedman) and the uniform value 1/26.
inline constexpr double kEnglishIc = 0.0667;
inline constexpr double kUniformIc26 = 1.0 / 26.0;

using Histogram = std::vector<std::size_t>;  // indexed by symbol rank

Histogram frequency_histogram(const Alphabet& alphabet, std::span<const Symbol> text);

// Sum f(f - 1) / (L(L - 1)); needs at least two symbols.
double index_of_coincidence(std::span<const Symbol> text);

// Pearson statistic against the uniform distribution over histogram.size()
// bins.
double chi_square_uniform(std::span<const std::size_t> histogram);

// Upper quantile of the chi-square distribution, e.g. (25, 0.999) -> 52.62.
double chi_square_quantile(double degrees_of_freedom, double probability);

// Fraction of positions i with text[i] == text[i + lag].
double autocorrelation_coincidence(std::span<const Symbol> text, std::size_t lag);

// Kasiski-style listing of n-grams occurring more than once.
struct RepeatedNgram {
  SymbolString gram;
  std::vector<std::size_t> positions;  // 0-based starts
  std::vector<std::size_t> gaps;       // differences of consecutive starts
};
std::vector<RepeatedNgram> repeated_ngrams(std::span<const Symbol> text, std::size_t n = 3);

struct AnalysisReport {
  std::size_t length = 0;
  Histogram histogram;
  double ic = 0.0;
  double chi2 = 0.0;
  std::map<std::size_t, double> autocorr;  // lag -> coincidence rate
};

AnalysisReport analyze(const Alphabet& alphabet, std::span<const Symbol> text,
                       std::span<const std::size_t> lags);

// Positions (1-based, up to horizon) whose keystream symbol changes when the
// long-key symbol at flip_position is replaced by a different one.
std::set<std::size_t> error_propagation_profile(const KeystreamGenerator& generator,
                                                std::size_t flip_position,
                                                std::size_t horizon);

// Positions that can depend on flip_position: the flip itself, then every
// generated position n > k with n - k or n - d in the set.
std::set<std::size_t> dependency_closure(const Lags& lags, std::size_t flip_position,
                                         std::size_t horizon);

// First generated position that depends on flip_position through both
// operands, or 0 if there is none up to horizon. Below it the flip reaches
// each dependent position through exactly one operand, so the brute-force
// diff equals the closure; from it on an error may cancel out.
std::size_t first_double_dependency(const Lags& lags, std::size_t flip_position,
                                    std::size_t horizon);

// Same experiment on the integer recurrence (textbook mode allowed).
std::set<std::size_t> numeric_error_profile(std::span<const std::uint32_t> seed,
                                            std::size_t short_lag, std::size_t long_lag,
                                            std::uint32_t modulus,
                                            std::size_t flip_position,
                                            std::size_t horizon);

inline constexpr std::uint64_t kSearchBudget = 100'000'000;

// Every key set of key length L whose encryption of known_plaintext equals
// ciphertext, in lexicographic order of ranks. Refuses (BudgetExceeded) when
// N^(4L) exceeds the budget.
std::vector<KeySet> exhaustive_search_small(const Alphabet& alphabet,
                                            std::span<const Symbol> known_plaintext,
                                            std::span<const Symbol> ciphertext,
                                            std::size_t key_length,
                                            std::uint64_t budget = kSearchBudget);

}  // namespace spirale
