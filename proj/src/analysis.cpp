#include "spirale/analysis.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <string>

#include "spirale/error.hpp"

namespace spirale {

Histogram frequency_histogram(const Alphabet& alphabet, std::span<const Symbol> text) {
  Histogram h(alphabet.size(), 0);
  for (auto s : text) {
    alphabet.check(s);
    ++h[s.rank()];
  }
  return h;
}

double index_of_coincidence(std::span<const Symbol> text) {
  if (text.size() < 2) {
    throw Error(ErrorCode::TooShort, "index of coincidence needs at least 2 symbols");
  }
  std::map<std::uint32_t, std::size_t> counts;
  for (auto s : text) ++counts[s.rank()];
  double pairs = 0.0;
  for (const auto& [_, f] : counts) pairs += static_cast<double>(f) * (f - 1.0);
  const double len = static_cast<double>(text.size());
  return pairs / (len * (len - 1.0));
}

double chi_square_uniform(std::span<const std::size_t> histogram) {
  double total = 0.0;
  for (auto f : histogram) total += static_cast<double>(f);
  if (histogram.empty() || total < 1.0) {
    throw Error(ErrorCode::TooShort, "chi-square needs a non-empty histogram");
  }
  const double expected = total / static_cast<double>(histogram.size());
  double chi2 = 0.0;
  for (auto f : histogram) {
    const double diff = static_cast<double>(f) - expected;
    chi2 += diff * diff / expected;
  }
  return chi2;
}

double chi_square_quantile(double degrees_of_freedom, double probability) {
  return boost::math::quantile(boost::math::chi_squared(degrees_of_freedom), probability);
}

double autocorrelation_coincidence(std::span<const Symbol> text, std::size_t lag) {
  if (lag == 0 || lag >= text.size()) {
    throw Error(ErrorCode::BadLag, "lag " + std::to_string(lag) +
                                       " must lie in [1, " +
                                       std::to_string(text.size()) + ")");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i + lag < text.size(); ++i) {
    if (text[i] == text[i + lag]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(text.size() - lag);
}

std::vector<RepeatedNgram> repeated_ngrams(std::span<const Symbol> text, std::size_t n) {
  std::vector<RepeatedNgram> out;
  if (n == 0 || text.size() < n) return out;
  std::map<SymbolString, std::vector<std::size_t>> starts;
  for (std::size_t i = 0; i + n <= text.size(); ++i) {
    starts[SymbolString(text.begin() + i, text.begin() + i + n)].push_back(i);
  }
  for (auto& [gram, positions] : starts) {
    if (positions.size() < 2) continue;
    RepeatedNgram r{gram, positions, {}};
    for (std::size_t i = 1; i < positions.size(); ++i) {
      r.gaps.push_back(positions[i] - positions[i - 1]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

AnalysisReport analyze(const Alphabet& alphabet, std::span<const Symbol> text,
                       std::span<const std::size_t> lags) {
  AnalysisReport r;
  r.length = text.size();
  r.histogram = frequency_histogram(alphabet, text);
  r.ic = index_of_coincidence(text);
  r.chi2 = chi_square_uniform(r.histogram);
  for (auto lag : lags) r.autocorr[lag] = autocorrelation_coincidence(text, lag);
  return r;
}

namespace {

void check_flip(std::size_t k, std::size_t flip_position, std::size_t horizon) {
  if (flip_position == 0 || flip_position > k) {
    throw Error(ErrorCode::BadPosition,
                "flip position " + std::to_string(flip_position) +
                    " must lie in the long key [1, " + std::to_string(k) + "]");
  }
  if (horizon < k) {
    throw Error(ErrorCode::BadPosition, "horizon " + std::to_string(horizon) +
                                            " shorter than the long key");
  }
}

template <typename T>
std::set<std::size_t> diff_positions(const std::vector<T>& a, const std::vector<T>& b) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) out.insert(i + 1);
  }
  return out;
}

}  // namespace

std::set<std::size_t> error_propagation_profile(const KeystreamGenerator& generator,
                                                std::size_t flip_position,
                                                std::size_t horizon) {
  const auto& lags = generator.lags();
  check_flip(lags.long_lag, flip_position, horizon);
  const auto& table = generator.table();
  auto flipped = generator.long_key();
  auto& s = flipped[flip_position - 1];
  s = Symbol(static_cast<std::uint32_t>((s.rank() + 1) % table.size()));
  auto clean = generate_keystream(table, generator.long_key(), lags, horizon);
  auto dirty = generate_keystream(table, flipped, lags, horizon);
  return diff_positions(clean, dirty);
}

std::set<std::size_t> dependency_closure(const Lags& lags, std::size_t flip_position,
                                         std::size_t horizon) {
  check_flip(lags.long_lag, flip_position, horizon);
  const auto k = lags.long_lag;
  const auto d = lags.short_lag;
  std::vector<bool> hit(horizon + 1, false);
  hit[flip_position] = true;
  for (auto n = k + 1; n <= horizon; ++n) hit[n] = hit[n - k] || hit[n - d];
  std::set<std::size_t> out;
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (hit[n]) out.insert(n);
  }
  return out;
}

std::size_t first_double_dependency(const Lags& lags, std::size_t flip_position,
                                    std::size_t horizon) {
  auto closure = dependency_closure(lags, flip_position, horizon);
  for (auto n : closure) {
    if (n > lags.long_lag && closure.count(n - lags.long_lag) &&
        closure.count(n - lags.short_lag)) {
      return n;
    }
  }
  return 0;
}

std::set<std::size_t> numeric_error_profile(std::span<const std::uint32_t> seed,
                                            std::size_t short_lag, std::size_t long_lag,
                                            std::uint32_t modulus,
                                            std::size_t flip_position,
                                            std::size_t horizon) {
  check_flip(long_lag, flip_position, horizon);
  std::vector<std::uint32_t> flipped(seed.begin(), seed.end());
  flipped[flip_position - 1] = (flipped[flip_position - 1] + 1) % modulus;
  auto clean = numeric_recurrence(seed, short_lag, long_lag, modulus, horizon,
                                  RecurrenceMode::Textbook);
  auto dirty = numeric_recurrence(flipped, short_lag, long_lag, modulus, horizon,
                                  RecurrenceMode::Textbook);
  return diff_positions(clean, dirty);
}

std::vector<KeySet> exhaustive_search_small(const Alphabet& alphabet,
                                            std::span<const Symbol> known_plaintext,
                                            std::span<const Symbol> ciphertext,
                                            std::size_t key_length,
                                            std::uint64_t budget) {
  if (known_plaintext.empty()) {
    throw Error(ErrorCode::EmptyMessage, "known plaintext is empty");
  }
  if (known_plaintext.size() != ciphertext.size()) {
    throw Error(ErrorCode::LengthMismatch, "plaintext and ciphertext lengths differ");
  }
  if (key_length == 0) throw Error(ErrorCode::EmptyKey, "key length is zero");
  alphabet.check(known_plaintext);
  alphabet.check(ciphertext);

  const std::uint64_t n = alphabet.size();
  const auto digits = 4 * key_length;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (space > budget / n) {
      throw Error(ErrorCode::BudgetExceeded,
                  std::to_string(n) + "^" + std::to_string(digits) +
                      " key sets exceed the search budget of " + std::to_string(budget));
    }
    space *= n;
  }

  std::vector<KeySet> found;
  std::vector<std::uint32_t> ranks(digits, 0);
  for (std::uint64_t index = 0; index < space; ++index) {
    auto rest = index;
    for (std::size_t i = digits; i-- > 0;) {
      ranks[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    std::array<SymbolString, 4> keys;
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t j = 0; j < key_length; ++j) {
        keys[k].push_back(Symbol(ranks[k * key_length + j]));
      }
    }
    KeySet candidate(std::move(keys));
    Spirale cipher(alphabet, candidate);
    auto gen = cipher.generator();
    bool match = true;
    for (std::size_t i = 0; i < known_plaintext.size(); ++i) {
      if (cipher.table().combine_unchecked(known_plaintext[i], gen.next()) != ciphertext[i]) {
        match = false;
        break;
      }
    }
    if (match) found.push_back(std::move(candidate));
  }
  return found;
}

}  // namespace spirale
