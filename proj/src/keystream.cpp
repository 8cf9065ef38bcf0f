#include "spirale/keystream.hpp"

#include <string>

#include "spirale/error.hpp"

namespace spirale {

LongKeyMatrix product_matrix(const CipheringTable& table,
                             std::span<const Symbol> k3,
                             std::span<const Symbol> k4) {
  if (k3.empty() || k4.empty()) {
    throw Error(ErrorCode::EmptyKey, "product matrix keys must be non-empty");
  }
  LongKeyMatrix m(k3.size(), k4.size());
  for (std::size_t p = 0; p < k3.size(); ++p) {
    for (std::size_t q = 0; q < k4.size(); ++q) {
      m.at(p, q) = table.combine(k3[p], k4[q]);
    }
  }
  return m;
}

Lags default_lags(std::size_t long_lag) {
  if (long_lag == 0) throw Error(ErrorCode::InvalidLag, "long key is empty");
  if (long_lag == 1) return {1, 1};
  if (long_lag == 2) {
    throw Error(ErrorCode::InvalidLag, "no admissible short lag for k = 2");
  }
  return {long_lag, (long_lag - 1) / 2};
}

void validate_lags(const Lags& lags) {
  const auto k = lags.long_lag;
  const auto d = lags.short_lag;
  if (k == 1 && d == 1) return;
  if (d == 0 || d >= k) {
    throw Error(ErrorCode::InvalidLag, "short lag " + std::to_string(d) +
                                           " must lie strictly between 0 and " +
                                           std::to_string(k));
  }
  if (k == 2 * d) {
    throw Error(ErrorCode::InvalidLag,
                "k = 2d (" + std::to_string(k) + " = 2*" + std::to_string(d) +
                    ") interlaces independent sequences");
  }
}

KeystreamGenerator::KeystreamGenerator(CipheringTable table, SymbolString long_key,
                                       Lags lags)
    : table_(std::move(table)), long_key_(std::move(long_key)), lags_(lags) {
  if (long_key_.empty()) throw Error(ErrorCode::EmptyKey, "long key is empty");
  if (lags_.long_lag != long_key_.size()) {
    throw Error(ErrorCode::InvalidLag,
                "long lag " + std::to_string(lags_.long_lag) +
                    " differs from long key length " +
                    std::to_string(long_key_.size()));
  }
  validate_lags(lags_);
  table_.base().check(long_key_);
  window_ = long_key_;
}

KeystreamGenerator::KeystreamGenerator(CipheringTable table, SymbolString long_key)
    : KeystreamGenerator(std::move(table), long_key, default_lags(long_key.size())) {}

Symbol KeystreamGenerator::next() {
  const auto k = lags_.long_lag;
  const auto slot = emitted_ % k;
  Symbol out;
  if (emitted_ < k) {
    out = window_[slot];
  } else {
    // window_[slot] still holds X[n - k]; X[n - d] sits d slots back.
    auto older = window_[slot];
    auto recent = window_[(emitted_ - lags_.short_lag) % k];
    out = table_.combine_unchecked(older, recent);
    window_[slot] = out;
  }
  ++emitted_;
  return out;
}

SymbolString KeystreamGenerator::take(std::size_t n) {
  SymbolString out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

SymbolString generate_keystream(const CipheringTable& table,
                                std::span<const Symbol> long_key,
                                const Lags& lags, std::size_t n) {
  KeystreamGenerator gen(table, SymbolString(long_key.begin(), long_key.end()), lags);
  return gen.take(n);
}

std::vector<std::uint32_t> numeric_recurrence(std::span<const std::uint32_t> seed,
                                              std::size_t short_lag,
                                              std::size_t long_lag,
                                              std::uint32_t modulus, std::size_t n,
                                              RecurrenceMode mode) {
  if (seed.size() != long_lag) {
    throw Error(ErrorCode::BadSeedLength,
                "seed has " + std::to_string(seed.size()) + " values, expected " +
                    std::to_string(long_lag));
  }
  if (modulus < 2) throw Error(ErrorCode::ValueOutOfRange, "modulus must be >= 2");
  if (mode == RecurrenceMode::Spirale) {
    validate_lags({long_lag, short_lag});
  } else if (short_lag == 0 || short_lag > long_lag) {
    throw Error(ErrorCode::InvalidLag, "short lag must lie in [1, k]");
  }
  for (auto v : seed) {
    if (v >= modulus) {
      throw Error(ErrorCode::ValueOutOfRange,
                  "seed value " + std::to_string(v) + " not below modulus " +
                      std::to_string(modulus));
    }
  }
  std::vector<std::uint32_t> out(seed.begin(), seed.end());
  out.reserve(std::max(n, seed.size()));
  while (out.size() < n) {
    auto i = out.size();
    out.push_back((out[i - short_lag] + out[i - long_lag]) % modulus);
  }
  out.resize(std::min(out.size(), n));
  return out;
}

Grid<std::uint32_t> numeric_product_matrix(std::span<const std::uint32_t> rows,
                                           std::span<const std::uint32_t> cols,
                                           std::uint32_t modulus) {
  if (rows.empty() || cols.empty()) {
    throw Error(ErrorCode::EmptyKey, "product matrix keys must be non-empty");
  }
  Grid<std::uint32_t> m(rows.size(), cols.size());
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t q = 0; q < cols.size(); ++q) {
      m.at(p, q) = (rows[p] + cols[q]) % modulus;
    }
  }
  return m;
}

}  // namespace spirale
