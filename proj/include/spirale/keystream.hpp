#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spirale/alphabet.hpp"
#include "spirale/table.hpp"

namespace spirale {

// Row-major P x Q grid.
template <typename T>
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t p, std::size_t q) { return cells_[p * cols_ + q]; }
  const T& at(std::size_t p, std::size_t q) const { return cells_[p * cols_ + q]; }
  const std::vector<T>& cells() const { return cells_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> cells_;
};

using LongKeyMatrix = Grid<Symbol>;

// cells[p][q] = combine(k3[p], k4[q]); K3 labels rows, K4 labels columns.
LongKeyMatrix product_matrix(const CipheringTable& table,
                             std::span<const Symbol> k3,
                             std::span<const Symbol> k4);

// Ascending anti-diagonals from the top-left corner: diagonal s = p + q runs
// from 0 to P + Q - 2, each one read from bottom-left to top-right.
template <typename T>
std::vector<T> diagonal_read(const Grid<T>& m) {
  std::vector<T> out;
  out.reserve(m.rows() * m.cols());
  if (m.rows() == 0 || m.cols() == 0) return out;
  for (std::size_t s = 0; s + 1 < m.rows() + m.cols(); ++s) {
    auto p = std::min(s, m.rows() - 1);
    for (;; --p) {
      auto q = s - p;
      if (q >= m.cols()) break;
      out.push_back(m.at(p, q));
      if (p == 0) break;
    }
  }
  return out;
}

// Back-offsets of the recurrence X[n] = X[n - long_lag] □ X[n - short_lag].
struct Lags {
  std::size_t long_lag = 0;   // k, the long-key length
  std::size_t short_lag = 0;  // d

  friend bool operator==(const Lags&, const Lags&) = default;
};

// d = floor((k - 1) / 2), which never equals k / 2. A single-symbol long key
// (k = 1) has no admissible d; it degenerates to d = k = 1.
Lags default_lags(std::size_t long_lag);

// Throws InvalidLag unless 0 < d < k and k != 2d, or (k, d) = (1, 1).
void validate_lags(const Lags& lags);

// Produces the long key verbatim, then extends it with
// X[n] = combine(X[n - k], X[n - d]) (older term as the row operand).
class KeystreamGenerator {
 public:
  KeystreamGenerator(CipheringTable table, SymbolString long_key, Lags lags);
  KeystreamGenerator(CipheringTable table, SymbolString long_key);

  const CipheringTable& table() const { return table_; }
  const SymbolString& long_key() const { return long_key_; }
  const Lags& lags() const { return lags_; }
  std::size_t emitted() const { return emitted_; }

  Symbol next();
  SymbolString take(std::size_t n);

 private:
  CipheringTable table_;
  SymbolString long_key_;
  Lags lags_;
  SymbolString window_;  // last k symbols, indexed by position mod k
  std::size_t emitted_ = 0;
};

// First n keystream symbols, computed without keeping a generator around.
SymbolString generate_keystream(const CipheringTable& table,
                                std::span<const Symbol> long_key,
                                const Lags& lags, std::size_t n);

enum class RecurrenceMode {
  Spirale,   // enforce k != 2d
  Textbook,  // allow the classical d = 1 forms, including k = 2
};

// Integer form X[n] = (X[n - d] + X[n - k]) mod M. Values live in [0, M);
// under the 1..M hand convention, 0 prints as M. Returns n values in total,
// the seed included.
std::vector<std::uint32_t> numeric_recurrence(std::span<const std::uint32_t> seed,
                                              std::size_t short_lag,
                                              std::size_t long_lag,
                                              std::uint32_t modulus,
                                              std::size_t n,
                                              RecurrenceMode mode = RecurrenceMode::Spirale);

// Integer product matrix Y[p][q] = (rows[p] + cols[q]) mod M.
Grid<std::uint32_t> numeric_product_matrix(std::span<const std::uint32_t> rows,
                                           std::span<const std::uint32_t> cols,
                                           std::uint32_t modulus);

}  // namespace spirale
