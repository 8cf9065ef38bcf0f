#pragma once

#include <string>

#include "spirale/alphabet.hpp"
#include "spirale/permutation.hpp"

namespace spirale {

// Vigenère tableau whose row and column entry alphabets are permuted
// independently. Only the entry points move; the body stays the plain
// cyclic-shift grid, so a lookup is
//
//   combine(a, b) = base[(row_rank(a) + col_rank(b)) mod N]
//
// The first operand selects the row, the second the column. The operation is
// not commutative once the two permutations differ.
class CipheringTable {
 public:
  CipheringTable(Alphabet base, PermutedAlphabet rows, PermutedAlphabet cols);

  static CipheringTable build(const Alphabet& base, const PermutationKey& k1,
                              const PermutationKey& k2);
  // Plain Vigenère table: combine(a, b) = base[(rank(a) + rank(b)) mod N].
  static CipheringTable identity(const Alphabet& base);

  const Alphabet& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  const PermutedAlphabet& rows() const { return rows_; }
  const PermutedAlphabet& cols() const { return cols_; }

  std::size_t row_rank(Symbol s) const;
  std::size_t col_rank(Symbol s) const;

  Symbol combine(Symbol row, Symbol col) const;
  // The row symbol a with combine(a, col) == result.
  Symbol invert_combine(Symbol col, Symbol result) const;

  // Unchecked lookups for the hot loops; operands must be valid ranks.
  Symbol combine_unchecked(Symbol row, Symbol col) const {
    auto r = row_pos_[row.rank()] + col_pos_[col.rank()];
    return Symbol(r >= n_ ? r - n_ : r);
  }
  Symbol invert_unchecked(Symbol col, Symbol result) const {
    auto c = col_pos_[col.rank()];
    auto r = result.rank() >= c ? result.rank() - c : result.rank() + n_ - c;
    return rows_.at(r);
  }

  // Tab-separated dump: column header block (symbol, column rank, index,
  // permuted column alphabet), then one line per row with symbol, row rank,
  // index, permuted row symbol and the table body. Ranks are 1-based.
  std::string to_tsv() const;

 private:
  Alphabet base_;
  PermutedAlphabet rows_;
  PermutedAlphabet cols_;
  std::uint32_t n_;
  std::vector<std::uint32_t> row_pos_;
  std::vector<std::uint32_t> col_pos_;
};

}  // namespace spirale
