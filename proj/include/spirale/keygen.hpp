#pragma once

#include <array>
#include <span>
#include <string>

#include "spirale/alphabet.hpp"

namespace spirale {

using KeyQuad = std::array<SymbolString, 4>;

// Four equal-length text extracts, e.g. the first and last letters of the
// first and last line of a book page.
class BookExtracts {
 public:
  explicit BookExtracts(std::array<SymbolString, 4> rows);
  // Each line is normalized against the alphabet (case folding, spaces and
  // punctuation dropped) before the length check.
  static BookExtracts from_lines(const Alphabet& alphabet,
                                 std::span<const std::string> lines);

  const std::array<SymbolString, 4>& rows() const { return rows_; }
  std::size_t length() const { return rows_[0].size(); }

 private:
  std::array<SymbolString, 4> rows_;
};

// Reads the 4 x L grid column by column from the rightmost column leftwards,
// each column top to bottom, and cuts the result into four keys of length L.
KeyQuad derive_keys_from_extracts(const BookExtracts& extracts);

// Letter substitution pairing high[i] with low[i]. Counting runs over the
// concatenation K1..K4; every even-numbered occurrence (2nd, 4th, ...) of
// high[i] becomes low[i].
KeyQuad frequency_correct(const KeyQuad& keys, std::span<const Symbol> high,
                          std::span<const Symbol> low);
// English defaults: e t a o i n -> z q x j k v.
KeyQuad frequency_correct(const Alphabet& alphabet, const KeyQuad& keys);

}  // namespace spirale
