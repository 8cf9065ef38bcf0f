#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "spirale/alphabet.hpp"

namespace spirale {

// 1-based alphabet ranks of the key symbols, the "permutation list".
std::vector<std::size_t> key_to_rank_list(const Alphabet& alphabet,
                                          std::span<const Symbol> key);

class PermutationKey {
 public:
  PermutationKey(const Alphabet& alphabet, SymbolString key);
  // Case-folds and tokenizes; spaces and punctuation are rejected.
  static PermutationKey from_text(const Alphabet& alphabet, std::string_view key);

  const SymbolString& symbols() const { return key_; }
  const std::vector<std::size_t>& rank_list() const { return ranks_; }

 private:
  SymbolString key_;
  std::vector<std::size_t> ranks_;
};

// A reordering of a base alphabet together with its inverse.
class PermutedAlphabet {
 public:
  // Throws NotInAlphabet unless `order` is a bijection onto [0, n).
  PermutedAlphabet(std::size_t n, SymbolString order);
  static PermutedAlphabet identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  // Symbol at 0-based position i.
  Symbol at(std::size_t i) const { return order_[i]; }
  // 0-based position of a base symbol ("its rank in permuted alphabet").
  std::size_t position_of(Symbol s) const { return position_[s.rank()]; }
  const SymbolString& order() const { return order_; }

  friend bool operator==(const PermutedAlphabet& a, const PermutedAlphabet& b) {
    return a.order_ == b.order_;
  }

 private:
  SymbolString order_;
  std::vector<std::size_t> position_;
};

// Wrap-around picking: a cursor starts just right of the last symbol and
// walks leftwards over not-yet-picked symbols, counting each rank of the
// permutation list (read cyclically) down to the next pick.
PermutedAlphabet permute_alphabet(const Alphabet& alphabet,
                                  const PermutationKey& key);

struct PermutationStats {
  std::size_t cursor_steps = 0;
  std::size_t longest_pick = 0;  // most cursor moves spent on a single pick
};

PermutedAlphabet permute_alphabet(const Alphabet& alphabet,
                                  const PermutationKey& key,
                                  PermutationStats& stats);

}  // namespace spirale
