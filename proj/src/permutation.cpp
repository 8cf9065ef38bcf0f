#include "spirale/permutation.hpp"

#include <algorithm>
#include <string>

#include "spirale/error.hpp"

namespace spirale {

std::vector<std::size_t> key_to_rank_list(const Alphabet& alphabet,
                                          std::span<const Symbol> key) {
  if (key.empty()) throw Error(ErrorCode::EmptyKey, "permutation key is empty");
  std::vector<std::size_t> ranks;
  ranks.reserve(key.size());
  for (auto s : key) {
    alphabet.check(s);
    ranks.push_back(s.hand_rank());
  }
  return ranks;
}

PermutationKey::PermutationKey(const Alphabet& alphabet, SymbolString key)
    : key_(std::move(key)), ranks_(key_to_rank_list(alphabet, key_)) {}

PermutationKey PermutationKey::from_text(const Alphabet& alphabet,
                                         std::string_view key) {
  return PermutationKey(alphabet, alphabet.encode(alphabet.fold_case(key)));
}

PermutedAlphabet::PermutedAlphabet(std::size_t n, SymbolString order)
    : order_(std::move(order)), position_(n, n) {
  if (order_.size() != n) {
    throw Error(ErrorCode::NotInAlphabet,
                "permuted alphabet has " + std::to_string(order_.size()) +
                    " symbols, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto r = order_[i].rank();
    if (r >= n || position_[r] != n) {
      throw Error(ErrorCode::NotInAlphabet,
                  "permuted alphabet is not a bijection at position " +
                      std::to_string(i));
    }
    position_[r] = i;
  }
}

PermutedAlphabet PermutedAlphabet::identity(std::size_t n) {
  SymbolString order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = Symbol(static_cast<std::uint32_t>(i));
  return PermutedAlphabet(n, std::move(order));
}

PermutedAlphabet permute_alphabet(const Alphabet& alphabet,
                                  const PermutationKey& key) {
  PermutationStats stats;
  return permute_alphabet(alphabet, key, stats);
}

PermutedAlphabet permute_alphabet(const Alphabet& alphabet,
                                  const PermutationKey& key,
                                  PermutationStats& stats) {
  const auto n = alphabet.size();
  const auto& counts = key.rank_list();
  std::vector<bool> picked(n, false);
  SymbolString order;
  order.reserve(n);

  stats = {};
  std::size_t cursor = n;  // one past the rightmost symbol
  for (std::size_t next = 0; order.size() < n; ++next) {
    auto remaining = counts[next % counts.size()];
    std::size_t steps = 0;
    while (remaining > 0) {
      cursor = (cursor == 0 ? n : cursor) - 1;
      ++steps;
      if (!picked[cursor]) --remaining;
    }
    stats.cursor_steps += steps;
    stats.longest_pick = std::max(stats.longest_pick, steps);
    picked[cursor] = true;
    order.push_back(alphabet.symbol_at(cursor));
  }
  return PermutedAlphabet(n, std::move(order));
}

}  // namespace spirale
