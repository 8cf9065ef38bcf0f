#pragma once

// Shared fixtures for the unit and acceptance suites. The reference tables
// here are transcribed from the printed worked example and never go through
// the permutation code, so they can serve as independent oracles.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spirale/alphabet.hpp"
#include "spirale/cipher.hpp"
#include "spirale/permutation.hpp"
#include "spirale/table.hpp"

namespace spirale::test {

inline constexpr std::string_view kLatin = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

// Worked example keys after frequency correction.
inline constexpr std::string_view kK1 = "NVIKKIH";
inline constexpr std::string_view kK2 = "CTSQEOU";
inline constexpr std::string_view kK3 = "DNGDKSZ";
inline constexpr std::string_view kK4 = "EAIWDSH";
inline constexpr std::string_view kWorkedKeys = "NVIKKIH,CTSQEOU,DNGDKSZ,EAIWDSH";

inline constexpr std::string_view kWorkedLongKey =
    "BHVUBSBOYAGVLGKOASTQPPIXADVTJFFKIZGNPPMOXUTYCYDGH";
inline constexpr std::string_view kWorkedKeystream50to75 = "WSINJKRPCOPSZKVGJBOULOZEKP";

// 1-based "its rank in permuted alphabet" rows of the worked ciphering table,
// indexed A..Z.
inline constexpr std::array<int, 26> kWorkedRowRanks = {
    20, 22, 19, 10, 13, 26, 3, 25, 5, 18, 15, 11, 1,
    16, 7,  14, 2,  9,  23, 17, 12, 4, 8, 21, 6, 24};
inline constexpr std::array<int, 26> kWorkedColRanks = {
    13, 12, 20, 2, 19, 15, 22, 11, 10, 3, 23, 5,  9,
    14, 8,  16, 4, 26, 7, 6,  17, 21, 18, 1, 25, 24};

// Rank columns of the stand-alone example ciphering table (rows: "A 13",
// "B 24", ...; columns: "new ranks" header).
inline constexpr std::array<int, 26> kExampleRowRanks = {
    13, 24, 4,  3, 17, 20, 23, 22, 11, 26, 10, 19, 18,
    7,  25, 16, 2, 21, 15, 12, 9,  8,  6,  14, 1,  5};
inline constexpr std::array<int, 26> kExampleColRanks = {
    17, 26, 21, 7,  10, 3,  12, 20, 14, 23, 2,  15, 9,
    18, 6,  19, 22, 25, 11, 1,  16, 13, 5,  4,  8,  24};

// Product-matrix rows of the worked example, K3 = DNGDKSZ by K4 = EAIWDSH.
inline constexpr std::array<std::string_view, 7> kWorkedMatrix = {
    "BVSAKPT", "HBYGQVZ", "UOLTDIM", "BVSAKPT", "GAXFPUY", "OIFNXCG", "PJGOYDH"};

// Lookup through printed rank rows: body[r][c] = letter (r + c) mod 26.
inline char rank_lookup(const std::array<int, 26>& rows, const std::array<int, 26>& cols,
                        char a, char b) {
  int r = rows[a - 'A'] - 1;
  int c = cols[b - 'A'] - 1;
  return kLatin[(r + c) % 26];
}

inline char worked_combine(char a, char b) {
  return rank_lookup(kWorkedRowRanks, kWorkedColRanks, a, b);
}

// Table with the row/column entry alphabets implied by a rank row.
inline CipheringTable table_from_ranks(const std::array<int, 26>& rows,
                                       const std::array<int, 26>& cols) {
  SymbolString row_order(26), col_order(26);
  for (std::uint32_t s = 0; s < 26; ++s) {
    row_order[rows[s] - 1] = Symbol(s);
    col_order[cols[s] - 1] = Symbol(s);
  }
  return CipheringTable(Alphabet::latin26(), PermutedAlphabet(26, row_order),
                        PermutedAlphabet(26, col_order));
}

inline SymbolString enc(std::string_view s, const Alphabet& a = Alphabet::latin26()) {
  return a.encode(s);
}

inline std::string dec(const SymbolString& s, const Alphabet& a = Alphabet::latin26()) {
  return a.decode(s);
}

// Alphabet of n distinct tokens; n <= 53 reuses the extended set so every
// size exercises real glyphs, larger sizes fall back to synthetic tokens.
inline Alphabet alphabet_of_size(std::size_t n) {
  const auto& ext = Alphabet::extended53().tokens();
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < n; ++i) {
    tokens.push_back(i < ext.size() ? ext[i] : "#" + std::to_string(i));
  }
  return Alphabet(tokens);
}

inline SymbolString random_symbols(std::mt19937_64& rng, std::size_t n_symbols,
                                   std::size_t length) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n_symbols - 1));
  SymbolString out(length);
  for (auto& s : out) s = Symbol(pick(rng));
  return out;
}

inline KeySet random_keyset(std::mt19937_64& rng, std::size_t n_symbols, std::size_t length) {
  return KeySet(random_symbols(rng, n_symbols, length), random_symbols(rng, n_symbols, length),
                random_symbols(rng, n_symbols, length), random_symbols(rng, n_symbols, length));
}

inline CipheringTable random_table(std::mt19937_64& rng, const Alphabet& a,
                                   std::size_t key_length = 7) {
  return CipheringTable::build(a, PermutationKey(a, random_symbols(rng, a.size(), key_length)),
                               PermutationKey(a, random_symbols(rng, a.size(), key_length)));
}

// Letters drawn with English single-letter frequencies (percent, A..Z).
inline SymbolString english_like(std::mt19937_64& rng, std::size_t length) {
  static const std::array<double, 26> weights = {
      8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966,
      0.153, 0.772, 4.025, 2.406, 6.749,  7.507, 1.929, 0.095, 5.987,
      6.327, 9.056, 2.758, 0.978, 2.360,  0.150, 1.974, 0.074};
  std::discrete_distribution<std::uint32_t> pick(weights.begin(), weights.end());
  SymbolString out(length);
  for (auto& s : out) s = Symbol(pick(rng));
  return out;
}

}  // namespace spirale::test
