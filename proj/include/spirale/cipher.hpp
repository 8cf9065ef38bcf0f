#pragma once

#include <array>
#include <span>
#include <string_view>

#include "spirale/alphabet.hpp"
#include "spirale/keystream.hpp"
#include "spirale/table.hpp"

namespace spirale {

// K1/K2 permute the ciphering table rows/columns, K3/K4 label the rows and
// columns of the long-key product matrix. All four share one length L.
class KeySet {
 public:
  KeySet(SymbolString k1, SymbolString k2, SymbolString k3, SymbolString k4);
  explicit KeySet(std::array<SymbolString, 4> keys);

  // "K1,K2,K3,K4", case-folded against the alphabet.
  static KeySet parse(const Alphabet& alphabet, std::string_view comma_list);

  const SymbolString& k1() const { return keys_[0]; }
  const SymbolString& k2() const { return keys_[1]; }
  const SymbolString& k3() const { return keys_[2]; }
  const SymbolString& k4() const { return keys_[3]; }
  const std::array<SymbolString, 4>& keys() const { return keys_; }
  std::size_t key_length() const { return keys_[0].size(); }

  std::string to_string(const Alphabet& alphabet) const;

  friend bool operator==(const KeySet&, const KeySet&) = default;

 private:
  std::array<SymbolString, 4> keys_;
};

// Case-folds, then keeps only what tokenizes against the alphabet (longest
// token first). Throws ResultEmpty when nothing survives.
SymbolString normalize_text(const Alphabet& alphabet, std::string_view raw);

// Everything derived from one key set: the ciphering table and the long key.
class Spirale {
 public:
  Spirale(const Alphabet& alphabet, const KeySet& keys);

  const CipheringTable& table() const { return table_; }
  const SymbolString& long_key() const { return long_key_; }
  const Lags& lags() const { return lags_; }

  KeystreamGenerator generator() const;
  SymbolString keystream(std::size_t n) const;

  SymbolString encrypt(std::span<const Symbol> plaintext) const;
  SymbolString decrypt(std::span<const Symbol> ciphertext) const;

 private:
  CipheringTable table_;
  SymbolString long_key_;
  Lags lags_;
};

SymbolString encrypt(const KeySet& keys, const Alphabet& alphabet,
                     std::span<const Symbol> plaintext);
SymbolString decrypt(const KeySet& keys, const Alphabet& alphabet,
                     std::span<const Symbol> ciphertext);

// Inserts a space after every `group` symbols; 0 leaves the line continuous.
std::string group_symbols(const Alphabet& alphabet, std::span<const Symbol> text,
                          std::size_t group);

}  // namespace spirale
