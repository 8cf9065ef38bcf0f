#include "spirale/cipher.hpp"

#include <string>

#include "spirale/error.hpp"
#include "spirale/permutation.hpp"

namespace spirale {

KeySet::KeySet(SymbolString k1, SymbolString k2, SymbolString k3, SymbolString k4)
    : KeySet(std::array<SymbolString, 4>{std::move(k1), std::move(k2),
                                         std::move(k3), std::move(k4)}) {}

KeySet::KeySet(std::array<SymbolString, 4> keys) : keys_(std::move(keys)) {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i].empty()) {
      throw Error(ErrorCode::EmptyKey, "key K" + std::to_string(i + 1) + " is empty");
    }
    if (keys_[i].size() != keys_[0].size()) {
      throw Error(ErrorCode::KeyLengthMismatch,
                  "key K" + std::to_string(i + 1) + " has length " +
                      std::to_string(keys_[i].size()) + ", K1 has " +
                      std::to_string(keys_[0].size()));
    }
  }
}

KeySet KeySet::parse(const Alphabet& alphabet, std::string_view comma_list) {
  std::array<SymbolString, 4> keys;
  std::size_t count = 0;
  while (true) {
    auto comma = comma_list.find(',');
    auto part = comma_list.substr(0, comma);
    if (count == keys.size()) {
      throw Error(ErrorCode::UsageError, "expected exactly 4 comma-separated keys");
    }
    keys[count++] = alphabet.encode(alphabet.fold_case(part));
    if (comma == std::string_view::npos) break;
    comma_list.remove_prefix(comma + 1);
  }
  if (count != keys.size()) {
    throw Error(ErrorCode::UsageError, "expected exactly 4 comma-separated keys");
  }
  return KeySet(std::move(keys));
}

std::string KeySet::to_string(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (i) out += ',';
    out += alphabet.decode(keys_[i]);
  }
  return out;
}

SymbolString normalize_text(const Alphabet& alphabet, std::string_view raw) {
  auto out = alphabet.encode_lenient(alphabet.fold_case(raw));
  if (out.empty()) {
    throw Error(ErrorCode::ResultEmpty, "no alphabet symbols in input text");
  }
  return out;
}

namespace {

CipheringTable table_for(const Alphabet& alphabet, const KeySet& keys) {
  alphabet.check(keys.k1());
  alphabet.check(keys.k2());
  alphabet.check(keys.k3());
  alphabet.check(keys.k4());
  return CipheringTable::build(alphabet, PermutationKey(alphabet, keys.k1()),
                               PermutationKey(alphabet, keys.k2()));
}

}  // namespace

Spirale::Spirale(const Alphabet& alphabet, const KeySet& keys)
    : table_(table_for(alphabet, keys)),
      long_key_(diagonal_read(product_matrix(table_, keys.k3(), keys.k4()))),
      lags_(default_lags(long_key_.size())) {}

KeystreamGenerator Spirale::generator() const {
  return KeystreamGenerator(table_, long_key_, lags_);
}

SymbolString Spirale::keystream(std::size_t n) const {
  return generator().take(n);
}

SymbolString Spirale::encrypt(std::span<const Symbol> plaintext) const {
  if (plaintext.empty()) throw Error(ErrorCode::EmptyMessage, "plaintext is empty");
  table_.base().check(plaintext);
  auto gen = generator();
  SymbolString out;
  out.reserve(plaintext.size());
  for (auto p : plaintext) out.push_back(table_.combine_unchecked(p, gen.next()));
  return out;
}

SymbolString Spirale::decrypt(std::span<const Symbol> ciphertext) const {
  if (ciphertext.empty()) throw Error(ErrorCode::EmptyMessage, "ciphertext is empty");
  table_.base().check(ciphertext);
  auto gen = generator();
  SymbolString out;
  out.reserve(ciphertext.size());
  for (auto c : ciphertext) out.push_back(table_.invert_unchecked(gen.next(), c));
  return out;
}

SymbolString encrypt(const KeySet& keys, const Alphabet& alphabet,
                     std::span<const Symbol> plaintext) {
  return Spirale(alphabet, keys).encrypt(plaintext);
}

SymbolString decrypt(const KeySet& keys, const Alphabet& alphabet,
                     std::span<const Symbol> ciphertext) {
  return Spirale(alphabet, keys).decrypt(ciphertext);
}

std::string group_symbols(const Alphabet& alphabet, std::span<const Symbol> text,
                          std::size_t group) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (group && i && i % group == 0) out += ' ';
    out += alphabet.token(text[i]);
  }
  return out;
}

}  // namespace spirale
