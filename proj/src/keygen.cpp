#include "spirale/keygen.hpp"

#include <string>
#include <vector>

#include "spirale/error.hpp"

namespace spirale {

BookExtracts::BookExtracts(std::array<SymbolString, 4> rows) : rows_(std::move(rows)) {
  if (rows_[0].empty()) {
    throw Error(ErrorCode::BadExtractLength, "extract 1 is empty");
  }
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].size() != rows_[0].size()) {
      throw Error(ErrorCode::BadExtractLength,
                  "extract " + std::to_string(i + 1) + " has length " +
                      std::to_string(rows_[i].size()) + ", extract 1 has " +
                      std::to_string(rows_[0].size()));
    }
  }
}

BookExtracts BookExtracts::from_lines(const Alphabet& alphabet,
                                      std::span<const std::string> lines) {
  if (lines.size() != 4) {
    throw Error(ErrorCode::BadExtractLength,
                "expected 4 extracts, got " + std::to_string(lines.size()));
  }
  std::array<SymbolString, 4> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i] = alphabet.encode_lenient(alphabet.fold_case(lines[i]));
  }
  return BookExtracts(std::move(rows));
}

KeyQuad derive_keys_from_extracts(const BookExtracts& extracts) {
  const auto& rows = extracts.rows();
  const auto len = extracts.length();
  SymbolString stream;
  stream.reserve(4 * len);
  for (std::size_t col = len; col-- > 0;) {
    for (const auto& row : rows) stream.push_back(row[col]);
  }
  KeyQuad keys;
  for (std::size_t i = 0; i < 4; ++i) {
    keys[i].assign(stream.begin() + i * len, stream.begin() + (i + 1) * len);
  }
  return keys;
}

KeyQuad frequency_correct(const KeyQuad& keys, std::span<const Symbol> high,
                          std::span<const Symbol> low) {
  if (high.size() != low.size()) {
    throw Error(ErrorCode::SetSizeMismatch,
                std::to_string(high.size()) + " high-frequency letters but " +
                    std::to_string(low.size()) + " replacements");
  }
  std::vector<std::size_t> seen(high.size(), 0);
  KeyQuad out = keys;
  for (auto& key : out) {
    for (auto& s : key) {
      for (std::size_t i = 0; i < high.size(); ++i) {
        if (s != high[i]) continue;
        if (++seen[i] % 2 == 0) s = low[i];
        break;
      }
    }
  }
  return out;
}

KeyQuad frequency_correct(const Alphabet& alphabet, const KeyQuad& keys) {
  return frequency_correct(keys, alphabet.encode("ETAOIN"), alphabet.encode("ZQXJKV"));
}

}  // namespace spirale
