#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spirale {

// A symbol is identified by its 0-based rank in some base alphabet. The
// hand-cipher convention of ranks 1..N (with N congruent to 0) only shows
// up at the I/O boundary, see hand_rank().
class Symbol {
 public:
  constexpr Symbol() = default;
  constexpr explicit Symbol(std::uint32_t rank) : rank_(rank) {}

  constexpr std::uint32_t rank() const { return rank_; }
  constexpr std::uint32_t hand_rank() const { return rank_ + 1; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  std::uint32_t rank_ = 0;
};

using SymbolString = std::vector<Symbol>;

// Ordered set of distinct, non-empty tokens. Usually one glyph per token,
// but tokens may span several glyphs (e.g. "()").
class Alphabet {
 public:
  enum class Format { SingleLine, TokenPerLine };

  explicit Alphabet(std::vector<std::string> tokens);

  static Alphabet parse(std::string_view source, Format format);
  // Token-per-line when the trimmed source spans several lines.
  static Alphabet parse_auto(std::string_view source);

  static const Alphabet& latin26();
  static const Alphabet& alphanumeric36();
  // A-Z, 0-9, space, then , . () + - * / ^ < = > % € £ $
  static const Alphabet& extended53();

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  const std::string& token(Symbol s) const;
  Symbol symbol_at(std::size_t rank) const;
  Symbol rank_of(std::string_view token) const;
  std::optional<Symbol> find(std::string_view token) const;
  bool contains(Symbol s) const { return s.rank() < tokens_.size(); }
  // Throws NotInAlphabet for a rank outside [0, N).
  void check(Symbol s) const;
  void check(std::span<const Symbol> text) const;

  // Greedy longest-token tokenization; any unmatched input is an error.
  SymbolString encode(std::string_view text) const;
  // Same tokenization, silently dropping unmatched glyphs.
  SymbolString encode_lenient(std::string_view text) const;
  std::string decode(std::span<const Symbol> text) const;

  // Uppercases ASCII letters that are absent from the alphabet in lower case
  // but present in upper case.
  std::string fold_case(std::string_view text) const;

  std::string serialize(Format format) const;
  bool single_glyph_tokens() const { return single_glyph_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::optional<Symbol> match_at(std::string_view text, std::size_t pos,
                                 std::size_t& length) const;

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t longest_token_ = 0;
  bool single_glyph_ = true;
};

// Splits UTF-8 text into code points (one string each). Invalid bytes come
// through as single-byte glyphs.
std::vector<std::string> utf8_glyphs(std::string_view text);

}  // namespace spirale
