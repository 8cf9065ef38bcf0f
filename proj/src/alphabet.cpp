#include "spirale/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "spirale/error.hpp"

namespace spirale {

namespace {

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  while (!s.empty()) {
    auto nl = s.find('\n');
    auto line = s.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    s.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string> glyph_range(char first, char last) {
  std::vector<std::string> out;
  for (char c = first; c <= last; ++c) out.emplace_back(1, c);
  return out;
}

}  // namespace

std::vector<std::string> utf8_glyphs(std::string_view text) {
  std::vector<std::string> glyphs;
  std::size_t i = 0;
  while (i < text.size()) {
    auto len = std::min(utf8_length(static_cast<unsigned char>(text[i])),
                        text.size() - i);
    glyphs.emplace_back(text.substr(i, len));
    i += len;
  }
  return glyphs;
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.size() < 2) {
    throw Error(ErrorCode::AlphabetTooSmall,
                "alphabet needs at least 2 symbols, got " +
                    std::to_string(tokens_.size()));
  }
  index_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (t.empty()) {
      throw Error(ErrorCode::AlphabetTooSmall, "empty alphabet token");
    }
    if (!index_.emplace(t, static_cast<std::uint32_t>(i)).second) {
      throw Error(ErrorCode::DuplicateSymbol, "duplicate symbol '" + t + "'");
    }
    longest_token_ = std::max(longest_token_, t.size());
    if (utf8_glyphs(t).size() != 1) single_glyph_ = false;
  }
}

Alphabet Alphabet::parse(std::string_view source, Format format) {
  if (format == Format::SingleLine) {
    auto body = trim(source);
    if (body.empty()) throw Error(ErrorCode::AlphabetTooSmall, "empty alphabet");
    return Alphabet(utf8_glyphs(body));
  }
  auto lines = split_lines(source);
  // A trailing newline yields one empty line at the end; anything else blank
  // is malformed.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::AlphabetTooSmall, "empty alphabet");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      throw Error(ErrorCode::AlphabetTooSmall,
                  "blank line " + std::to_string(i + 1) + " in alphabet file");
    }
  }
  return Alphabet(std::move(lines));
}

Alphabet Alphabet::parse_auto(std::string_view source) {
  auto body = trim(source);
  bool multiline = body.find('\n') != std::string_view::npos;
  return parse(source, multiline ? Format::TokenPerLine : Format::SingleLine);
}

const Alphabet& Alphabet::latin26() {
  static const Alphabet a(glyph_range('A', 'Z'));
  return a;
}

const Alphabet& Alphabet::alphanumeric36() {
  static const Alphabet a = [] {
    auto t = glyph_range('A', 'Z');
    auto d = glyph_range('0', '9');
    t.insert(t.end(), d.begin(), d.end());
    return Alphabet(std::move(t));
  }();
  return a;
}

const Alphabet& Alphabet::extended53() {
  static const Alphabet a = [] {
    auto t = glyph_range('A', 'Z');
    auto d = glyph_range('0', '9');
    t.insert(t.end(), d.begin(), d.end());
    for (const char* s : {" ", ",", ".", "(", ")", "+", "-", "*", "/", "^", "<",
                          "=", ">", "%", "€", "£", "$"}) {
      t.emplace_back(s);
    }
    return Alphabet(std::move(t));
  }();
  return a;
}

const std::string& Alphabet::token(Symbol s) const {
  check(s);
  return tokens_[s.rank()];
}

Symbol Alphabet::symbol_at(std::size_t rank) const {
  if (rank >= tokens_.size()) {
    throw Error(ErrorCode::NotInAlphabet,
                "rank " + std::to_string(rank) + " outside alphabet of size " +
                    std::to_string(tokens_.size()));
  }
  return Symbol(static_cast<std::uint32_t>(rank));
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return Symbol(it->second);
}

Symbol Alphabet::rank_of(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw Error(ErrorCode::NotInAlphabet,
              "symbol '" + std::string(token) + "' not in alphabet");
}

void Alphabet::check(Symbol s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::NotInAlphabet,
                "rank " + std::to_string(s.rank()) +
                    " outside alphabet of size " + std::to_string(size()));
  }
}

void Alphabet::check(std::span<const Symbol> text) const {
  for (auto s : text) check(s);
}

std::optional<Symbol> Alphabet::match_at(std::string_view text, std::size_t pos,
                                         std::size_t& length) const {
  auto max_len = std::min(longest_token_, text.size() - pos);
  for (auto len = max_len; len > 0; --len) {
    if (auto s = find(text.substr(pos, len))) {
      length = len;
      return s;
    }
  }
  length = std::min(utf8_length(static_cast<unsigned char>(text[pos])),
                    text.size() - pos);
  return std::nullopt;
}

SymbolString Alphabet::encode(std::string_view text) const {
  SymbolString out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    auto s = match_at(text, pos, len);
    if (!s) {
      throw Error(ErrorCode::NotInAlphabet,
                  "symbol '" + std::string(text.substr(pos, len)) +
                      "' not in alphabet");
    }
    out.push_back(*s);
    pos += len;
  }
  return out;
}

SymbolString Alphabet::encode_lenient(std::string_view text) const {
  SymbolString out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    if (auto s = match_at(text, pos, len)) out.push_back(*s);
    pos += len;
  }
  return out;
}

std::string Alphabet::decode(std::span<const Symbol> text) const {
  std::string out;
  out.reserve(text.size());
  for (auto s : text) out += token(s);
  return out;
}

std::string Alphabet::fold_case(std::string_view text) const {
  std::string out(text);
  for (auto& c : out) {
    if (c < 'a' || c > 'z') continue;
    char upper = static_cast<char>(c - 'a' + 'A');
    if (!find(std::string_view(&c, 1)) && find(std::string_view(&upper, 1))) {
      c = upper;
    }
  }
  return out;
}

std::string Alphabet::serialize(Format format) const {
  std::string out;
  for (const auto& t : tokens_) {
    out += t;
    if (format == Format::TokenPerLine) out += '\n';
  }
  return out;
}

}  // namespace spirale
