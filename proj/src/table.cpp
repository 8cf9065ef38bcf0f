#include "spirale/table.hpp"

#include "spirale/error.hpp"

namespace spirale {

CipheringTable::CipheringTable(Alphabet base, PermutedAlphabet rows,
                               PermutedAlphabet cols)
    : base_(std::move(base)),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      n_(static_cast<std::uint32_t>(base_.size())) {
  if (rows_.size() != base_.size() || cols_.size() != base_.size()) {
    throw Error(ErrorCode::NotInAlphabet,
                "permuted alphabets do not match the base alphabet size");
  }
  row_pos_.resize(n_);
  col_pos_.resize(n_);
  for (std::uint32_t s = 0; s < n_; ++s) {
    row_pos_[s] = static_cast<std::uint32_t>(rows_.position_of(Symbol(s)));
    col_pos_[s] = static_cast<std::uint32_t>(cols_.position_of(Symbol(s)));
  }
}

CipheringTable CipheringTable::build(const Alphabet& base,
                                     const PermutationKey& k1,
                                     const PermutationKey& k2) {
  return CipheringTable(base, permute_alphabet(base, k1),
                        permute_alphabet(base, k2));
}

CipheringTable CipheringTable::identity(const Alphabet& base) {
  return CipheringTable(base, PermutedAlphabet::identity(base.size()),
                        PermutedAlphabet::identity(base.size()));
}

std::size_t CipheringTable::row_rank(Symbol s) const {
  base_.check(s);
  return row_pos_[s.rank()];
}

std::size_t CipheringTable::col_rank(Symbol s) const {
  base_.check(s);
  return col_pos_[s.rank()];
}

Symbol CipheringTable::combine(Symbol row, Symbol col) const {
  base_.check(row);
  base_.check(col);
  return combine_unchecked(row, col);
}

Symbol CipheringTable::invert_combine(Symbol col, Symbol result) const {
  base_.check(col);
  base_.check(result);
  return invert_unchecked(col, result);
}

std::string CipheringTable::to_tsv() const {
  std::string out;
  auto line = [&out](auto&& cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out += '\t';
      out += c;
      first = false;
    }
    out += '\n';
  };
  const std::vector<std::string> lead(4);
  auto header = [&](auto cell) {
    std::vector<std::string> cells(lead);
    for (std::uint32_t j = 0; j < n_; ++j) cells.push_back(cell(j));
    line(cells);
  };
  header([&](std::uint32_t j) { return base_.token(Symbol(j)); });
  header([&](std::uint32_t j) { return std::to_string(col_pos_[j] + 1); });
  header([&](std::uint32_t j) { return std::to_string(j + 1); });
  header([&](std::uint32_t j) { return base_.token(cols_.at(j)); });
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::vector<std::string> cells{base_.token(Symbol(i)),
                                   std::to_string(row_pos_[i] + 1),
                                   std::to_string(i + 1),
                                   base_.token(rows_.at(i))};
    for (std::uint32_t j = 0; j < n_; ++j) {
      cells.push_back(base_.token(Symbol((i + j) % n_)));
    }
    line(cells);
  }
  return out;
}

}  // namespace spirale
