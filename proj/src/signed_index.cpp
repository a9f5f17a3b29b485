#include "mixzeta/signed_index.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mixzeta {

SignedIndex::SignedIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("an index needs at least one entry");
}

SignedIndex SignedIndex::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') cleaned.push_back(c);
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    std::size_t end = cleaned.find(',', pos);
    if (end == std::string::npos) end = cleaned.size();
    const std::string_view piece(cleaned.data() + pos, end - pos);
    int value = 0;
    const char* first = piece.data();
    if (!piece.empty() && piece.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw std::invalid_argument("malformed index '" + std::string(text) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return SignedIndex(std::move(out));
}

bool SignedIndex::all_positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int k) { return k > 0; });
}

bool SignedIndex::all_nonpositive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int k) { return k <= 0; });
}

bool SignedIndex::is_pos_neg() const { return depth() == 2 && entries_[0] >= 1 && entries_[1] <= 0; }

bool SignedIndex::is_neg_pos() const { return depth() == 2 && entries_[0] <= 0 && entries_[1] >= 1; }

bool SignedIndex::is_ones_neg() const {
  if (depth() < 2 || entries_.back() > 0) return false;
  return std::all_of(entries_.begin(), entries_.end() - 1, [](int k) { return k == 1; });
}

std::string SignedIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

}  // namespace mixzeta
