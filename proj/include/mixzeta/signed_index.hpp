#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mixzeta {

/// An index (k_1, ..., k_r) of a multiple polylogarithm or zeta function.
class SignedIndex {
 public:
  explicit SignedIndex(std::vector<int> entries);

  /// Comma-separated integers, e.g. "1,-2". Spaces and surrounding parentheses are ignored.
  static SignedIndex parse(std::string_view text);

  int depth() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }

  bool all_positive() const;
  bool all_nonpositive() const;
  /// (k, -n) with k >= 1, n >= 0.
  bool is_pos_neg() const;
  /// (-n, k) with n >= 0, k >= 1.
  bool is_neg_pos() const;
  /// (1, ..., 1, -n) with n >= 0 and depth >= 2.
  bool is_ones_neg() const;

  std::string to_string() const;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;

 private:
  std::vector<int> entries_;
};

}  // namespace mixzeta
