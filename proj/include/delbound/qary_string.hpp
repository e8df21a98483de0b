#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delbound {

using Symbol = std::uint8_t;

/// Immutable string over the alphabet {0, ..., q-1}, 2 <= q <= 255.
///
/// The run count is computed once at construction. Strings of equal length
/// order lexicographically, and that order coincides with the order of
/// `rank()`, the big-endian base-q value; all set-valued results and all
/// hypergraph numberings rely on this.
class QaryString {
 public:
  QaryString() = default;  // empty binary string
  QaryString(std::vector<Symbol> symbols, int q);
  QaryString(std::initializer_list<int> symbols, int q);

  /// Digits 0-9 then a-z; the empty view gives the empty string.
  static QaryString parse(std::string_view digits, int q);
  static QaryString from_rank(std::uint64_t rank, int length, int q);

  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] std::span<const Symbol> symbols() const { return symbols_; }
  [[nodiscard]] int runs() const { return runs_; }

  /// Big-endian base-q value; throws std::overflow_error if q^size >= 2^64.
  [[nodiscard]] std::uint64_t rank() const;
  [[nodiscard]] std::string str() const;

  [[nodiscard]] QaryString erased(std::size_t pos) const;
  [[nodiscard]] QaryString inserted(std::size_t pos, Symbol sym) const;
  [[nodiscard]] QaryString reversed() const;

  friend bool operator==(const QaryString& a, const QaryString& b) {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }
  /// Shorter strings first, then lexicographic.
  friend std::strong_ordering operator<=>(const QaryString& a, const QaryString& b);

 private:
  std::vector<Symbol> symbols_;
  int q_ = 2;
  int runs_ = 0;
};

struct QaryStringHash {
  std::size_t operator()(const QaryString& x) const noexcept;
};

/// Sorted, duplicate-free collection of q-ary strings.
class StringSet {
 public:
  using const_iterator = std::vector<QaryString>::const_iterator;

  StringSet() = default;
  /// Sorts and removes duplicates.
  explicit StringSet(std::vector<QaryString> members);

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] const QaryString& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] const_iterator begin() const { return members_.begin(); }
  [[nodiscard]] const_iterator end() const { return members_.end(); }
  [[nodiscard]] const std::vector<QaryString>& members() const { return members_; }

  [[nodiscard]] bool contains(const QaryString& x) const;
  /// Position of `x`, or -1.
  [[nodiscard]] std::ptrdiff_t index_of(const QaryString& x) const;

  friend bool operator==(const StringSet&, const StringSet&) = default;

 private:
  std::vector<QaryString> members_;
};

StringSet set_union(const StringSet& a, const StringSet& b);
StringSet set_intersection(const StringSet& a, const StringSet& b);

/// Number of runs; 0 for the empty string.
int run_count(const QaryString& x);

/// D_s(x): distinct subsequences obtained by deleting s symbols.
/// Throws std::domain_error when s > |x|.
StringSet deletion_set(const QaryString& x, int s);

/// I_s(x): distinct supersequences obtained by inserting s symbols.
StringSet insertion_set(const QaryString& x, int s);

/// Union of D_s over a set of equal-length strings.
StringSet deletion_set(const StringSet& strings, int s);

/// True iff y can be obtained from x by deletions.
bool is_subsequence(const QaryString& y, const QaryString& x);

int lcs_length(const QaryString& x, const QaryString& y);

/// Insertion/deletion distance |x| + |y| - 2 LCS(x, y).
int edit_distance(const QaryString& x, const QaryString& y);

/// Number of distinct subsequences of x of the given length, by the
/// last-occurrence recurrence. Equals |D_{|x|-length}(x)|. Requires |x| <= 62.
std::uint64_t distinct_subsequence_count(std::span<const Symbol> x, int length);

/// |D_s(x)| without materialising the set.
std::uint64_t deletion_set_size(const QaryString& x, int s);

/// q^n as an exact 64-bit value; throws std::overflow_error if it does not fit.
std::uint64_t checked_pow(int q, int n);

/// Calls f(rank, symbols) for every string of F_q^n in lexicographic order.
/// The symbol buffer is reused between calls.
void for_each_string(int q, int n, const std::function<void(std::uint64_t, std::span<const Symbol>)>& f);

/// F_q^n as a StringSet.
StringSet all_strings(int q, int n);

/// Parses one string per element; all must be the same length.
StringSet parse_strings(std::span<const std::string> lines, int q);

}  // namespace delbound
