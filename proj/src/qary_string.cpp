#include "delbound/qary_string.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace delbound {

namespace {

int count_runs(std::span<const Symbol> s) {
  if (s.empty()) return 0;
  int r = 1;
  for (std::size_t i = 1; i < s.size(); ++i) r += s[i] != s[i - 1];
  return r;
}

void check_alphabet(int q) {
  if (q < 2 || q > 255) throw std::domain_error("alphabet size must be in [2, 255]");
}

using StringHashSet = std::unordered_set<QaryString, QaryStringHash>;

StringSet to_set(StringHashSet&& h) {
  std::vector<QaryString> v;
  v.reserve(h.size());
  for (auto it = h.begin(); it != h.end();) v.push_back(std::move(h.extract(it++).value()));
  return StringSet(std::move(v));
}

}  // namespace

QaryString::QaryString(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
  check_alphabet(q);
  for (Symbol s : symbols_)
    if (s >= q) throw std::domain_error("symbol out of alphabet range");
  runs_ = count_runs(symbols_);
}

QaryString::QaryString(std::initializer_list<int> symbols, int q) : q_(q) {
  check_alphabet(q);
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s >= q) throw std::domain_error("symbol out of alphabet range");
    symbols_.push_back(static_cast<Symbol>(s));
  }
  runs_ = count_runs(symbols_);
}

QaryString QaryString::parse(std::string_view digits, int q) {
  std::vector<Symbol> v;
  v.reserve(digits.size());
  for (char c : digits) {
    int d = -1;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'z') d = 10 + (c - 'a');
    if (d < 0 || d >= q)
      throw std::invalid_argument("invalid symbol '" + std::string(1, c) + "' for q=" + std::to_string(q));
    v.push_back(static_cast<Symbol>(d));
  }
  return QaryString(std::move(v), q);
}

QaryString QaryString::from_rank(std::uint64_t rank, int length, int q) {
  check_alphabet(q);
  std::vector<Symbol> v(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<Symbol>(rank % static_cast<std::uint64_t>(q));
    rank /= static_cast<std::uint64_t>(q);
  }
  if (rank != 0) throw std::domain_error("rank out of range for length");
  return QaryString(std::move(v), q);
}

std::uint64_t QaryString::rank() const {
  (void)checked_pow(q_, static_cast<int>(size()));
  std::uint64_t r = 0;
  for (Symbol s : symbols_) r = r * static_cast<std::uint64_t>(q_) + s;
  return r;
}

std::string QaryString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10));
  return out;
}

QaryString QaryString::erased(std::size_t pos) const {
  std::vector<Symbol> v;
  v.reserve(symbols_.size() - 1);
  v.insert(v.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
  v.insert(v.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, symbols_.end());
  return QaryString(std::move(v), q_);
}

QaryString QaryString::inserted(std::size_t pos, Symbol sym) const {
  std::vector<Symbol> v;
  v.reserve(symbols_.size() + 1);
  v.insert(v.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
  v.push_back(sym);
  v.insert(v.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos), symbols_.end());
  return QaryString(std::move(v), q_);
}

QaryString QaryString::reversed() const {
  return QaryString(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()), q_);
}

std::strong_ordering operator<=>(const QaryString& a, const QaryString& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(),
                                                b.symbols_.end());
}

std::size_t QaryStringHash::operator()(const QaryString& x) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ x.size();
  for (Symbol s : x.symbols()) h = (h ^ s) * 1099511628211ULL;
  return h;
}

StringSet::StringSet(std::vector<QaryString> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StringSet::contains(const QaryString& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::ptrdiff_t StringSet::index_of(const QaryString& x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || !(*it == x)) return -1;
  return it - members_.begin();
}

StringSet set_union(const StringSet& a, const StringSet& b) {
  std::vector<QaryString> v;
  v.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return StringSet(std::move(v));
}

StringSet set_intersection(const StringSet& a, const StringSet& b) {
  std::vector<QaryString> v;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return StringSet(std::move(v));
}

int run_count(const QaryString& x) { return x.runs(); }

StringSet deletion_set(const QaryString& x, int s) {
  if (s < 0 || static_cast<std::size_t>(s) > x.size())
    throw std::domain_error("deletion_set: need 0 <= s <= |x|");
  StringHashSet frontier{x};
  for (int step = 0; step < s; ++step) {
    StringHashSet next;
    for (const QaryString& y : frontier) {
      // Deleting any symbol of a run gives the same string, so one deletion
      // per run enumerates D_1(y) without duplicates.
      const auto sym = y.symbols();
      for (std::size_t i = 0; i < sym.size(); ++i)
        if (i == 0 || sym[i] != sym[i - 1]) next.insert(y.erased(i));
    }
    frontier = std::move(next);
  }
  return to_set(std::move(frontier));
}

StringSet insertion_set(const QaryString& x, int s) {
  if (s < 0) throw std::domain_error("insertion_set: need s >= 0");
  StringHashSet frontier{x};
  for (int step = 0; step < s; ++step) {
    StringHashSet next;
    for (const QaryString& y : frontier)
      for (std::size_t pos = 0; pos <= y.size(); ++pos)
        for (int a = 0; a < y.q(); ++a) next.insert(y.inserted(pos, static_cast<Symbol>(a)));
    frontier = std::move(next);
  }
  return to_set(std::move(frontier));
}

StringSet deletion_set(const StringSet& strings, int s) {
  StringHashSet all;
  for (const QaryString& x : strings)
    for (const QaryString& y : deletion_set(x, s)) all.insert(y);
  return to_set(std::move(all));
}

bool is_subsequence(const QaryString& y, const QaryString& x) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size() && j < y.size(); ++i)
    if (x[i] == y[j]) ++j;
  return j == y.size();
}

int lcs_length(const QaryString& x, const QaryString& y) {
  std::vector<int> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j)
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

int edit_distance(const QaryString& x, const QaryString& y) {
  return static_cast<int>(x.size() + y.size()) - 2 * lcs_length(x, y);
}

std::uint64_t distinct_subsequence_count(std::span<const Symbol> x, int length) {
  const int n = static_cast<int>(x.size());
  if (n > 62) throw std::domain_error("distinct_subsequence_count: string too long");
  if (length < 0 || length > n) return 0;
  // f[i][k]: distinct subsequences of length k in the first i symbols.
  const int width = length + 1;
  std::vector<std::uint64_t> f(static_cast<std::size_t>((n + 1) * width), 0);
  auto at = [&](int i, int k) -> std::uint64_t& { return f[static_cast<std::size_t>(i * width + k)]; };
  std::array<int, 256> last{};
  last.fill(0);
  at(0, 0) = 1;
  for (int i = 1; i <= n; ++i) {
    at(i, 0) = 1;
    const int p = last[x[static_cast<std::size_t>(i - 1)]];
    for (int k = 1; k <= length; ++k) {
      std::uint64_t v = at(i - 1, k) + at(i - 1, k - 1);
      if (p > 0) v -= at(p - 1, k - 1);
      at(i, k) = v;
    }
    last[x[static_cast<std::size_t>(i - 1)]] = i;
  }
  return at(n, length);
}

std::uint64_t deletion_set_size(const QaryString& x, int s) {
  if (s < 0 || static_cast<std::size_t>(s) > x.size())
    throw std::domain_error("deletion_set_size: need 0 <= s <= |x|");
  return distinct_subsequence_count(x.symbols(), static_cast<int>(x.size()) - s);
}

std::uint64_t checked_pow(int q, int n) {
  if (q < 0 || n < 0) throw std::domain_error("checked_pow: negative argument");
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > UINT64_MAX / static_cast<std::uint64_t>(q)) throw std::overflow_error("q^n exceeds 64 bits");
    r *= static_cast<std::uint64_t>(q);
  }
  return r;
}

void for_each_string(int q, int n, const std::function<void(std::uint64_t, std::span<const Symbol>)>& f) {
  check_alphabet(q);
  const std::uint64_t total = checked_pow(q, n);
  std::vector<Symbol> buf(static_cast<std::size_t>(n), 0);
  for (std::uint64_t r = 0; r < total; ++r) {
    f(r, buf);
    // Odometer increment, last symbol fastest.
    for (int i = n - 1; i >= 0; --i) {
      auto& d = buf[static_cast<std::size_t>(i)];
      if (++d < q) break;
      d = 0;
    }
  }
}

StringSet all_strings(int q, int n) {
  std::vector<QaryString> v;
  v.reserve(checked_pow(q, n));
  for_each_string(q, n, [&](std::uint64_t, std::span<const Symbol> s) {
    v.emplace_back(std::vector<Symbol>(s.begin(), s.end()), q);
  });
  return StringSet(std::move(v));
}

StringSet parse_strings(std::span<const std::string> lines, int q) {
  std::vector<QaryString> v;
  v.reserve(lines.size());
  for (const auto& line : lines) {
    v.push_back(QaryString::parse(line, q));
    if (v.back().size() != v.front().size()) throw std::domain_error("strings of mixed length");
  }
  return StringSet(std::move(v));
}

}  // namespace delbound
