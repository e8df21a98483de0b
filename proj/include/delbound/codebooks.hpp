#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delbound/qary_string.hpp"

namespace delbound {

enum class Provenance { Vt, Tenengolts, Witness, User };

std::string to_string(Provenance p);

/// Equal-length strings over one alphabet, stored sorted.
struct Codebook {
  int q = 2;
  int n = 0;
  int s = 1;
  StringSet members;
  Provenance provenance = Provenance::User;
  /// vt: {a}; tenengolts: {beta, gamma}; otherwise empty.
  std::vector<int> parameters;

  [[nodiscard]] std::size_t size() const { return members.size(); }
  /// "vt(0)", "tenengolts(2,5)", "witness", "user".
  [[nodiscard]] std::string label() const;

  friend bool operator==(const Codebook& a, const Codebook& b) { return a.members == b.members; }
};

/// VT_a(n) = {x in F_2^n : sum_i i x_i = a mod (n+1)}, positions from 1.
Codebook vt_code(int n, int a);

/// Tenengolts' q-ary single-deletion code. With the binary auxiliary
/// sequence a_1 = 1, a_i = [x_i >= x_{i-1}] (i >= 2):
///   {x in F_q^n : sum_i x_i = beta mod q,  sum_i (i-1) a_i = gamma mod n}.
/// The result is verified before it is returned; a failure throws
/// ConsistencyError.
Codebook tenengolts_code(int q, int n, int beta, int gamma);

/// |code(beta, gamma)| for every parameter pair, indexed [beta][gamma].
std::vector<std::vector<long>> tenengolts_family_sizes(int q, int n);

struct CodebookCheck {
  bool valid = true;
  /// First pair (in member order) at edit distance <= 2s.
  std::optional<std::pair<QaryString, QaryString>> violation;
  /// Whether the deletion-set intersection test also ran (and agreed).
  bool cross_checked = false;
};

/// Pairwise edit distance > 2s. When the deletion sets are small enough to
/// materialise (total size <= `cross_check_limit`), pairwise disjointness
/// of D_s is checked as well; disagreement throws ConsistencyError.
/// Mixed lengths or alphabets throw std::domain_error.
CodebookCheck verify_codebook(const Codebook& code, int s, std::size_t cross_check_limit = 1 << 20);

struct BestKnown {
  long size = 0;
  Codebook code;
};

/// q = 2: VT_0(n). Otherwise the largest Tenengolts code over all
/// (beta, gamma), smallest pair first on ties.
BestKnown best_known_size(int q, int n);

/// Newline-delimited digit strings; blank lines and '#' comments skipped.
Codebook read_codebook(std::istream& is, int q, int s = 1);
void write_codebook(std::ostream& os, const Codebook& code);

}  // namespace delbound
