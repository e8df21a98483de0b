#include "delbound/codebooks.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "delbound/errors.hpp"

namespace delbound {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Vt: return "vt";
    case Provenance::Tenengolts: return "tenengolts";
    case Provenance::Witness: return "witness";
    case Provenance::User: return "user";
  }
  return "user";
}

std::string Codebook::label() const {
  std::string out = to_string(provenance);
  if (parameters.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < parameters.size(); ++i) out += (i ? "," : "") + std::to_string(parameters[i]);
  return out + ')';
}

Codebook vt_code(int n, int a) {
  if (n < 1 || a < 0 || a > n) throw std::domain_error("vt_code: need n >= 1 and 0 <= a <= n");
  Codebook code;
  code.n = n;
  code.provenance = Provenance::Vt;
  code.parameters = {a};
  std::vector<QaryString> members;
  for_each_string(2, n, [&](std::uint64_t, std::span<const Symbol> x) {
    long sum = 0;
    for (int i = 0; i < n; ++i) sum += (i + 1) * x[static_cast<std::size_t>(i)];
    if (sum % (n + 1) == a) members.emplace_back(std::vector<Symbol>(x.begin(), x.end()), 2);
  });
  code.members = StringSet(std::move(members));
  return code;
}

namespace {

std::pair<int, int> tenengolts_syndrome(std::span<const Symbol> x, int q, int n) {
  long weight = 0, aux = 0;
  for (int i = 0; i < n; ++i) {
    weight += x[static_cast<std::size_t>(i)];
    const bool rise = i == 0 || x[static_cast<std::size_t>(i)] >= x[static_cast<std::size_t>(i - 1)];
    if (rise) aux += i;  // a_i weighted by (i-1) with 1-based i
  }
  return {static_cast<int>(weight % q), static_cast<int>(aux % n)};
}

}  // namespace

Codebook tenengolts_code(int q, int n, int beta, int gamma) {
  if (q < 2 || n < 1) throw std::domain_error("tenengolts_code: need q >= 2, n >= 1");
  if (beta < 0 || beta >= q || gamma < 0 || gamma >= n) throw std::domain_error("tenengolts_code: residue out of range");
  Codebook code;
  code.q = q;
  code.n = n;
  code.provenance = Provenance::Tenengolts;
  code.parameters = {beta, gamma};
  std::vector<QaryString> members;
  for_each_string(q, n, [&](std::uint64_t, std::span<const Symbol> x) {
    if (tenengolts_syndrome(x, q, n) == std::pair{beta, gamma})
      members.emplace_back(std::vector<Symbol>(x.begin(), x.end()), q);
  });
  code.members = StringSet(std::move(members));
  if (const auto check = verify_codebook(code, 1); !check.valid)
    throw ConsistencyError("tenengolts_code: " + check.violation->first.str() + " and " + check.violation->second.str() +
                           " are confusable");
  return code;
}

std::vector<std::vector<long>> tenengolts_family_sizes(int q, int n) {
  if (q < 2 || n < 1) throw std::domain_error("tenengolts_family_sizes: need q >= 2, n >= 1");
  std::vector<std::vector<long>> sizes(static_cast<std::size_t>(q), std::vector<long>(static_cast<std::size_t>(n), 0));
  for_each_string(q, n, [&](std::uint64_t, std::span<const Symbol> x) {
    const auto [b, g] = tenengolts_syndrome(x, q, n);
    ++sizes[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)];
  });
  return sizes;
}

CodebookCheck verify_codebook(const Codebook& code, int s, std::size_t cross_check_limit) {
  if (s < 1) throw std::domain_error("verify_codebook: need s >= 1");
  const auto& m = code.members;
  for (const auto& x : m)
    if (x.size() != m[0].size() || x.q() != m[0].q()) throw std::domain_error("verify_codebook: mixed lengths or alphabets");

  CodebookCheck out;
  for (std::size_t i = 0; i < m.size() && out.valid; ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (edit_distance(m[i], m[j]) <= 2 * s) {
        out.valid = false;
        out.violation = {m[i], m[j]};
        break;
      }

  if (m.empty() || m[0].size() < static_cast<std::size_t>(s)) return out;
  std::size_t total = 0;
  for (const auto& x : m) {
    total += deletion_set_size(x, s);
    if (total > cross_check_limit) return out;
  }
  bool disjoint = true;
  std::unordered_map<QaryString, std::size_t, QaryStringHash> owner;
  for (std::size_t i = 0; i < m.size() && disjoint; ++i)
    for (const auto& d : deletion_set(m[i], s))
      if (!owner.emplace(d, i).second) {
        disjoint = false;
        break;
      }
  if (disjoint != out.valid) throw ConsistencyError("verify_codebook: edit distance and deletion sets disagree");
  out.cross_checked = true;
  return out;
}

BestKnown best_known_size(int q, int n) {
  BestKnown out;
  if (q == 2) {
    out.code = vt_code(n, 0);
  } else {
    const auto sizes = tenengolts_family_sizes(q, n);
    int best_b = 0, best_g = 0;
    for (int b = 0; b < q; ++b)
      for (int g = 0; g < n; ++g)
        if (sizes[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)] >
            sizes[static_cast<std::size_t>(best_b)][static_cast<std::size_t>(best_g)])
          best_b = b, best_g = g;
    out.code = tenengolts_code(q, n, best_b, best_g);
  }
  out.size = static_cast<long>(out.code.size());
  return out;
}

Codebook read_codebook(std::istream& is, int q, int s) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(is, line);) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line.substr(start));
  }
  Codebook code;
  code.q = q;
  code.s = s;
  code.members = parse_strings(lines, q);
  code.n = code.members.empty() ? 0 : static_cast<int>(code.members[0].size());
  return code;
}

void write_codebook(std::ostream& os, const Codebook& code) {
  for (const auto& x : code.members) os << x.str() << '\n';
}

}  // namespace delbound
