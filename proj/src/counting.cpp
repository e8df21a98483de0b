#include "delbound/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace delbound {

BigInt binomial(long n, long k) {
  BigInt out = 0;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt power(long q, long e) {
  if (e < 0) throw std::domain_error("power: negative exponent");
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), BigInt(q).get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

BigInt composition_count(long n, long k, long d) {
  return binomial(n - k * (d - 1) - 1, k - 1);
}

BigInt delta(long r, long s) {
  if (s < 0 || s > r) return 0;
  if (s == r) return 1;
  BigInt sum = 0;
  for (long i = 0; i <= s; ++i) sum += binomial(r - s, i);
  return sum;
}

BigInt iota(long q, long s, long n) {
  if (q < 2 || s < 0 || s > n) throw std::domain_error("iota: need q >= 2 and 0 <= s <= n");
  BigInt sum = 0;
  for (long j = 0; j <= s; ++j) sum += binomial(n, j) * power(q - 1, j);
  return sum;
}

BigInt dset_size_lower(long r, long s, long n) {
  if (r <= 2 || r > n) throw std::domain_error("dset_size_lower: need 2 < r <= n");
  if (s < 0 || s >= n) throw std::domain_error("dset_size_lower: need 0 <= s < n");
  BigInt sum = delta(r, s);
  const long hi = std::min(s - 2, r - 3);
  for (long i = s + r - n - 1; i <= hi; ++i) sum += delta(r - 2, i);
  return sum;
}

BigInt dset_size_upper(long r, long s) {
  if (r < 1 || s < 0) throw std::domain_error("dset_size_upper: need r >= 1, s >= 0");
  return binomial(r + s - 1, s);
}

BigInt count_strings_with_runs(long q, long m, long r) {
  if (q < 2 || r < 1 || r > m) throw std::domain_error("count_strings_with_runs: need q >= 2, 1 <= r <= m");
  return BigInt(q) * power(q - 1, r - 1) * binomial(m - 1, r - 1);
}

}  // namespace delbound
