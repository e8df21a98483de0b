#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace delbound {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Thin value wrapper over mpq_class. gmpxx's expression templates do not
/// compose with Eigen's, so every operator here returns a concrete Rational;
/// this is what lets Rational serve as an Eigen scalar (see NumTraits below).
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return v_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return v_.get_den(); }

  [[nodiscard]] BigInt floor() const;
  [[nodiscard]] BigInt ceil() const;
  [[nodiscard]] double to_double() const { return v_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical "num/den" rendering; integers render as "num/1" so the
  /// format is uniform in CSV output.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Binary-exact conversion helpers for BigInt.
std::string to_string(const BigInt& v);
double to_double(const BigInt& v);

}  // namespace delbound

namespace Eigen {

template <>
struct NumTraits<delbound::Rational> : GenericNumTraits<delbound::Rational> {
  using Real = delbound::Rational;
  using NonInteger = delbound::Rational;
  using Nested = delbound::Rational;
  using Literal = delbound::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
