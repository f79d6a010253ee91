#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "plcommute/errors.hpp"

namespace plc {

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Thin value wrapper around GMP's mpq type; text form is `p/q` (or `p` for
/// integers), which is also what the map serialization and the CLI use.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(long num, long den);

  /// Accepts `p`, `p/q`, optional leading '-', surrounding whitespace.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Trusted: q must already be canonical (all mpq arithmetic results are).
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

inline bool in_unit_interval(const Rational& r) { return r >= Rational(0) && r <= Rational(1); }

}  // namespace plc
