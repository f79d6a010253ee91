#include "plcommute/rational.hpp"

#include <cctype>
#include <ostream>

namespace plc {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(Err::ParseError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw Error(Err::Internal, "rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::parse(std::string_view text) {
  size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string out;
    if (allow_sign && i < n && (text[i] == '-' || text[i] == '+')) out.push_back(text[i++]);
    size_t digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i++]);
      ++digits;
    }
    if (digits == 0) throw Error(Err::ParseError, "expected digits at offset " + std::to_string(i));
    return out;
  };

  skip_ws();
  std::string num = read_int(true);
  skip_ws();
  std::string den = "1";
  if (i < n && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int(false);
    skip_ws();
  }
  if (i != n) throw Error(Err::ParseError, "trailing characters at offset " + std::to_string(i));

  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw Error(Err::ParseError, "zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace plc
