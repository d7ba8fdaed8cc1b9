#include "walpha/rational.hpp"

#include <cctype>
#include <ostream>

namespace walpha {

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw ParseError("bad rational: '" + text + "'");
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError("bad rational: '" + text + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ParseError("bad rational: '" + text + "'");
  };
  if (slash == std::string::npos) {
    check_int(s, true);
    return Rational(mpq_class(mpz_class(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  mpz_class d(den);
  if (d == 0) throw ParseError("bad rational (zero denominator): '" + text + "'");
  return Rational(mpq_class(mpz_class(num), d));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  Rational out{mpq_class(num, den)};
  return neg ? out.inverse() : out;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace walpha
