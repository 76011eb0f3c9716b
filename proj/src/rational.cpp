#include "cwres/rational.hpp"

#include <cstdlib>
#include <limits>

#include "cwres/errors.hpp"

namespace cwres {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw Error("Overflow", "rational arithmetic exceeded 64-bit range");
  return static_cast<long long>(v);
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw Error("DivisionByZero", "rational with zero denominator");
  if (n == 0) return Rational();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  Rational r;
  r.num_ = narrow(n / g);
  r.den_ = narrow(d / g);
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.den_ +
                            static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("DivisionByZero", "rational division by zero");
  return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                        static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return make(den_, num_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error("BadInput", "cannot parse rational '" + s + "'");
  }
}

}  // namespace cwres
