#ifndef CWRES_RATIONAL_HPP
#define CWRES_RATIONAL_HPP

#include <string>

namespace cwres {

// Exact rational scalar. Numerator and denominator are kept reduced with a
// positive denominator; intermediate products run through 128-bit integers
// and anything that cannot be narrowed back to 64 bits throws. No floating
// point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // b != 0
  friend bool operator==(const Rational& a, const Rational& b) = default;

  Rational inverse() const;

  // "3", "-3" or "3/4"; parse accepts both forms.
  std::string str() const;
  static Rational parse(const std::string& s);

 private:
  long long num_ = 0;
  long long den_ = 1;

  static Rational make(__int128 n, __int128 d);
};

}  // namespace cwres

#endif
