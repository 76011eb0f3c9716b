#ifndef CWRES_FIELD_HPP
#define CWRES_FIELD_HPP

#include <string>

#include "cwres/rational.hpp"

namespace cwres {

// Coefficient field selector: exact rationals (default) or a prime field.
struct FieldConfig {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  long long p = 0;

  static FieldConfig rationals() { return {}; }
  static FieldConfig prime(long long p);           // InvalidField unless p prime
  static FieldConfig parse(const std::string& s);  // "q" or "fp:<p>"
  std::string str() const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

// Arithmetic over the configured field. Scalars are carried as Rational
// values; for a prime field every value is kept canonical as n/1 with
// 0 <= n < p, so equality and zero tests stay structural.
class Field {
 public:
  explicit Field(FieldConfig cfg = FieldConfig::rationals());

  const FieldConfig& config() const { return cfg_; }
  long long characteristic() const {
    return cfg_.kind == FieldConfig::Kind::Prime ? cfg_.p : 0;
  }

  Rational from_int(long long v) const;
  Rational canon(const Rational& v) const;  // reduce an input scalar into the field

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  bool is_zero(const Rational& a) const { return a.is_zero(); }

 private:
  FieldConfig cfg_;
  long long mod(long long v) const;
  long long inv_mod(long long v) const;
};

}  // namespace cwres

#endif
