#include "cwres/field.hpp"

#include "cwres/errors.hpp"

namespace cwres {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldConfig FieldConfig::prime(long long p) {
  if (p > (1LL << 31) || !is_prime(p))
    throw Error("InvalidField", "not a supported prime: " + std::to_string(p));
  FieldConfig cfg;
  cfg.kind = Kind::Prime;
  cfg.p = p;
  return cfg;
}

FieldConfig FieldConfig::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stoll(s.substr(3)));
    } catch (const std::logic_error&) {
      throw Error("InvalidField", "cannot parse field '" + s + "'");
    }
  }
  throw Error("InvalidField", "expected 'q' or 'fp:<p>', got '" + s + "'");
}

std::string FieldConfig::str() const {
  return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
}

Field::Field(FieldConfig cfg) : cfg_(cfg) {
  if (cfg_.kind == FieldConfig::Kind::Prime && !is_prime(cfg_.p))
    throw Error("InvalidField", "not prime: " + std::to_string(cfg_.p));
}

long long Field::mod(long long v) const {
  long long r = v % cfg_.p;
  return r < 0 ? r + cfg_.p : r;
}

long long Field::inv_mod(long long v) const {
  // extended Euclid
  long long a = mod(v), b = cfg_.p, x0 = 1, x1 = 0;
  if (a == 0) throw Error("DivisionByZero", "inverse of zero mod p");
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return mod(x0);
}

Rational Field::from_int(long long v) const {
  if (cfg_.kind == FieldConfig::Kind::Rationals) return Rational(v);
  return Rational(mod(v));
}

Rational Field::canon(const Rational& v) const {
  if (cfg_.kind == FieldConfig::Kind::Rationals) return v;
  if (v.den() % cfg_.p == 0)
    throw Error("InvalidField", "denominator divisible by p");
  __int128 n = static_cast<__int128>(mod(v.num())) * inv_mod(v.den());
  return Rational(static_cast<long long>(n % cfg_.p));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  return canon(a + b);
}
Rational Field::sub(const Rational& a, const Rational& b) const {
  return canon(a - b);
}
Rational Field::mul(const Rational& a, const Rational& b) const {
  if (cfg_.kind == FieldConfig::Kind::Prime) {
    __int128 n = static_cast<__int128>(a.num()) * b.num();
    return Rational(static_cast<long long>(((n % cfg_.p) + cfg_.p) % cfg_.p));
  }
  return a * b;
}
Rational Field::div(const Rational& a, const Rational& b) const {
  if (cfg_.kind == FieldConfig::Kind::Prime) return mul(a, inv(b));
  return a / b;
}
Rational Field::neg(const Rational& a) const { return canon(-a); }
Rational Field::inv(const Rational& a) const {
  if (cfg_.kind == FieldConfig::Kind::Prime)
    return Rational(inv_mod(a.num()));
  return a.inverse();
}

}  // namespace cwres
