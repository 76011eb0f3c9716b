#include "cwres/monomial.hpp"

#include <algorithm>

#include "cwres/errors.hpp"

namespace cwres {

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](long long x) { return x == 0; });
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (long long x : e_) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (vars() != other.vars())
    throw Error("DimensionMismatch", "monomials in different variable counts");
  for (int i = 0; i < vars(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
  if (vars() != other.vars())
    throw Error("DimensionMismatch", "monomials in different variable counts");
  std::vector<long long> out(e_);
  for (int i = 0; i < vars(); ++i) out[i] = std::max(out[i], other.e_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::times(const Monomial& other) const {
  if (vars() != other.vars())
    throw Error("DimensionMismatch", "monomials in different variable counts");
  std::vector<long long> out(e_);
  for (int i = 0; i < vars(); ++i) out[i] += other.e_[i];
  return Monomial(std::move(out));
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  if (!other.divides(*this))
    throw Error("BadInput",
                "quotient " + str() + " / " + other.str() + " is not a monomial");
  std::vector<long long> out(e_);
  for (int i = 0; i < vars(); ++i) out[i] -= other.exp(i);
  return Monomial(std::move(out));
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < vars(); ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial lcm(const std::vector<Monomial>& ms, int vars) {
  Monomial out = Monomial::one(vars);
  for (const auto& m : ms) out = out.lcm_with(m);
  return out;
}

}  // namespace cwres
