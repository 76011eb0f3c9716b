#ifndef CWRES_MONOMIAL_HPP
#define CWRES_MONOMIAL_HPP

#include <string>
#include <vector>

namespace cwres {

// Monomial in a fixed number of variables, stored as its exponent vector.
// Divisibility and lcm are componentwise; the ambient variable count must
// agree between operands.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<long long> exps) : e_(std::move(exps)) {}
  static Monomial one(int vars) { return Monomial(std::vector<long long>(vars, 0)); }

  int vars() const { return static_cast<int>(e_.size()); }
  long long exp(int i) const { return e_[i]; }
  const std::vector<long long>& exps() const { return e_; }
  bool is_one() const;
  long long total_degree() const;

  bool divides(const Monomial& other) const;
  Monomial lcm_with(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial quotient_by(const Monomial& other) const;  // other must divide

  // "1" or "x1^2*x3"
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // lexicographic on exponent vectors; used only for deterministic ordering
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.e_ < b.e_;
  }

 private:
  std::vector<long long> e_;
};

Monomial lcm(const std::vector<Monomial>& ms, int vars);

}  // namespace cwres

#endif
