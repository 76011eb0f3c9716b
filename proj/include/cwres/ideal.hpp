#ifndef CWRES_IDEAL_HPP
#define CWRES_IDEAL_HPP

#include <string>
#include <vector>

#include "cwres/cw.hpp"
#include "cwres/monomial.hpp"
#include "cwres/poset.hpp"

namespace cwres {

// Monomial ideal stored by its minimal generators (no generator divides
// another). Construction minimalizes and deduplicates the input.
class MonomialIdeal {
 public:
  static MonomialIdeal minimalize(int vars, std::vector<Monomial> gens);

  int vars() const { return vars_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const Monomial& gen(int i) const { return gens_[i]; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool contains(const Monomial& m) const;  // membership in the ideal

 private:
  int vars_ = 0;
  std::vector<Monomial> gens_;
};

// Lattice of lcms of nonempty generator subsets plus the bottom element 1,
// ordered by divisibility. Elements are listed bottom first, then by
// (total degree, exponent lex), which fixes all downstream bases.
struct LcmLattice {
  Poset poset;
  std::vector<Monomial> monomials;  // by poset element index
  int bottom = 0;

  int element_of(const Monomial& m) const;  // -1 if absent
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal);

// Simplicial support complexes, as regular CW-complexes whose cells are
// generator subsets labeled by their lcm.
RegularCWComplex taylor_complex(const MonomialIdeal& ideal);
// Faces whose lcm no other subset attains.
RegularCWComplex scarf_complex(const MonomialIdeal& ideal);
// Rooted faces with respect to a generator order (default: input order):
// every nonempty subset must contain its order-first generator dividing the
// subset's lcm.
RegularCWComplex lyubeznik_complex(const MonomialIdeal& ideal,
                                   std::vector<int> order = {});

}  // namespace cwres

#endif
