#ifndef CWRES_CHAIN_COMPLEX_HPP
#define CWRES_CHAIN_COMPLEX_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwres/matrix.hpp"

namespace cwres {

// Location of the first nonzero entry of a failing composition d∘d.
struct ComplexWitness {
  int degree = 0;  // upper degree of the failing pair
  int row = 0;
  int col = 0;
};

// Bounded complex of finite-dimensional vector spaces. Degrees run over
// [lo, hi]; diff(d) maps degree d to degree d-1 and exists for lo < d <= hi.
// Construction validates shapes and per-degree label distinctness but does
// NOT assert d∘d = 0: the D(P) sequence of a general poset need not be a
// complex, so that property is checked explicitly via verify().
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(int lo, std::vector<int> dims, std::vector<Matrix> diffs,
               std::vector<std::vector<std::string>> labels);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int d) const;
  const Matrix& diff(int d) const;  // empty matrix outside (lo, hi]
  const std::vector<std::string>& labels(int d) const;
  int label_index(int d, const std::string& label) const;  // -1 if absent

  std::optional<ComplexWitness> verify(const Field& f) const;
  long long euler_characteristic() const;

 private:
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<Matrix> diffs_;  // diffs_[k] : degree lo+k+1 -> lo+k
  std::vector<std::vector<std::string>> labels_;
};

struct DegreeHomology {
  int betti = 0;
  std::vector<std::vector<Rational>> cycles;      // homology representatives
  std::vector<std::vector<Rational>> boundaries;  // basis of the boundary space
};

// Betti numbers with explicit cycle bases per degree, plus an expansion
// solver writing any cycle in the stored basis modulo boundaries.
class HomologyResult {
 public:
  HomologyResult() = default;
  HomologyResult(int lo, std::vector<DegreeHomology> deg)
      : lo_(lo), deg_(std::move(deg)) {}

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(deg_.size()) - 1; }
  int betti(int d) const;
  const DegreeHomology& at(int d) const;
  std::map<int, int> betti_map() const;  // nonzero degrees only
  bool all_zero() const;
  int total() const;

  // Coordinates of [z] in the degree-d homology basis; nullopt when z is not
  // a cycle modulo boundaries.
  std::optional<std::vector<Rational>> expand(int d,
                                              const std::vector<Rational>& z,
                                              const Field& f) const;

 private:
  int lo_ = 0;
  std::vector<DegreeHomology> deg_;
};

// Throws NotAComplex when verify fails.
HomologyResult homology(const ChainComplex& c, const Field& f);
// Same computation without the d∘d check (for complexes already verified).
HomologyResult homology_unchecked(const ChainComplex& c, const Field& f);

// Subcomplex given by basis labels per degree; must be closed under the
// differential's support.
using SubcomplexSelection = std::map<int, std::set<std::string>>;

ChainComplex quotient_complex(const ChainComplex& c,
                              const SubcomplexSelection& sub);
HomologyResult relative_homology(const ChainComplex& c,
                                 const SubcomplexSelection& sub,
                                 const Field& f);

}  // namespace cwres

#endif
