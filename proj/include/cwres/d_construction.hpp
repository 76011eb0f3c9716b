#ifndef CWRES_D_CONSTRUCTION_HPP
#define CWRES_D_CONSTRUCTION_HPP

#include <map>
#include <optional>
#include <vector>

#include "cwres/chain_complex.hpp"
#include "cwres/poset.hpp"
#include "cwres/simplicial.hpp"

namespace cwres {

// Homology of one open interval (0̂,α). The order complex lives over the
// full poset universe, so chains move between intervals without relabeling.
struct IntervalHomology {
  SimplicialComplex complex;  // Δ_α
  ChainComplex chain;
  HomologyResult hom;
};

struct IntervalTable {
  int zero = -1;  // index of 0̂
  std::vector<std::optional<IntervalHomology>> by_element;
};

// Per-element interval homology; elements are independent, so the default
// path fans out across threads while the serial version is the reference
// the tests compare against.
IntervalTable interval_homology_table(const Poset& p, const Field& f);
IntervalTable interval_homology_table_serial(const Poset& p, const Field& f);

// Which lower cover a face of Δ_α is assigned to. Both strategies must give
// the same connecting maps; keeping two of them makes that testable.
enum class CoverStrategy { SmallestId, LargestId };

// Shared state for everything built from interval homology: cover
// assignments, Mayer-Vietoris connecting maps and the φ component matrices.
class IntervalContext {
 public:
  IntervalContext(const Poset& p, const Field& f, bool parallel = true);

  const Poset& poset() const { return *p_; }
  const Field& field() const { return f_; }
  int zero() const { return table_.zero; }
  const IntervalTable& table() const { return table_; }
  const IntervalHomology& delta(int alpha) const;

  int element_at(int upos) const { return ext_[upos]; }
  int upos_of(int element) const { return pos_[element]; }
  // Poset-largest member of a chain face (faces are sorted by a linear
  // extension, so this is the last entry).
  int top_of(const std::vector<int>& face) const;

  int assign_cover(int alpha, const std::vector<int>& face,
                   CoverStrategy s) const;

  // the full assignment for Δ_α: face -> chosen lower cover
  std::map<std::vector<int>, int> cover_assignment(int alpha,
                                                   CoverStrategy s) const;

  // φ_i^{α,λ} on one class: split the cycle by the cover assignment, take
  // the boundary of the λ-part, read it inside Δ_λ and expand it in the
  // stored homology basis. cycle_degree -1 is the border case φ_1 where the
  // map is the identity on H̃_{-1}.
  std::vector<Rational> connecting_map(int alpha, int lambda,
                                       const std::vector<Rational>& cycle,
                                       int cycle_degree,
                                       CoverStrategy s) const;

  // Component matrix of φ on the stored bases: columns over the degree-hdeg
  // homology basis of Δ_α, rows over the degree-(hdeg-1) basis of Δ_λ.
  Matrix phi_component(int alpha, int lambda, int hdeg, CoverStrategy s) const;

  // Coordinates of a chain of Δ_alpha, reinterpreted in Δ_lambda's basis.
  std::vector<Rational> reinterpret_chain(int alpha, int lambda,
                                          const std::vector<Rational>& chain,
                                          int degree) const;

 private:
  const Poset* p_;
  Field f_;
  IntervalTable table_;
  std::vector<int> ext_, pos_;
};

// One direct summand H̃_{hdeg}(Δ_element) sitting inside a degree of D(P).
struct DSummand {
  int element = -1;
  int hdeg = 0;
  int offset = 0;
  int count = 0;
};

// The sequence D(P): D_0 is one-dimensional, degree i collects
// H̃_{i-2}(Δ_α) over all α above 0̂, and φ is assembled from the connecting
// maps (φ_1 is the identity on each atom summand). D(P) need not be a
// complex for a general poset; is_complex records the verified fact.
struct DSequence {
  ChainComplex cc;  // degrees 0..hi
  std::vector<std::vector<DSummand>> summands;
  bool is_complex = false;
  std::optional<ComplexWitness> witness;

  std::vector<int> dims() const;
  const DSummand* summand_at(int degree, int element) const;
};

DSequence d_construction(const IntervalContext& ctx,
                         CoverStrategy s = CoverStrategy::SmallestId);
DSequence d_construction(const Poset& p, const Field& f,
                         CoverStrategy s = CoverStrategy::SmallestId,
                         bool parallel = true);

// Isomorphism test for complexes of finite-dimensional vector spaces:
// per-degree dimensions and differential ranks characterize the class.
// Both sides must verify as complexes.
bool compare_complexes(const ChainComplex& c, const ChainComplex& d, int shift,
                       const Field& f);

// Δ_α^{(j)}: union of the order complexes D_γ over γ ≤ α of rank
// rank(α) - j. Requires a ranked poset.
SimplicialComplex skeletal_filtration(const Poset& p, int alpha, int j);

// Machine check of the commutative square relating the connecting map of
// the triple Δ^{(j+2)} ⊂ Δ^{(j+1)} ⊂ Δ^{(j)} with reindexing and φ,
// evaluated on an explicit basis of every relative homology degree i >= 1.
class FiltrationChecker {
 public:
  FiltrationChecker(const Poset& p, const Field& f,
                    CoverStrategy s = CoverStrategy::SmallestId);
  bool check(int alpha, int j) const;
  const std::vector<int>& ranks() const { return rank_; }
  const IntervalContext& context() const { return ctx_; }

 private:
  IntervalContext ctx_;
  CoverStrategy strategy_;
  std::vector<int> rank_;
  SimplicialComplex filtration(int alpha, int j) const;
};

bool check_filtration_square(const Poset& p, int alpha, int j, const Field& f);

}  // namespace cwres

#endif
