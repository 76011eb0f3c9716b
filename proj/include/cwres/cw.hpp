#ifndef CWRES_CW_HPP
#define CWRES_CW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwres/chain_complex.hpp"
#include "cwres/monomial.hpp"
#include "cwres/poset.hpp"

namespace cwres {

// One closed cell, listed by its codimension-1 faces. The empty cell of
// dimension -1 is implicit: it is the unique facet of every 0-cell.
struct CWCell {
  std::string id;
  int dim = 0;
  std::vector<std::string> facets;
  std::optional<Monomial> mdeg;
};

class RegularCWComplex {
 public:
  static RegularCWComplex from_cells(std::vector<CWCell> cells);

  int size() const { return static_cast<int>(cells_.size()); }
  const CWCell& cell(int i) const { return cells_[i]; }
  const std::vector<CWCell>& cells() const { return cells_; }
  int index(const std::string& id) const;
  int top_dim() const;
  std::vector<int> cells_of_dim(int d) const;  // input order
  const std::vector<int>& facet_indices(int i) const { return facets_[i]; }
  bool has_multidegrees() const;

 private:
  std::vector<CWCell> cells_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> facets_;
};

struct FacePoset {
  Poset poset;
  std::vector<int> rank;  // rank(σ) = dim(σ) + 1; ∅ is 0̂ of rank 0
};

// Cells of X ordered by containment, with the empty cell as least element.
FacePoset face_poset(const RegularCWComplex& x);

// The inverse direction of Björner's correspondence: cells are the elements
// above 0̂ with dim = rank - 1, facets the lower covers. Requires the
// CW-poset test to pass. Optional multidegrees are attached per element.
RegularCWComplex from_face_poset(const Poset& p, const Field& f,
                                 const std::map<std::string, Monomial>& mdeg = {});

// Incidence numbers read off the poset construction: c_{σ,τ} is the φ entry
// between the σ and τ summands of D(P_X) in the canonically normalized
// homology bases. Entries outside {-1,0,+1} signal an internal bug
// (EntryNotUnit). The field must have characteristic != 2 so signs survive.
struct IncidenceNumbers {
  std::map<std::pair<std::string, std::string>, int> c;
  int get(const std::string& sigma, const std::string& tau) const;
};

IncidenceNumbers incidence_numbers(const RegularCWComplex& x, const Field& f);

// Cellular chain complex in degrees -1..dim X; degree -1 is spanned by the
// empty cell and every vertex augments to +1 times it.
ChainComplex cellular_chain_complex(const RegularCWComplex& x, const Field& f);

RegularCWComplex skeleton(const RegularCWComplex& x, int i);
// Full subcomplex of cells whose multidegree divides x^b.
RegularCWComplex restrict_to_multidegree(const RegularCWComplex& x,
                                         const Monomial& b);

}  // namespace cwres

#endif
