#ifndef CWRES_SIMPLICIAL_HPP
#define CWRES_SIMPLICIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "cwres/chain_complex.hpp"
#include "cwres/poset.hpp"

namespace cwres {

// Abstract simplicial complex over a fixed, ordered vertex universe. The
// empty face is always present; faces are stored per dimension as sorted
// index vectors in lexicographic order, which fixes the basis order of the
// associated chain complexes. Complexes over the same universe can be
// unioned and compared directly, which is what the interval machinery needs
// (Δ_α, D_λ and their unions all live over one linear extension of P).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<std::string> universe);

  static SimplicialComplex from_facets(
      std::vector<std::string> universe,
      const std::vector<std::vector<std::string>>& facets);

  void add_face(std::vector<int> face);  // inserts all subsets

  const std::vector<std::string>& universe() const { return universe_; }
  int universe_index(const std::string& v) const;

  int dim() const;  // -1 when only the empty face is present
  const std::vector<std::vector<int>>& faces(int d) const;
  int face_count() const;  // nonempty faces
  bool contains(const std::vector<int>& face) const;
  int face_index(int d, const std::vector<int>& face) const;  // -1 if absent
  std::string face_label(const std::vector<int>& face) const;

  // Vertex ids actually used (dimension-0 faces).
  std::vector<std::string> vertex_ids() const;

  bool subcomplex_of(const SimplicialComplex& other) const;
  SimplicialComplex unioned(const SimplicialComplex& other) const;

  // Reduced simplicial chain complex, degrees -1..dim. Faces are oriented by
  // the universe order; the boundary drops vertices with alternating signs
  // and every vertex maps to +1 times the empty face.
  ChainComplex reduced_chain_complex(const Field& f) const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  std::vector<std::string> universe_;
  std::map<std::string, int> uindex_;
  std::vector<std::vector<std::vector<int>>> faces_;  // faces_[d], sorted
};

// Order complex Δ(P): faces are the chains of P, vertices in a linear
// extension so chain order and vertex order agree.
SimplicialComplex order_complex(const Poset& p);

// Order complex of the subset {x : keep(x)} of P, built over the full
// universe of P (all elements, linear-extension order).
SimplicialComplex order_complex_over(const Poset& p,
                                     const std::function<bool(int)>& keep);

}  // namespace cwres

#endif
