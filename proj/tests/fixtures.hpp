#ifndef CWRES_TESTS_FIXTURES_HPP
#define CWRES_TESTS_FIXTURES_HPP

// Shared desk fixtures: the two-dimensional complex with a triangle and a
// square glued along an edge path, its face poset, and the small monomial
// ideals the suite revolves around.

#include <string>
#include <vector>

#include "cwres/cw.hpp"
#include "cwres/ideal.hpp"
#include "cwres/poset.hpp"

namespace fixtures {

using namespace cwres;

inline RegularCWComplex disk_with_two_cells() {
  std::vector<CWCell> cells = {
      {"1", 0, {}, {}},
      {"2", 0, {}, {}},
      {"3", 0, {}, {}},
      {"4", 0, {}, {}},
      {"12", 1, {"1", "2"}, {}},
      {"13", 1, {"1", "3"}, {}},
      {"23", 1, {"2", "3"}, {}},
      {"14", 1, {"1", "4"}, {}},
      {"24", 1, {"2", "4"}, {}},
      {"123", 2, {"12", "13", "23"}, {}},
      {"1234", 2, {"13", "23", "14", "24"}, {}},
  };
  return RegularCWComplex::from_cells(std::move(cells));
}

inline Poset disk_poset() { return face_poset(disk_with_two_cells()).poset; }

inline Monomial mono(std::vector<long long> e) { return Monomial(std::move(e)); }

// (xy, yz, xz) in k[x,y,z]
inline MonomialIdeal triangle_ideal() {
  return MonomialIdeal::minimalize(
      3, {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})});
}

// (x^2, xy, y^2) in k[x,y]
inline MonomialIdeal power_square_ideal() {
  return MonomialIdeal::minimalize(2,
                                   {mono({2, 0}), mono({1, 1}), mono({0, 2})});
}

// (x, y) in k[x,y]
inline MonomialIdeal two_variable_ideal() {
  return MonomialIdeal::minimalize(2, {mono({1, 0}), mono({0, 1})});
}

// one edge with two endpoints
inline RegularCWComplex edge_complex() {
  std::vector<CWCell> cells = {
      {"u", 0, {}, {}}, {"v", 0, {}, {}}, {"uv", 1, {"u", "v"}, {}}};
  return RegularCWComplex::from_cells(std::move(cells));
}

// hollow triangle: three vertices, three edges
inline RegularCWComplex hollow_triangle() {
  std::vector<CWCell> cells = {
      {"a", 0, {}, {}},          {"b", 0, {}, {}},
      {"c", 0, {}, {}},          {"ab", 1, {"a", "b"}, {}},
      {"ac", 1, {"a", "c"}, {}}, {"bc", 1, {"b", "c"}, {}}};
  return RegularCWComplex::from_cells(std::move(cells));
}

}  // namespace fixtures

#endif
