#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cwres/cw.hpp"
#include "cwres/errors.hpp"
#include "cwres/ideal.hpp"
#include "cwres/simplicial.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cwres;

namespace {

// poset isomorphism restricted to matching ids: same elements, same covers
bool same_poset(const Poset& a, const Poset& b) {
  std::set<std::string> ia(a.ids().begin(), a.ids().end());
  std::set<std::string> ib(b.ids().begin(), b.ids().end());
  if (ia != ib) return false;
  std::set<std::pair<std::string, std::string>> ca, cb;
  for (const auto& [lo, hi] : a.covers()) ca.insert({a.id(lo), a.id(hi)});
  for (const auto& [lo, hi] : b.covers()) cb.insert({b.id(lo), b.id(hi)});
  return ca == cb;
}

}  // namespace

TEST_CASE("cw validation") {
  CHECK_THROWS_AS(RegularCWComplex::from_cells(
                      {{"a", 0, {}, {}}, {"a", 0, {}, {}}}),
                  Error);
  CHECK_THROWS_AS(RegularCWComplex::from_cells({{"e", 1, {"u", "v"}, {}}}),
                  Error);
  CHECK_THROWS_AS(RegularCWComplex::from_cells({{"e", 1, {}, {}}}), Error);
  // facet must drop dimension by exactly one
  CHECK_THROWS_AS(RegularCWComplex::from_cells(
                      {{"v", 0, {}, {}}, {"f", 2, {"v"}, {}}}),
                  Error);
}

TEST_CASE("face posets") {
  // single vertex: the 2-chain
  RegularCWComplex pt = RegularCWComplex::from_cells({{"v", 0, {}, {}}});
  FacePoset fp = face_poset(pt);
  CHECK(fp.poset.size() == 2);
  CHECK(fp.rank == std::vector<int>{0, 1});

  // one edge: f-vector (1, 2, 1)
  FacePoset edge = face_poset(fixtures::edge_complex());
  std::vector<int> fv(3, 0);
  for (int r : edge.rank) ++fv[r];
  CHECK(fv == std::vector<int>{1, 2, 1});

  // the two-cell disk reproduces its Hasse diagram
  FacePoset disk = face_poset(fixtures::disk_with_two_cells());
  CHECK(same_poset(disk.poset, fixtures::disk_poset()));
}

TEST_CASE("from_face_poset inverts face_poset") {
  Field q;
  Poset p = fixtures::disk_poset();
  RegularCWComplex x = from_face_poset(p, q);
  std::multiset<int> dims;
  for (const auto& c : x.cells()) dims.insert(c.dim);
  CHECK(dims == std::multiset<int>{0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2});
  CHECK(same_poset(face_poset(x).poset, p));

  // 2-chain: a single vertex
  Poset chain = Poset::build({"o", "v"}, {{"o", "v"}});
  RegularCWComplex pt = from_face_poset(chain, q);
  CHECK(pt.size() == 1);
  CHECK(pt.cell(0).dim == 0);

  // lcm-lattice of (x, y): one edge with two endpoints
  LcmLattice lat = lcm_lattice(fixtures::two_variable_ideal());
  RegularCWComplex e = from_face_poset(lat.poset, q);
  std::multiset<int> edims;
  for (const auto& c : e.cells()) edims.insert(c.dim);
  CHECK(edims == std::multiset<int>{0, 0, 1});

  // not a CW-poset
  LcmLattice tri = lcm_lattice(fixtures::triangle_ideal());
  CHECK_THROWS_AS(from_face_poset(tri.poset, q), Error);
}

TEST_CASE("round trip face_poset ∘ from_face_poset on corpus fixtures") {
  Field q;
  for (const auto& cx : corpus::random_on_five(8, 12345)) {
    RegularCWComplex x = corpus::to_cw(cx);
    Poset p = face_poset(x).poset;
    CHECK(same_poset(face_poset(from_face_poset(p, q)).poset, p));
  }
}

TEST_CASE("incidence numbers of an edge") {
  Field q;
  IncidenceNumbers inc = incidence_numbers(fixtures::edge_complex(), q);
  // the homology generator of the two endpoints is normalized as v - u
  CHECK(inc.get("uv", "v") == 1);
  CHECK(inc.get("uv", "u") == -1);
  // augmentation: vertices map to +1 times the empty cell
  CHECK(inc.get("u", "∅") == 1);
  CHECK(inc.get("v", "∅") == 1);
  // non-facet pairs are zero
  CHECK(inc.get("u", "v") == 0);
  CHECK(inc.get("uv", "∅") == 0);

  Field f2(FieldConfig::prime(2));
  CHECK_THROWS_AS(incidence_numbers(fixtures::edge_complex(), f2), Error);
}

TEST_CASE("incidence numbers satisfy the quadratic relation on the disk") {
  Field q;
  RegularCWComplex x = fixtures::disk_with_two_cells();
  IncidenceNumbers inc = incidence_numbers(x, q);

  // every nonzero entry is ±1 and sits on a facet pair
  for (const auto& [key, value] : inc.c) {
    CHECK((value == 1 || value == -1));
    const auto& [sigma, tau] = key;
    if (tau == "∅") continue;
    const auto& facets = x.cell(x.index(sigma)).facets;
    CHECK(std::find(facets.begin(), facets.end(), tau) != facets.end());
  }

  // Σ_τ c_{σ,τ} c_{τ,ρ} = 0 for all σ, ρ two dimensions apart
  FacePoset fp = face_poset(x);
  std::vector<std::string> all = fp.poset.ids();
  for (const auto& sigma : all)
    for (const auto& rho : all) {
      int total = 0;
      for (const auto& tau : all)
        total += inc.get(sigma, tau) * inc.get(tau, rho);
      CHECK(total == 0);
    }

  // the triangle cell hits each of its three edges with a unit
  for (const auto& e : {"12", "13", "23"})
    CHECK(inc.get("123", e) * inc.get("123", e) == 1);
}

TEST_CASE("cellular chain complexes") {
  Field q;
  // one vertex: dims (1,1), augmentation [1]
  RegularCWComplex pt = RegularCWComplex::from_cells({{"v", 0, {}, {}}});
  ChainComplex cpt = cellular_chain_complex(pt, q);
  CHECK(cpt.lo() == -1);
  CHECK(cpt.dim(-1) == 1);
  CHECK(cpt.dim(0) == 1);
  CHECK(cpt.diff(0).at(0, 0) == Rational(1));

  // the disk: dims (1,4,5,2), contractible
  ChainComplex disk = cellular_chain_complex(fixtures::disk_with_two_cells(), q);
  CHECK(!disk.verify(q));
  std::vector<int> dims;
  for (int d = disk.lo(); d <= disk.hi(); ++d) dims.push_back(disk.dim(d));
  CHECK(dims == std::vector<int>{1, 4, 5, 2});
  CHECK(disk.euler_characteristic() == 0);  // 4 - 5 + 2 = 1 against the empty cell
  CHECK(homology(disk, q).all_zero());

  // hollow triangle: one circle
  ChainComplex ht = cellular_chain_complex(fixtures::hollow_triangle(), q);
  CHECK(homology(ht, q).betti_map() == std::map<int, int>{{1, 1}});
}

TEST_CASE("over GF(2) the cellular matrices are the face-incidence matrices") {
  Field f2(FieldConfig::prime(2));
  RegularCWComplex x = fixtures::disk_with_two_cells();
  ChainComplex c = cellular_chain_complex(x, f2);
  CHECK(!c.verify(f2));
  for (int d = 0; d <= c.hi(); ++d) {
    const Matrix& m = c.diff(d);
    for (int col = 0; col < m.cols(); ++col) {
      const std::string& sigma = c.labels(d)[col];
      const auto& facets =
          d == 0 ? std::vector<std::string>{"∅"} : x.cell(x.index(sigma)).facets;
      for (int row = 0; row < m.rows(); ++row) {
        const std::string& tau = c.labels(d - 1)[row];
        bool is_facet =
            std::find(facets.begin(), facets.end(), tau) != facets.end();
        CHECK(m.at(row, col) == (is_facet ? Rational(1) : Rational(0)));
      }
    }
  }
}

TEST_CASE("skeleton and multidegree restriction") {
  Field q;
  RegularCWComplex x = fixtures::disk_with_two_cells();
  RegularCWComplex one = skeleton(x, 1);
  CHECK(one.size() == 9);
  CHECK(one.top_dim() == 1);

  // Taylor complex of (xy, yz, xz) restricted to deg(xyz) is the full simplex
  MonomialIdeal tri = fixtures::triangle_ideal();
  Monomial xyz({1, 1, 1});
  RegularCWComplex taylor = taylor_complex(tri);
  CHECK(restrict_to_multidegree(taylor, xyz).size() == taylor.size());

  // Scarf complex restricted to the same multidegree: three lone vertices
  RegularCWComplex scarf = scarf_complex(tri);
  RegularCWComplex r = restrict_to_multidegree(scarf, xyz);
  CHECK(r.size() == 3);
  CHECK(r.top_dim() == 0);

  CHECK_THROWS_AS(restrict_to_multidegree(x, xyz), Error);
}

TEST_CASE("cellular homology equals barycentric simplicial homology") {
  Field q;
  for (const auto& cx : corpus::random_on_five(6, 777)) {
    RegularCWComplex x = corpus::to_cw(cx);
    FacePoset fp = face_poset(x);
    const int zero = *fp.poset.least();
    SimplicialComplex bary = order_complex_over(
        fp.poset, [&](int e) { return e != zero; });
    HomologyResult cell = homology(cellular_chain_complex(x, q), q);
    HomologyResult simp = homology(bary.reduced_chain_complex(q), q);
    CHECK(cell.betti_map() == simp.betti_map());
  }
}
