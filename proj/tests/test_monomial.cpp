#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cwres/errors.hpp"
#include "cwres/ideal.hpp"
#include "cwres/resolution.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"

using namespace cwres;
using fixtures::mono;

TEST_CASE("monomial arithmetic") {
  Monomial x2 = mono({2, 0}), x2y = mono({2, 1}), xy = mono({1, 1});
  CHECK(x2.divides(x2y));
  CHECK(!xy.divides(x2));
  CHECK(x2.lcm_with(xy) == x2y);
  CHECK(x2y.quotient_by(x2) == mono({0, 1}));
  CHECK_THROWS_AS(x2.quotient_by(x2y), Error);
  CHECK(mono({0, 0}).is_one());
  CHECK(x2y.str() == "x1^2*x2");
  CHECK(mono({0, 0}).str() == "1");
}

TEST_CASE("minimalize removes redundant generators") {
  MonomialIdeal i = MonomialIdeal::minimalize(2, {mono({2, 0}), mono({2, 1})});
  CHECK(i.size() == 1);
  CHECK(i.gen(0) == mono({2, 0}));
  CHECK(i.contains(mono({3, 5})));
  CHECK(!i.contains(mono({1, 5})));
  CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {}), Error);
}

TEST_CASE("lcm lattices of the three stock ideals") {
  {
    LcmLattice lat = lcm_lattice(fixtures::two_variable_ideal());
    CHECK(lat.poset.size() == 4);
    CHECK(lat.monomials[lat.bottom].is_one());
  }
  {
    LcmLattice lat = lcm_lattice(fixtures::triangle_ideal());
    CHECK(lat.poset.size() == 5);
    int top = lat.element_of(mono({1, 1, 1}));
    REQUIRE(top >= 0);
    CHECK(lat.poset.lower_covers(top).size() == 3);
  }
  {
    LcmLattice lat = lcm_lattice(fixtures::power_square_ideal());
    CHECK(lat.poset.size() == 7);
    std::set<Monomial> expected = {mono({0, 0}), mono({2, 0}), mono({1, 1}),
                                   mono({0, 2}), mono({2, 1}), mono({1, 2}),
                                   mono({2, 2})};
    CHECK(std::set<Monomial>(lat.monomials.begin(), lat.monomials.end()) ==
          expected);
  }
}

TEST_CASE("taylor, scarf, and lyubeznik support complexes") {
  // Taylor of (x, y): the full 1-simplex
  RegularCWComplex t2 = taylor_complex(fixtures::two_variable_ideal());
  CHECK(t2.size() == 3);
  CHECK(t2.top_dim() == 1);

  // Scarf of (xy, yz, xz): three isolated vertices
  RegularCWComplex s3 = scarf_complex(fixtures::triangle_ideal());
  CHECK(s3.size() == 3);
  CHECK(s3.top_dim() == 0);

  // Scarf of (x^2, xy, y^2): the path with edges {1,2}, {2,3}
  RegularCWComplex sp = scarf_complex(fixtures::power_square_ideal());
  CHECK(sp.size() == 5);
  CHECK(sp.top_dim() == 1);
  std::set<std::string> edges;
  for (const auto& c : sp.cells())
    if (c.dim == 1) edges.insert(c.id);
  CHECK(edges == std::set<std::string>{"12", "23"});

  // Lyubeznik of (xy, yz, xz) in the input order drops {2,3} and the triangle
  RegularCWComplex ly = lyubeznik_complex(fixtures::triangle_ideal());
  std::set<std::string> faces;
  for (const auto& c : ly.cells()) faces.insert(c.id);
  CHECK(faces == std::set<std::string>{"1", "2", "3", "12", "13"});
}

TEST_CASE("homogenized Taylor of (x, y) is the Koszul resolution") {
  Field q;
  MultigradedComplex fx =
      homogenize_cellular(taylor_complex(fixtures::two_variable_ideal()), q);
  CHECK(fx.ranks() == std::vector<int>{1, 2, 1});
  CHECK(!fx.homogeneity_violation());
  CHECK(!fx.verify(q));

  // ∂_1 = [m_1 m_2] with unit scalars
  for (const auto& e : fx.diffs[1]) {
    CHECK(e.scalar == Rational(1));
    CHECK(e.mono == fx.mdegs[1][e.col]);
  }
  // ∂_2 carries the complementary variables with opposite signs
  REQUIRE(fx.diffs[2].size() == 2);
  Rational prod(1);
  for (const auto& e : fx.diffs[2]) prod = prod * e.scalar;
  CHECK(prod == Rational(-1));

  ResolutionVerdict rv = is_resolution(fx, fixtures::two_variable_ideal(), q);
  CHECK(rv.resolves);
  CHECK(is_minimal(fx));
  CHECK(is_lattice_linear(fx, fixtures::two_variable_ideal()).lattice_linear);
}

TEST_CASE("Taylor of the triangle ideal resolves but is not minimal") {
  Field q;
  MonomialIdeal tri = fixtures::triangle_ideal();
  MultigradedComplex fx = homogenize_cellular(taylor_complex(tri), q);
  CHECK(fx.ranks() == std::vector<int>{1, 3, 3, 1});
  ResolutionVerdict rv = is_resolution(fx, tri, q);
  CHECK(rv.resolves);
  CHECK(!is_minimal(fx));
  LatticeLinearVerdict ll = is_lattice_linear(fx, tri);
  CHECK(!ll.lattice_linear);
  CHECK(!ll.witnesses.empty());
}

TEST_CASE("Scarf of the triangle ideal fails exactly at xyz") {
  Field q;
  MonomialIdeal tri = fixtures::triangle_ideal();
  MultigradedComplex fx = homogenize_cellular(scarf_complex(tri), q);
  ResolutionVerdict rv = is_resolution(fx, tri, q);
  CHECK(!rv.resolves);
  REQUIRE(rv.failing.size() == 1);
  CHECK(rv.failing[0] == mono({1, 1, 1}));
}

TEST_CASE("Scarf of (x^2, xy, y^2) is the minimal lattice-linear resolution") {
  Field q;
  MonomialIdeal sq = fixtures::power_square_ideal();
  MultigradedComplex fx = homogenize_cellular(scarf_complex(sq), q);
  CHECK(fx.ranks() == std::vector<int>{1, 3, 2});
  CHECK(is_resolution(fx, sq, q).resolves);
  CHECK(is_minimal(fx));
  CHECK(is_lattice_linear(fx, sq).lattice_linear);

  BettiTable betti = gpw_betti(sq, q);
  CHECK(betti.totals == std::vector<int>{1, 3, 2});
  CHECK(fx.ranks() == betti.totals);
}

TEST_CASE("Lyubeznik of the triangle ideal resolves with the minimal ranks") {
  Field q;
  MonomialIdeal tri = fixtures::triangle_ideal();
  MultigradedComplex fx = homogenize_cellular(lyubeznik_complex(tri), q);
  CHECK(fx.ranks() == std::vector<int>{1, 3, 2});
  CHECK(is_resolution(fx, tri, q).resolves);
  CHECK(is_minimal(fx));
}

TEST_CASE("gpw betti tables") {
  Field q;
  {
    MonomialIdeal tri = fixtures::triangle_ideal();
    BettiTable t = gpw_betti(tri, q);
    CHECK(t.totals == std::vector<int>{1, 3, 2});
    CHECK(t.entries.at({2, mono({1, 1, 1})}) == 2);
    for (const auto& g : tri.gens()) CHECK(t.entries.at({1, g}) == 1);
  }
  {
    BettiTable t = gpw_betti(fixtures::two_variable_ideal(), q);
    CHECK(t.totals == std::vector<int>{1, 2, 1});
  }
}

TEST_CASE("homogenize_d over the lcm lattice of (x, y) is the Koszul complex") {
  Field q;
  LcmLattice lat = lcm_lattice(fixtures::two_variable_ideal());
  DSequence d = d_construction(lat.poset, q);
  REQUIRE(d.is_complex);
  MultigradedComplex fx = homogenize_d(d, lat.poset, lat.monomials, q);
  CHECK(fx.ranks() == std::vector<int>{1, 2, 1});
  CHECK(!fx.homogeneity_violation());
  CHECK(is_resolution(fx, fixtures::two_variable_ideal(), q).resolves);
  // border differential carries x^{η(λ)} times the identity
  for (const auto& e : fx.diffs[1]) {
    CHECK(e.scalar == Rational(1));
    CHECK(e.mono == fx.mdegs[1][e.col]);
  }
}

TEST_CASE("cellular and poset homogenizations agree on the Taylor simplex") {
  Field q;
  for (const auto& ideal :
       {fixtures::two_variable_ideal(), fixtures::triangle_ideal()}) {
    RegularCWComplex taylor = taylor_complex(ideal);
    MultigradedComplex cellular = homogenize_cellular(taylor, q);

    FacePoset fp = face_poset(taylor);
    std::vector<Monomial> eta(fp.poset.size(), Monomial::one(ideal.vars()));
    for (int i = 0; i < fp.poset.size(); ++i)
      if (fp.rank[i] > 0)
        eta[i] = *taylor.cell(taylor.index(fp.poset.id(i))).mdeg;
    DSequence d = d_construction(fp.poset, q);
    REQUIRE(d.is_complex);
    MultigradedComplex via_poset = homogenize_d(d, fp.poset, eta, q);

    CHECK(via_poset.ranks() == cellular.ranks());
    CHECK(via_poset.mdegs == cellular.mdegs);
    CHECK(compare_complexes(cellular.scalar_frame(q), via_poset.scalar_frame(q),
                            0, q));
    CHECK(is_resolution(via_poset, ideal, q).resolves ==
          is_resolution(cellular, ideal, q).resolves);
  }
}

TEST_CASE("homogenize_d rejects a non-monotone grading and a non-complex") {
  Field q;
  LcmLattice lat = lcm_lattice(fixtures::two_variable_ideal());
  DSequence d = d_construction(lat.poset, q);
  std::vector<Monomial> bad(lat.poset.size(), mono({0, 0}));
  bad[lat.poset.index("x1")] = mono({5, 5});  // does not divide lcm labels
  CHECK_THROWS_AS(homogenize_d(d, lat.poset, bad, q), Error);

  // a sequence that fails the composition check cannot be homogenized
  Poset pinched = Poset::build({"0", "u", "v", "m", "T"},
                               {{"0", "u"}, {"0", "v"}, {"u", "m"},
                                {"m", "T"}, {"v", "T"}});
  DSequence dp = d_construction(pinched, q);
  REQUIRE(!dp.is_complex);
  std::vector<Monomial> eta = {mono({0, 0}), mono({1, 0}), mono({0, 1}),
                               mono({2, 0}), mono({2, 1})};
  CHECK_THROWS_AS(homogenize_d(dp, pinched, eta, q), Error);
}

TEST_CASE("cw_lattice_report across the stock ideals") {
  Field q;
  {
    CWLatticeReport rep = cw_lattice_report(fixtures::two_variable_ideal(), q);
    CHECK(rep.is_cw);
    CHECK(rep.lattice_linear_certified);
    REQUIRE(rep.minimal_cellular);
    CHECK(rep.minimal_cellular->ranks() == std::vector<int>{1, 2, 1});
  }
  {
    CWLatticeReport rep = cw_lattice_report(fixtures::power_square_ideal(), q);
    CHECK(!rep.is_cw);
    REQUIRE(rep.witness);
    CHECK(*rep.witness == mono({2, 2}).str());
    // the interval below x^2y^2 is a path on five vertices, hence contractible
    CHECK(rep.lattice_linear_certified);
    CHECK(!rep.minimal_cellular);
  }
  {
    CWLatticeReport rep = cw_lattice_report(fixtures::triangle_ideal(), q);
    CHECK(!rep.is_cw);
    REQUIRE(rep.witness);
    CHECK(*rep.witness == mono({1, 1, 1}).str());
  }
}

TEST_CASE("homogeneity invariant for every produced complex") {
  Field q;
  std::vector<MultigradedComplex> produced = {
      homogenize_cellular(taylor_complex(fixtures::triangle_ideal()), q),
      homogenize_cellular(scarf_complex(fixtures::power_square_ideal()), q),
      homogenize_cellular(lyubeznik_complex(fixtures::triangle_ideal()), q),
  };
  for (const auto& fx : produced) {
    CHECK(!fx.homogeneity_violation());
    CHECK(!fx.verify(q));
    for (int d = 1; d <= fx.length(); ++d)
      for (const auto& e : fx.diffs[d])
        CHECK(fx.mdegs[d - 1][e.row].times(e.mono) == fx.mdegs[d][e.col]);
  }
}

TEST_CASE("Taylor resolves every ideal in a random sweep") {
  Field q;
  corpus::Rng rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    const int vars = 2 + rng.uniform(2);
    std::vector<Monomial> gens;
    const int count = 2 + rng.uniform(3);
    for (int g = 0; g < count; ++g) {
      std::vector<long long> e(vars, 0);
      for (int v = 0; v < vars; ++v) e[v] = rng.uniform(3);
      if (std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; }))
        e[rng.uniform(vars)] = 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal = MonomialIdeal::minimalize(vars, gens);
    MultigradedComplex taylor = homogenize_cellular(taylor_complex(ideal), q);
    CAPTURE(trial);
    CHECK(is_resolution(taylor, ideal, q).resolves);
    // Lyubeznik resolves as well, for any generator order
    MultigradedComplex ly = homogenize_cellular(lyubeznik_complex(ideal), q);
    CHECK(is_resolution(ly, ideal, q).resolves);
  }
}

TEST_CASE("minimal resolutions match the betti totals") {
  Field q;
  // Lyubeznik of the triangle ideal happens to be minimal; its ranks must
  // agree with the lattice betti numbers
  MonomialIdeal tri = fixtures::triangle_ideal();
  MultigradedComplex ly = homogenize_cellular(lyubeznik_complex(tri), q);
  REQUIRE(is_resolution(ly, tri, q).resolves);
  REQUIRE(is_minimal(ly));
  CHECK(ly.ranks() == gpw_betti(tri, q).totals);

  MonomialIdeal xy = fixtures::two_variable_ideal();
  MultigradedComplex koszul = homogenize_cellular(taylor_complex(xy), q);
  REQUIRE(is_resolution(koszul, xy, q).resolves);
  REQUIRE(is_minimal(koszul));
  CHECK(koszul.ranks() == gpw_betti(xy, q).totals);
}

TEST_CASE("minimal resolutions never exceed the Taylor ranks") {
  Field q;
  for (const auto& ideal :
       {fixtures::power_square_ideal(), fixtures::two_variable_ideal()}) {
    MultigradedComplex scarf = homogenize_cellular(scarf_complex(ideal), q);
    REQUIRE(is_resolution(scarf, ideal, q).resolves);
    REQUIRE(is_minimal(scarf));
    std::vector<int> taylor_ranks =
        homogenize_cellular(taylor_complex(ideal), q).ranks();
    std::vector<int> ranks = scarf.ranks();
    for (size_t i = 0; i < ranks.size(); ++i) {
      REQUIRE(i < taylor_ranks.size());
      CHECK(ranks[i] <= taylor_ranks[i]);
    }
  }
}
