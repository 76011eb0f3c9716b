#include "cwres/ideal.hpp"

#include <algorithm>
#include <map>

#include "cwres/errors.hpp"

namespace cwres {

MonomialIdeal MonomialIdeal::minimalize(int vars, std::vector<Monomial> gens) {
  if (gens.empty())
    throw Error("EmptyGeneratorList", "a monomial ideal needs generators");
  for (const auto& g : gens)
    if (g.vars() != vars)
      throw Error("DimensionMismatch", "generator in wrong variable count");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  // sort by total degree then exponent lex for a stable generator order
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](const Monomial& a, const Monomial& b) {
                     if (a.total_degree() != b.total_degree())
                       return a.total_degree() < b.total_degree();
                     return a < b;
                   });
  MonomialIdeal ideal;
  ideal.vars_ = vars;
  ideal.gens_ = std::move(minimal);
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

int LcmLattice::element_of(const Monomial& m) const {
  for (size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i] == m) return static_cast<int>(i);
  return -1;
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  const int r = ideal.size();
  if (r > 20) throw Error("BadInput", "too many generators for subset sweep");
  std::vector<Monomial> elements = {Monomial::one(ideal.vars())};
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    Monomial m = Monomial::one(ideal.vars());
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) m = m.lcm_with(ideal.gen(i));
    elements.push_back(m);
  }
  std::sort(elements.begin() + 1, elements.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.total_degree() != b.total_degree())
                return a.total_degree() < b.total_degree();
              return a < b;
            });
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());

  std::vector<std::string> ids;
  std::map<std::string, std::string> labels;
  for (const auto& m : elements) ids.push_back(m.str());

  std::vector<std::pair<std::string, std::string>> covers;
  const int n = static_cast<int>(elements.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !elements[a].divides(elements[b])) continue;
      bool is_cover = true;
      for (int m = 0; m < n && is_cover; ++m)
        if (m != a && m != b && elements[a].divides(elements[m]) &&
            elements[m].divides(elements[b]) && !(elements[m] == elements[a]) &&
            !(elements[m] == elements[b]))
          is_cover = false;
      if (is_cover) covers.emplace_back(ids[a], ids[b]);
    }

  LcmLattice lat;
  lat.poset = Poset::build(std::move(ids), std::move(covers));
  lat.monomials = std::move(elements);
  lat.bottom = 0;
  return lat;
}

namespace {

std::string subset_id(const std::vector<int>& subset, int r) {
  // generator indices are 1-based in cell ids; compact for at most nine
  // generators, underscore-separated beyond that
  std::string s;
  for (size_t i = 0; i < subset.size(); ++i) {
    if (r > 9 && i) s += "_";
    s += std::to_string(subset[i] + 1);
  }
  return s;
}

RegularCWComplex complex_from_subsets(const MonomialIdeal& ideal,
                                      const std::vector<std::vector<int>>& subs) {
  const int r = ideal.size();
  std::vector<CWCell> cells;
  for (const auto& sub : subs) {
    CWCell c;
    c.id = subset_id(sub, r);
    c.dim = static_cast<int>(sub.size()) - 1;
    if (sub.size() > 1)
      for (size_t k = 0; k < sub.size(); ++k) {
        std::vector<int> facet;
        for (size_t j = 0; j < sub.size(); ++j)
          if (j != k) facet.push_back(sub[j]);
        c.facets.push_back(subset_id(facet, r));
      }
    std::vector<Monomial> ms;
    for (int i : sub) ms.push_back(ideal.gen(i));
    c.mdeg = lcm(ms, ideal.vars());
    cells.push_back(std::move(c));
  }
  return RegularCWComplex::from_cells(std::move(cells));
}

std::vector<std::vector<int>> all_subsets(int r) {
  std::vector<std::vector<int>> subs;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subs.push_back(std::move(s));
  }
  std::sort(subs.begin(), subs.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return subs;
}

}  // namespace

RegularCWComplex taylor_complex(const MonomialIdeal& ideal) {
  if (ideal.size() > 20)
    throw Error("BadInput", "too many generators for subset sweep");
  return complex_from_subsets(ideal, all_subsets(ideal.size()));
}

RegularCWComplex scarf_complex(const MonomialIdeal& ideal) {
  const int r = ideal.size();
  if (r > 20) throw Error("BadInput", "too many generators for subset sweep");
  auto subs = all_subsets(r);
  std::map<Monomial, int> count;
  std::vector<Monomial> lcms;
  for (const auto& sub : subs) {
    std::vector<Monomial> ms;
    for (int i : sub) ms.push_back(ideal.gen(i));
    Monomial m = lcm(ms, ideal.vars());
    ++count[m];
    lcms.push_back(std::move(m));
  }
  std::vector<std::vector<int>> scarf;
  for (size_t i = 0; i < subs.size(); ++i)
    if (count[lcms[i]] == 1) scarf.push_back(subs[i]);
  return complex_from_subsets(ideal, scarf);
}

RegularCWComplex lyubeznik_complex(const MonomialIdeal& ideal,
                                   std::vector<int> order) {
  const int r = ideal.size();
  if (r > 20) throw Error("BadInput", "too many generators for subset sweep");
  if (order.empty()) {
    order.resize(r);
    for (int i = 0; i < r; ++i) order[i] = i;
  }
  if (static_cast<int>(order.size()) != r)
    throw Error("BadInput", "generator order must be a permutation");
  std::vector<int> position(r, -1);
  for (int k = 0; k < r; ++k) {
    if (order[k] < 0 || order[k] >= r || position[order[k]] >= 0)
      throw Error("BadInput", "generator order must be a permutation");
    position[order[k]] = k;
  }
  auto root = [&](unsigned mask) {
    Monomial m = Monomial::one(ideal.vars());
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) m = m.lcm_with(ideal.gen(i));
    for (int k = 0; k < r; ++k)
      if (ideal.gen(order[k]).divides(m)) return order[k];
    throw Error("Internal", "subset lcm divisible by no generator");
  };
  std::vector<std::vector<int>> rooted;
  for (const auto& sub : all_subsets(r)) {
    bool ok = true;
    // every nonempty subset of the face must contain its root
    unsigned mask = 0;
    for (int i : sub) mask |= 1u << i;
    for (unsigned t = mask; t != 0 && ok; t = (t - 1) & mask)
      if (!(t & (1u << root(t)))) ok = false;
    if (ok) rooted.push_back(sub);
  }
  return complex_from_subsets(ideal, rooted);
}

}  // namespace cwres
