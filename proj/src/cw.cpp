#include "cwres/cw.hpp"

#include <algorithm>

#include "cwres/d_construction.hpp"
#include "cwres/errors.hpp"

namespace cwres {

namespace {
const std::string kEmptyCellId = "∅";
}

RegularCWComplex RegularCWComplex::from_cells(std::vector<CWCell> cells) {
  RegularCWComplex x;
  x.cells_ = std::move(cells);
  for (int i = 0; i < x.size(); ++i) {
    const CWCell& c = x.cells_[i];
    if (c.id == kEmptyCellId)
      throw Error("BadInput", "the empty cell is implicit and cannot be listed");
    if (x.index_.count(c.id))
      throw Error("DuplicateId", "cell '" + c.id + "' repeated");
    if (c.dim < 0)
      throw Error("BadInput", "cell '" + c.id + "' with negative dimension");
    x.index_[c.id] = i;
  }
  x.facets_.resize(x.size());
  for (int i = 0; i < x.size(); ++i) {
    const CWCell& c = x.cells_[i];
    if (c.dim == 0 && !c.facets.empty())
      throw Error("BadInput",
                  "0-cell '" + c.id + "' lists facets; its facet is the empty cell");
    if (c.dim >= 1 && c.facets.empty())
      throw Error("BadInput", "cell '" + c.id + "' of positive dimension needs facets");
    for (const auto& fid : c.facets) {
      auto it = x.index_.find(fid);
      if (it == x.index_.end())
        throw Error("UnknownElement",
                    "facet '" + fid + "' of cell '" + c.id + "' missing");
      if (x.cells_[it->second].dim != c.dim - 1)
        throw Error("BadInput", "facet '" + fid + "' of '" + c.id +
                                    "' does not drop dimension by one");
      x.facets_[i].push_back(it->second);
    }
    std::sort(x.facets_[i].begin(), x.facets_[i].end());
    x.facets_[i].erase(
        std::unique(x.facets_[i].begin(), x.facets_[i].end()),
        x.facets_[i].end());
  }
  return x;
}

int RegularCWComplex::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("UnknownElement", "no cell '" + id + "'");
  return it->second;
}

int RegularCWComplex::top_dim() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dim);
  return d;
}

std::vector<int> RegularCWComplex::cells_of_dim(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cells_[i].dim == d) out.push_back(i);
  return out;
}

bool RegularCWComplex::has_multidegrees() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const CWCell& c) { return c.mdeg.has_value(); });
}

FacePoset face_poset(const RegularCWComplex& x) {
  std::vector<std::string> elements = {kEmptyCellId};
  std::vector<int> order;  // cell indices sorted by (dim, input order)
  for (int d = 0; d <= x.top_dim(); ++d)
    for (int i : x.cells_of_dim(d)) order.push_back(i);
  for (int i : order) elements.push_back(x.cell(i).id);

  std::vector<std::pair<std::string, std::string>> covers;
  for (int i : order) {
    const CWCell& c = x.cell(i);
    if (c.dim == 0)
      covers.emplace_back(kEmptyCellId, c.id);
    else
      for (int fi : x.facet_indices(i))
        covers.emplace_back(x.cell(fi).id, c.id);
  }
  FacePoset fp{Poset::build(std::move(elements), std::move(covers)), {}};
  fp.rank.resize(fp.poset.size());
  for (int i = 0; i < fp.poset.size(); ++i) {
    const std::string& id = fp.poset.id(i);
    fp.rank[i] = id == kEmptyCellId ? 0 : x.cell(x.index(id)).dim + 1;
  }
  return fp;
}

RegularCWComplex from_face_poset(const Poset& p, const Field& f,
                                 const std::map<std::string, Monomial>& mdeg) {
  CWPosetReport rep = is_cw_poset(p, f);
  if (!rep.is_cw()) {
    std::string w = rep.witness().value_or("structure");
    throw Error("NotCWPoset", "poset fails the CW-poset test", w);
  }
  RankResult rr = compute_rank(p);
  const int zero = *p.least();
  std::vector<CWCell> cells;
  for (int i = 0; i < p.size(); ++i) {
    if (i == zero) continue;
    CWCell c;
    c.id = p.id(i);
    c.dim = rr.rank[i] - 1;
    for (int lo : p.lower_covers(i))
      if (lo != zero) c.facets.push_back(p.id(lo));
    auto it = mdeg.find(c.id);
    if (it != mdeg.end()) c.mdeg = it->second;
    cells.push_back(std::move(c));
  }
  return RegularCWComplex::from_cells(std::move(cells));
}

int IncidenceNumbers::get(const std::string& sigma,
                          const std::string& tau) const {
  auto it = c.find({sigma, tau});
  return it == c.end() ? 0 : it->second;
}

namespace {

int scalar_to_unit(const Rational& v, const Field& f) {
  if (v.is_zero()) return 0;
  if (v == f.from_int(1)) return 1;
  if (v == f.from_int(-1)) return -1;
  throw Error("EntryNotUnit",
              "incidence entry " + v.str() + " outside {-1,0,1}");
}

IncidenceNumbers incidence_from_d(const RegularCWComplex& x, const Field& f) {
  FacePoset fp = face_poset(x);
  DSequence d = d_construction(fp.poset, f);

  // Björner's correspondence needs every element to carry exactly one
  // homology class, concentrated in its rank degree.
  const int zero = *fp.poset.least();
  for (int i = 0; i < fp.poset.size(); ++i) {
    if (i == zero) continue;
    const DSummand* s = d.summand_at(fp.rank[i], i);
    bool ok = s && s->count == 1;
    if (ok)
      for (int deg = 0; deg < static_cast<int>(d.summands.size()); ++deg)
        for (const auto& sm : d.summands[deg])
          if (sm.element == i && deg != fp.rank[i]) ok = false;
    if (!ok)
      throw Error("NotCWPoset",
                  "interval homology of '" + fp.poset.id(i) +
                      "' is not a single sphere class");
  }

  IncidenceNumbers inc;
  for (int degree = 1; degree <= d.cc.hi(); ++degree) {
    const Matrix& m = d.cc.diff(degree);
    for (const auto& col : d.summands[degree]) {
      for (const auto& row : d.summands[degree - 1]) {
        int v = scalar_to_unit(m.at(row.offset, col.offset), f);
        if (v != 0)
          inc.c[{fp.poset.id(col.element), fp.poset.id(row.element)}] = v;
      }
    }
  }
  return inc;
}

}  // namespace

IncidenceNumbers incidence_numbers(const RegularCWComplex& x, const Field& f) {
  if (f.characteristic() == 2)
    throw Error("InvalidField",
                "incidence signs need characteristic != 2");
  return incidence_from_d(x, f);
}

ChainComplex cellular_chain_complex(const RegularCWComplex& x, const Field& f) {
  // Signs are derived over a field of characteristic != 2 and then mapped
  // into the requested field.
  const bool char2 = f.characteristic() == 2;
  const Field derive = char2 ? Field(FieldConfig::rationals()) : f;
  IncidenceNumbers inc = incidence_from_d(x, derive);

  const int top = x.top_dim();
  std::vector<int> dims = {1};
  std::vector<std::vector<std::string>> labels = {{kEmptyCellId}};
  std::vector<std::vector<int>> by_dim;
  for (int dd = 0; dd <= top; ++dd) {
    by_dim.push_back(x.cells_of_dim(dd));
    dims.push_back(static_cast<int>(by_dim.back().size()));
    std::vector<std::string> ls;
    for (int i : by_dim.back()) ls.push_back(x.cell(i).id);
    labels.push_back(std::move(ls));
  }
  std::vector<Matrix> diffs;
  for (int dd = 0; dd <= top; ++dd) {
    const auto& cols = by_dim[dd];
    Matrix m(dd == 0 ? 1 : static_cast<int>(by_dim[dd - 1].size()),
             static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
      if (dd == 0) {
        m.at(0, static_cast<int>(c)) = f.from_int(1);
        continue;
      }
      const auto& rows = by_dim[dd - 1];
      for (size_t r = 0; r < rows.size(); ++r) {
        int v = inc.get(x.cell(cols[c]).id, x.cell(rows[r]).id);
        if (v != 0)
          m.at(static_cast<int>(r), static_cast<int>(c)) = f.from_int(v);
      }
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex(-1, std::move(dims), std::move(diffs),
                      std::move(labels));
}

RegularCWComplex skeleton(const RegularCWComplex& x, int i) {
  std::vector<CWCell> cells;
  for (const auto& c : x.cells())
    if (c.dim <= i) cells.push_back(c);
  return RegularCWComplex::from_cells(std::move(cells));
}

RegularCWComplex restrict_to_multidegree(const RegularCWComplex& x,
                                         const Monomial& b) {
  if (!x.has_multidegrees())
    throw Error("MissingMultidegrees", "restriction needs labeled cells");
  for (int i = 0; i < x.size(); ++i)
    for (int fi : x.facet_indices(i))
      if (!x.cell(fi).mdeg->divides(*x.cell(i).mdeg))
        throw Error("NonMonotoneLabels",
                    "multidegree of facet '" + x.cell(fi).id +
                        "' does not divide that of '" + x.cell(i).id + "'");
  std::vector<CWCell> cells;
  for (const auto& c : x.cells())
    if (c.mdeg->divides(b)) cells.push_back(c);
  return RegularCWComplex::from_cells(std::move(cells));
}

}  // namespace cwres
