#include "cwres/chain_complex.hpp"

#include <algorithm>

#include "cwres/errors.hpp"

namespace cwres {

namespace {
const Matrix kEmptyMatrix;
const std::vector<std::string> kNoLabels;
}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<int> dims,
                           std::vector<Matrix> diffs,
                           std::vector<std::vector<std::string>> labels)
    : lo_(lo),
      dims_(std::move(dims)),
      diffs_(std::move(diffs)),
      labels_(std::move(labels)) {
  if (dims_.empty()) throw Error("BadInput", "complex with no degrees");
  if (labels_.size() != dims_.size())
    throw Error("BadInput", "labels/dims length mismatch");
  if (diffs_.size() + 1 != dims_.size())
    throw Error("BadInput", "expected one differential per adjacent pair");
  for (size_t k = 0; k < dims_.size(); ++k) {
    if (static_cast<int>(labels_[k].size()) != dims_[k])
      throw Error("BadInput", "label count != dim at degree " +
                                  std::to_string(lo_ + static_cast<int>(k)));
    std::set<std::string> seen(labels_[k].begin(), labels_[k].end());
    if (static_cast<int>(seen.size()) != dims_[k])
      throw Error("BadInput", "duplicate basis labels at degree " +
                                  std::to_string(lo_ + static_cast<int>(k)));
  }
  for (size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].rows() != dims_[k] || diffs_[k].cols() != dims_[k + 1])
      throw Error("DimensionMismatch",
                  "differential shape mismatch at degree " +
                      std::to_string(lo_ + static_cast<int>(k) + 1));
  }
}

int ChainComplex::dim(int d) const {
  if (d < lo_ || d > hi()) return 0;
  return dims_[d - lo_];
}

const Matrix& ChainComplex::diff(int d) const {
  if (d <= lo_ || d > hi()) return kEmptyMatrix;
  return diffs_[d - lo_ - 1];
}

const std::vector<std::string>& ChainComplex::labels(int d) const {
  if (d < lo_ || d > hi()) return kNoLabels;
  return labels_[d - lo_];
}

int ChainComplex::label_index(int d, const std::string& label) const {
  const auto& ls = labels(d);
  auto it = std::find(ls.begin(), ls.end(), label);
  return it == ls.end() ? -1 : static_cast<int>(it - ls.begin());
}

std::optional<ComplexWitness> ChainComplex::verify(const Field& f) const {
  for (int d = lo_ + 2; d <= hi(); ++d) {
    Matrix prod = multiply(diff(d - 1), diff(d), f);
    for (int r = 0; r < prod.rows(); ++r)
      for (int c = 0; c < prod.cols(); ++c)
        if (!prod.at(r, c).is_zero()) return ComplexWitness{d, r, c};
  }
  return std::nullopt;
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = lo_; d <= hi(); ++d)
    chi += (((d % 2) + 2) % 2 == 0) ? dim(d) : -dim(d);
  return chi;
}

int HomologyResult::betti(int d) const {
  if (d < lo_ || d > hi()) return 0;
  return deg_[d - lo_].betti;
}

const DegreeHomology& HomologyResult::at(int d) const {
  static const DegreeHomology kEmpty;
  if (d < lo_ || d > hi()) return kEmpty;
  return deg_[d - lo_];
}

std::map<int, int> HomologyResult::betti_map() const {
  std::map<int, int> m;
  for (int d = lo_; d <= hi(); ++d)
    if (betti(d) != 0) m[d] = betti(d);
  return m;
}

bool HomologyResult::all_zero() const { return betti_map().empty(); }

int HomologyResult::total() const {
  int t = 0;
  for (const auto& dh : deg_) t += dh.betti;
  return t;
}

std::optional<std::vector<Rational>> HomologyResult::expand(
    int d, const std::vector<Rational>& z, const Field& f) const {
  const DegreeHomology& dh = at(d);
  const int n = static_cast<int>(z.size());
  const int k = dh.betti;
  const int b = static_cast<int>(dh.boundaries.size());
  if (k == 0 && b == 0) {
    // nothing to expand against: z must be zero
    for (const auto& x : z)
      if (!x.is_zero()) return std::nullopt;
    return std::vector<Rational>{};
  }
  Matrix m(n, k + b);
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < n; ++r) m.at(r, j) = dh.cycles[j][r];
  for (int j = 0; j < b; ++j)
    for (int r = 0; r < n; ++r) m.at(r, k + j) = dh.boundaries[j][r];
  auto sol = solve_in_span(m, z, f);
  if (!sol) return std::nullopt;
  return std::vector<Rational>(sol->begin(), sol->begin() + k);
}

namespace {

HomologyResult compute_homology(const ChainComplex& c, const Field& f) {
  std::vector<DegreeHomology> out;
  for (int d = c.lo(); d <= c.hi(); ++d) {
    DegreeHomology dh;
    const int n = c.dim(d);
    // cycles
    std::vector<std::vector<Rational>> zbasis;
    if (d == c.lo()) {
      for (int j = 0; j < n; ++j) {
        std::vector<Rational> e(n);
        e[j] = f.from_int(1);
        zbasis.push_back(std::move(e));
      }
    } else {
      zbasis = kernel_basis(c.diff(d), f);
    }
    // boundaries: independent columns of the incoming differential
    if (d < c.hi()) {
      const Matrix& in = c.diff(d + 1);
      for (int col : independent_columns(in, f))
        dh.boundaries.push_back(in.column(col));
    }
    // extend the boundary basis by cycles to get homology representatives
    const int b = static_cast<int>(dh.boundaries.size());
    const int z = static_cast<int>(zbasis.size());
    Matrix span(n, b + z);
    for (int j = 0; j < b; ++j)
      for (int r = 0; r < n; ++r) span.at(r, j) = dh.boundaries[j][r];
    for (int j = 0; j < z; ++j)
      for (int r = 0; r < n; ++r) span.at(r, b + j) = zbasis[j][r];
    for (int col : independent_columns(span, f))
      if (col >= b) dh.cycles.push_back(zbasis[col - b]);
    dh.betti = static_cast<int>(dh.cycles.size());
    out.push_back(std::move(dh));
  }
  return HomologyResult(c.lo(), std::move(out));
}

}  // namespace

HomologyResult homology(const ChainComplex& c, const Field& f) {
  if (auto w = c.verify(f))
    throw Error("NotAComplex",
                "d∘d nonzero at degree " + std::to_string(w->degree) +
                    ", entry (" + std::to_string(w->row) + "," +
                    std::to_string(w->col) + ")");
  return compute_homology(c, f);
}

HomologyResult homology_unchecked(const ChainComplex& c, const Field& f) {
  return compute_homology(c, f);
}

ChainComplex quotient_complex(const ChainComplex& c,
                              const SubcomplexSelection& sub) {
  auto selected = [&](int d, int idx) {
    auto it = sub.find(d);
    if (it == sub.end()) return false;
    return it->second.count(c.labels(d)[idx]) > 0;
  };
  // validate labels exist
  for (const auto& [d, labels] : sub)
    for (const auto& l : labels)
      if (c.label_index(d, l) < 0)
        throw Error("NotASubcomplex", "unknown label '" + l + "'",
                    "degree " + std::to_string(d));
  // validate closure under the differential's support
  for (int d = c.lo() + 1; d <= c.hi(); ++d) {
    const Matrix& m = c.diff(d);
    for (int col = 0; col < c.dim(d); ++col) {
      if (!selected(d, col)) continue;
      for (int row = 0; row < c.dim(d - 1); ++row)
        if (!m.at(row, col).is_zero() && !selected(d - 1, row))
          throw Error("NotASubcomplex",
                      "selection hits '" + c.labels(d - 1)[row] +
                          "' which is not selected",
                      "degree " + std::to_string(d));
    }
  }
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<int>> keep;  // original indices per degree
  for (int d = c.lo(); d <= c.hi(); ++d) {
    std::vector<int> k;
    std::vector<std::string> ls;
    for (int j = 0; j < c.dim(d); ++j)
      if (!selected(d, j)) {
        k.push_back(j);
        ls.push_back(c.labels(d)[j]);
      }
    dims.push_back(static_cast<int>(k.size()));
    labels.push_back(std::move(ls));
    keep.push_back(std::move(k));
  }
  std::vector<Matrix> diffs;
  for (int d = c.lo() + 1; d <= c.hi(); ++d) {
    const auto& rows = keep[d - 1 - c.lo()];
    const auto& cols = keep[d - c.lo()];
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(j)) =
            c.diff(d).at(rows[i], cols[j]);
    diffs.push_back(std::move(m));
  }
  return ChainComplex(c.lo(), std::move(dims), std::move(diffs),
                      std::move(labels));
}

HomologyResult relative_homology(const ChainComplex& c,
                                 const SubcomplexSelection& sub,
                                 const Field& f) {
  return homology(quotient_complex(c, sub), f);
}

}  // namespace cwres
