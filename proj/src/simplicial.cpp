#include "cwres/simplicial.hpp"

#include <algorithm>

#include "cwres/errors.hpp"

namespace cwres {

SimplicialComplex::SimplicialComplex(std::vector<std::string> universe)
    : universe_(std::move(universe)) {
  for (int i = 0; i < static_cast<int>(universe_.size()); ++i) {
    if (uindex_.count(universe_[i]))
      throw Error("DuplicateId", "vertex '" + universe_[i] + "' repeated");
    uindex_[universe_[i]] = i;
  }
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> universe,
    const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex s(std::move(universe));
  for (const auto& facet : facets) {
    std::vector<int> face;
    for (const auto& v : facet) face.push_back(s.universe_index(v));
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw Error("BadInput", "facet with repeated vertex");
    s.add_face(std::move(face));
  }
  return s;
}

int SimplicialComplex::universe_index(const std::string& v) const {
  auto it = uindex_.find(v);
  if (it == uindex_.end())
    throw Error("UnknownElement", "no vertex '" + v + "'");
  return it->second;
}

void SimplicialComplex::add_face(std::vector<int> face) {
  if (face.empty()) return;  // the empty face is implicit
  const int d = static_cast<int>(face.size()) - 1;
  if (static_cast<int>(faces_.size()) <= d) faces_.resize(d + 1);
  auto& level = faces_[d];
  auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it != level.end() && *it == face) return;
  level.insert(it, face);
  if (d > 0)
    for (size_t k = 0; k < face.size(); ++k) {
      std::vector<int> sub;
      for (size_t j = 0; j < face.size(); ++j)
        if (j != k) sub.push_back(face[j]);
      add_face(std::move(sub));
    }
}

int SimplicialComplex::dim() const {
  return static_cast<int>(faces_.size()) - 1;
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int d) const {
  static const std::vector<std::vector<int>> kEmpty;
  if (d < 0 || d >= static_cast<int>(faces_.size())) return kEmpty;
  return faces_[d];
}

int SimplicialComplex::face_count() const {
  int n = 0;
  for (const auto& level : faces_) n += static_cast<int>(level.size());
  return n;
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
  if (face.empty()) return true;
  return face_index(static_cast<int>(face.size()) - 1, face) >= 0;
}

int SimplicialComplex::face_index(int d, const std::vector<int>& face) const {
  const auto& level = faces(d);
  auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it == level.end() || *it != face) return -1;
  return static_cast<int>(it - level.begin());
}

std::string SimplicialComplex::face_label(const std::vector<int>& face) const {
  std::string s = "{";
  for (size_t i = 0; i < face.size(); ++i) {
    if (i) s += ",";
    s += universe_[face[i]];
  }
  return s + "}";
}

std::vector<std::string> SimplicialComplex::vertex_ids() const {
  std::vector<std::string> out;
  for (const auto& v : faces(0)) out.push_back(universe_[v[0]]);
  return out;
}

bool SimplicialComplex::subcomplex_of(const SimplicialComplex& other) const {
  if (universe_ != other.universe_) return false;
  for (int d = 0; d <= dim(); ++d)
    for (const auto& face : faces(d))
      if (!other.contains(face)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::unioned(
    const SimplicialComplex& other) const {
  if (universe_ != other.universe_)
    throw Error("BadInput", "union of complexes over different universes");
  SimplicialComplex out = *this;
  if (other.faces_.size() > out.faces_.size())
    out.faces_.resize(other.faces_.size());
  for (int d = 0; d <= other.dim(); ++d) {
    auto& level = out.faces_[d];
    for (const auto& face : other.faces(d)) {
      auto it = std::lower_bound(level.begin(), level.end(), face);
      if (it == level.end() || *it != face) level.insert(it, face);
    }
  }
  return out;
}

ChainComplex SimplicialComplex::reduced_chain_complex(const Field& f) const {
  const int top = dim();
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  dims.push_back(1);  // the empty face in degree -1
  labels.push_back({"{}"});
  for (int d = 0; d <= top; ++d) {
    dims.push_back(static_cast<int>(faces(d).size()));
    std::vector<std::string> ls;
    for (const auto& face : faces(d)) ls.push_back(face_label(face));
    labels.push_back(std::move(ls));
  }
  std::vector<Matrix> diffs;
  for (int d = 0; d <= top; ++d) {
    const auto& level = faces(d);
    Matrix m(d == 0 ? 1 : static_cast<int>(faces(d - 1).size()),
             static_cast<int>(level.size()));
    for (int col = 0; col < static_cast<int>(level.size()); ++col) {
      const auto& face = level[col];
      if (d == 0) {
        m.at(0, col) = f.from_int(1);  // augmentation: vertex -> +empty face
        continue;
      }
      for (int k = 0; k <= d; ++k) {
        std::vector<int> sub;
        for (int j = 0; j <= d; ++j)
          if (j != k) sub.push_back(face[j]);
        int row = face_index(d - 1, sub);
        if (row < 0)
          throw Error("Internal", "missing boundary face " + face_label(sub));
        m.at(row, col) = f.from_int(k % 2 == 0 ? 1 : -1);
      }
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex(-1, std::move(dims), std::move(diffs),
                      std::move(labels));
}

SimplicialComplex order_complex(const Poset& p) {
  return order_complex_over(p, [](int) { return true; });
}

// Chains are enumerated by growing upward from each member, so every chain
// appears exactly once and add_face keeps the face sets closed.
SimplicialComplex order_complex_over(const Poset& p,
                                     const std::function<bool(int)>& keep) {
  std::vector<int> ext = p.linear_extension();
  std::vector<std::string> universe;
  for (int i : ext) universe.push_back(p.id(i));
  std::vector<int> pos(p.size());
  for (int i = 0; i < p.size(); ++i) pos[ext[i]] = i;
  SimplicialComplex s(std::move(universe));
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int last) {
    std::vector<int> face;
    for (int e : chain) face.push_back(pos[e]);
    std::sort(face.begin(), face.end());
    s.add_face(face);
    for (int next = 0; next < p.size(); ++next)
      if (keep(next) && p.less(last, next)) {
        chain.push_back(next);
        grow(next);
        chain.pop_back();
      }
  };
  for (int start = 0; start < p.size(); ++start)
    if (keep(start)) {
      chain = {start};
      grow(start);
    }
  return s;
}

}  // namespace cwres
