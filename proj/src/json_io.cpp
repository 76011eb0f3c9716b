#include "cwres/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cwres/errors.hpp"

namespace cwres::io {

namespace {

void expect(bool cond, const std::string& what, const std::string& where) {
  if (!cond) throw Error("BadInput", what, where);
}

std::vector<long long> exps_from_json(const json& j, const std::string& where) {
  expect(j.is_array(), "expected an exponent array", where);
  std::vector<long long> e;
  for (const auto& x : j) {
    expect(x.is_number_integer() && x.get<long long>() >= 0,
           "exponents must be nonnegative integers", where);
    e.push_back(x.get<long long>());
  }
  return e;
}

}  // namespace

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.ids();
  json covers = json::array();
  for (const auto& [a, b] : p.covers())
    covers.push_back(json::array({p.id(a), p.id(b)}));
  j["covers"] = covers;
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

Poset poset_from_json(const json& j) {
  expect(j.is_object() && j.contains("elements") && j.contains("covers"),
         "poset file needs 'elements' and 'covers'", "poset");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    expect(e.is_string(), "element ids must be strings", "poset.elements");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"]) {
    expect(c.is_array() && c.size() == 2, "covers are [lo, hi] pairs",
           "poset.covers");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  std::map<std::string, std::string> labels;
  if (j.contains("labels"))
    for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
      labels[it.key()] = it.value().get<std::string>();
  return Poset::build(std::move(elements), std::move(covers),
                      std::move(labels));
}

json cw_to_json(const RegularCWComplex& x) {
  json cells = json::array();
  for (const auto& c : x.cells()) {
    json jc;
    jc["id"] = c.id;
    jc["dim"] = c.dim;
    jc["facets"] = c.facets;
    if (c.mdeg) jc["mdeg"] = c.mdeg->exps();
    cells.push_back(std::move(jc));
  }
  return json{{"cells", cells}};
}

RegularCWComplex cw_from_json(const json& j) {
  expect(j.is_object() && j.contains("cells"), "cw file needs 'cells'", "cw");
  std::vector<CWCell> cells;
  for (const auto& jc : j["cells"]) {
    CWCell c;
    expect(jc.contains("id") && jc.contains("dim"),
           "cells need 'id' and 'dim'", "cw.cells");
    c.id = jc["id"].get<std::string>();
    c.dim = jc["dim"].get<int>();
    if (jc.contains("facets"))
      for (const auto& f : jc["facets"]) c.facets.push_back(f.get<std::string>());
    if (jc.contains("mdeg"))
      c.mdeg = Monomial(exps_from_json(jc["mdeg"], "cw cell " + c.id));
    cells.push_back(std::move(c));
  }
  return RegularCWComplex::from_cells(std::move(cells));
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.exps());
  return json{{"vars", ideal.vars()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
  expect(j.is_object() && j.contains("vars") && j.contains("generators"),
         "ideal file needs 'vars' and 'generators'", "ideal");
  const int vars = j["vars"].get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j["generators"]) {
    auto e = exps_from_json(g, "ideal.generators");
    expect(static_cast<int>(e.size()) == vars,
           "generator length must equal vars", "ideal.generators");
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::minimalize(vars, std::move(gens));
}

json simplicial_to_json(const SimplicialComplex& s) {
  json j;
  j["vertices"] = s.vertex_ids();
  json facets = json::array();
  // facets: faces not contained in a larger face
  for (int d = s.dim(); d >= 0; --d)
    for (const auto& face : s.faces(d)) {
      bool maximal = true;
      for (int dd = d + 1; dd <= s.dim() && maximal; ++dd)
        for (const auto& big : s.faces(dd)) {
          if (std::includes(big.begin(), big.end(), face.begin(), face.end())) {
            maximal = false;
            break;
          }
        }
      if (!maximal) continue;
      json f = json::array();
      for (int v : face) f.push_back(s.universe()[v]);
      facets.push_back(std::move(f));
    }
  j["facets"] = facets;
  return j;
}

SimplicialComplex simplicial_from_json(const json& j) {
  expect(j.is_object() && j.contains("vertices"),
         "complex file needs 'vertices'", "complex");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(v.get<std::string>());
  std::vector<std::vector<std::string>> facets;
  if (j.contains("facets"))
    for (const auto& f : j["facets"]) {
      std::vector<std::string> face;
      for (const auto& v : f) face.push_back(v.get<std::string>());
      facets.push_back(std::move(face));
    }
  // vertices are faces even when no facet lists them
  for (const auto& v : vertices) facets.push_back({v});
  return SimplicialComplex::from_facets(std::move(vertices), facets);
}

json resolution_to_json(const MultigradedComplex& fx) {
  json j;
  j["vars"] = fx.vars;
  json modules = json::array();
  for (int d = 0; d <= fx.length(); ++d) {
    json m;
    m["labels"] = fx.labels[d];
    json degs = json::array();
    for (const auto& md : fx.mdegs[d]) degs.push_back(md.exps());
    m["multidegrees"] = degs;
    modules.push_back(std::move(m));
  }
  j["modules"] = modules;
  json diffs = json::array();
  for (int d = 1; d <= fx.length(); ++d) {
    json jd;
    jd["degree"] = d;
    json entries = json::array();
    for (const auto& e : fx.diffs[d])
      entries.push_back(
          json::array({e.row, e.col, e.scalar.str(), e.mono.exps()}));
    jd["entries"] = entries;
    diffs.push_back(std::move(jd));
  }
  j["differentials"] = diffs;
  return j;
}

MultigradedComplex resolution_from_json(const json& j) {
  expect(j.is_object() && j.contains("vars") && j.contains("modules"),
         "resolution file needs 'vars' and 'modules'", "resolution");
  MultigradedComplex fx;
  fx.vars = j["vars"].get<int>();
  for (const auto& m : j["modules"]) {
    std::vector<std::string> labels;
    for (const auto& l : m["labels"]) labels.push_back(l.get<std::string>());
    std::vector<Monomial> mdegs;
    for (const auto& d : m["multidegrees"])
      mdegs.emplace_back(exps_from_json(d, "resolution.modules"));
    expect(labels.size() == mdegs.size(), "labels/multidegrees mismatch",
           "resolution.modules");
    fx.labels.push_back(std::move(labels));
    fx.mdegs.push_back(std::move(mdegs));
  }
  fx.diffs.resize(fx.mdegs.size());
  if (j.contains("differentials"))
    for (const auto& jd : j["differentials"]) {
      const int d = jd["degree"].get<int>();
      expect(d >= 1 && d <= fx.length(), "differential degree out of range",
             "resolution.differentials");
      for (const auto& je : jd["entries"]) {
        expect(je.is_array() && je.size() == 4,
               "entries are [row, col, scalar, mono]",
               "resolution.differentials");
        MgEntry e;
        e.row = je[0].get<int>();
        e.col = je[1].get<int>();
        e.scalar = Rational::parse(je[2].get<std::string>());
        e.mono = Monomial(exps_from_json(je[3], "resolution entry"));
        expect(e.row >= 0 &&
                   e.row < static_cast<int>(fx.mdegs[d - 1].size()) &&
                   e.col >= 0 && e.col < static_cast<int>(fx.mdegs[d].size()),
               "entry index out of range", "resolution.differentials");
        fx.diffs[d].push_back(std::move(e));
      }
    }
  return fx;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open file", path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("BadInput", std::string("invalid JSON: ") + e.what(), path);
  }
  return j;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("BadInput", "cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  unsigned long long h = 1469598103934665603ULL;  // FNV-1a 64
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string("fnv64:") + buf;
}

}  // namespace cwres::io
