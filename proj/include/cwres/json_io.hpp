#ifndef CWRES_JSON_IO_HPP
#define CWRES_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cwres/cw.hpp"
#include "cwres/ideal.hpp"
#include "cwres/poset.hpp"
#include "cwres/resolution.hpp"
#include "cwres/simplicial.hpp"

namespace cwres::io {

using nlohmann::json;

// {"elements": [id...], "covers": [[lo,hi]...], "labels": {id: str}?}
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

// {"cells": [{"id", "dim", "facets", "mdeg"?}...]}; the empty cell is implicit
json cw_to_json(const RegularCWComplex& x);
RegularCWComplex cw_from_json(const json& j);

// {"vars": n, "generators": [[e1..en]...]}
json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

// {"vertices": [id...], "facets": [[id...]...]}
json simplicial_to_json(const SimplicialComplex& s);
SimplicialComplex simplicial_from_json(const json& j);

// {"vars", "modules": [{"labels", "multidegrees"}...],
//  "differentials": [{"degree", "entries": [[row, col, scalar, mono]...]}]}
// with scalars as exact strings "p/q".
json resolution_to_json(const MultigradedComplex& fx);
MultigradedComplex resolution_from_json(const json& j);

json load_json(const std::string& path);
std::string file_digest(const std::string& path);  // "fnv64:<hex>"

}  // namespace cwres::io

#endif
