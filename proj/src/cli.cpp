#include "cwres/cli.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cwres/errors.hpp"
#include "cwres/json_io.hpp"

namespace cwres {

namespace {

using io::json;

struct Common {
  std::string field_str = "q";
  bool pretty = false;
  bool timing = false;
  std::map<std::string, std::string> inputs;  // path -> digest

  Field field() const { return Field(FieldConfig::parse(field_str)); }
  json note(const std::string& path) {
    inputs[path] = io::file_digest(path);
    return io::load_json(path);
  }
};

json betti_json(const std::map<int, int>& betti) {
  json j = json::object();
  for (const auto& [d, b] : betti) j[std::to_string(d)] = b;
  return j;
}

json cw_report_json(const CWPosetReport& rep) {
  json j;
  j["is_cw_poset"] = rep.is_cw();
  j["least_element"] = rep.least_element;
  j["nontrivial"] = rep.nontrivial;
  j["ranked"] = rep.ranked;
  if (rep.thin)
    j["thin"] = *rep.thin;
  else
    j["thin"] = nullptr;
  if (auto w = rep.witness()) j["witness"] = *w;
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) {
    json jv;
    jv["element"] = v.id;
    jv["expected_degree"] = v.expected_degree;
    jv["sphere"] = v.sphere;
    jv["betti"] = betti_json(v.betti);
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = verdicts;
  return j;
}

std::vector<int> f_vector(const Poset&, const std::vector<int>& rank) {
  int top = 0;
  for (int r : rank) top = std::max(top, r);
  std::vector<int> f(top + 1, 0);
  for (int r : rank) ++f[r];
  return f;
}

MultigradedComplex build_resolution(const MonomialIdeal& ideal,
                                    const std::string& mode,
                                    const std::vector<int>& order,
                                    const Field& f) {
  if (mode == "taylor") return homogenize_cellular(taylor_complex(ideal), f);
  if (mode == "scarf") return homogenize_cellular(scarf_complex(ideal), f);
  if (mode == "lyubeznik")
    return homogenize_cellular(lyubeznik_complex(ideal, order), f);
  if (mode == "poset") {
    LcmLattice lat = lcm_lattice(ideal);
    DSequence d = d_construction(lat.poset, f);
    return homogenize_d(d, lat.poset, lat.monomials, f);
  }
  throw Error("BadInput", "unknown resolution mode '" + mode + "'");
}

int emit(const json& payload, const Common& common, const std::string& echo,
         bool ok, std::ostream& out,
         std::chrono::steady_clock::time_point started) {
  json report = payload;
  report["command"] = echo;
  report["field"] = common.field_str;
  report["inputs"] = common.inputs;
  report["ok"] = ok;
  if (common.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    report["timing_ms"] = static_cast<double>(us) / 1000.0;
  }
  out << (common.pretty ? report.dump(2) : report.dump()) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  Common common;

  CLI::App app{"Face posets, the poset construction D(P), and multigraded "
               "resolutions of monomial ideals"};
  app.require_subcommand(1);
  app.add_option("--field", common.field_str,
                 "coefficient field: q or fp:<p>")
      ->capture_default_str();
  app.add_flag("--pretty", common.pretty, "indent the JSON report");
  app.add_flag("--timing", common.timing, "include timing_ms in the report");

  std::string cw_file, poset_file, complex_file, ideal_file, resolution_file;
  std::string alpha_id, order_csv, strategy = "smallest";
  int jay = -1, shift = 1;
  bool with_matrices = false;
  bool taylor = false, scarf = false, lyubeznik = false, poset_mode = false;

  auto* face_poset_cmd = app.add_subcommand("face-poset", "face poset of a CW complex");
  face_poset_cmd->add_option("--cw", cw_file)->required();

  auto* order_complex_cmd = app.add_subcommand("order-complex", "order complex of a poset");
  order_complex_cmd->add_option("--poset", poset_file)->required();
  std::vector<std::string> open_pair, half_pair;
  order_complex_cmd->add_option("--open", open_pair, "open interval (a,b)")->expected(2);
  order_complex_cmd->add_option("--half", half_pair, "half-closed interval (a,b]")->expected(2);

  auto* homology_cmd = app.add_subcommand("homology", "reduced homology");
  homology_cmd->add_option("--complex", complex_file, "simplicial complex file");
  homology_cmd->add_option("--cw", cw_file, "CW complex file");

  auto* is_cw_cmd = app.add_subcommand("is-cw-poset", "CW-poset test");
  is_cw_cmd->add_option("--poset", poset_file)->required();

  auto* dcons_cmd = app.add_subcommand("d-construction", "the sequence D(P)");
  dcons_cmd->add_option("--poset", poset_file)->required();
  dcons_cmd->add_flag("--matrices", with_matrices, "include φ matrices");
  dcons_cmd->add_option("--strategy", strategy, "cover assignment: smallest|largest");

  auto* compare_cmd = app.add_subcommand(
      "compare", "cellular chain complex against D(P_X)");
  compare_cmd->add_option("--cw", cw_file)->required();
  compare_cmd->add_option("--shift", shift)->capture_default_str();

  auto* filt_cmd = app.add_subcommand("filtration-check",
                                      "commutative square of the skeletal filtration");
  filt_cmd->add_option("--poset", poset_file)->required();
  filt_cmd->add_option("--alpha", alpha_id);
  filt_cmd->add_option("--j", jay);

  auto* lcm_cmd = app.add_subcommand("lcm-lattice", "lcm lattice of an ideal");
  lcm_cmd->add_option("--ideal", ideal_file)->required();

  auto* resolve_cmd = app.add_subcommand("resolve", "build a resolution frame");
  resolve_cmd->add_option("--ideal", ideal_file)->required();
  resolve_cmd->add_flag("--taylor", taylor);
  resolve_cmd->add_flag("--scarf", scarf);
  resolve_cmd->add_flag("--lyubeznik", lyubeznik);
  resolve_cmd->add_flag("--poset", poset_mode);
  resolve_cmd->add_option("--order", order_csv, "generator order, 1-based csv");

  auto* verify_cmd = app.add_subcommand("verify-resolution",
                                        "resolution, minimality and lattice-linearity checks");
  verify_cmd->add_option("--ideal", ideal_file)->required();
  verify_cmd->add_flag("--taylor", taylor);
  verify_cmd->add_flag("--scarf", scarf);
  verify_cmd->add_flag("--lyubeznik", lyubeznik);
  verify_cmd->add_flag("--poset", poset_mode);
  verify_cmd->add_option("--order", order_csv, "generator order, 1-based csv");
  verify_cmd->add_option("--resolution", resolution_file, "exported resolution file");

  auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers via the lcm lattice");
  betti_cmd->add_option("--ideal", ideal_file)->required();

  auto* lattice_report_cmd =
      app.add_subcommand("cw-lattice-report", "CW-poset test of the lcm lattice");
  lattice_report_cmd->add_option("--ideal", ideal_file)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv = {"cwres"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::string echo = "cwres";
  for (const auto& a : args) echo += " " + a;

  try {
    const Field field = common.field();

    auto resolution_mode = [&]() -> std::string {
      int picked = taylor + scarf + lyubeznik + poset_mode;
      if (picked != 1)
        throw Error("BadInput",
                    "pick exactly one of --taylor --scarf --lyubeznik --poset");
      if (taylor) return "taylor";
      if (scarf) return "scarf";
      if (lyubeznik) return "lyubeznik";
      return "poset";
    };
    auto parse_order = [&](const MonomialIdeal& ideal) {
      std::vector<int> order;
      if (order_csv.empty()) return order;
      std::stringstream ss(order_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok) - 1);
      if (static_cast<int>(order.size()) != ideal.size())
        throw Error("BadInput", "--order must list every generator once");
      return order;
    };

    if (*face_poset_cmd) {
      RegularCWComplex x = io::cw_from_json(common.note(cw_file));
      FacePoset fp = face_poset(x);
      json payload;
      payload["poset"] = io::poset_to_json(fp.poset);
      json ranks = json::object();
      for (int i = 0; i < fp.poset.size(); ++i)
        ranks[fp.poset.id(i)] = fp.rank[i];
      payload["ranks"] = ranks;
      payload["f_vector"] = f_vector(fp.poset, fp.rank);
      return emit(payload, common, echo, true, out, started);
    }

    if (*order_complex_cmd) {
      Poset p = io::poset_from_json(common.note(poset_file));
      if (!open_pair.empty() && !half_pair.empty())
        throw Error("BadInput", "--open and --half are exclusive");
      SimplicialComplex s;
      if (!open_pair.empty())
        s = order_complex(
            p.open_interval(p.index(open_pair[0]), p.index(open_pair[1])));
      else if (!half_pair.empty())
        s = order_complex(p.half_closed_interval(p.index(half_pair[0]),
                                                 p.index(half_pair[1])));
      else
        s = order_complex(p);
      json payload;
      payload["complex"] = io::simplicial_to_json(s);
      json fv = json::array();
      for (int d = 0; d <= s.dim(); ++d) fv.push_back(s.faces(d).size());
      payload["f_vector"] = fv;
      return emit(payload, common, echo, true, out, started);
    }

    if (*homology_cmd) {
      ChainComplex c;
      if (!complex_file.empty() && cw_file.empty()) {
        SimplicialComplex s = io::simplicial_from_json(common.note(complex_file));
        c = s.reduced_chain_complex(field);
      } else if (!cw_file.empty() && complex_file.empty()) {
        RegularCWComplex x = io::cw_from_json(common.note(cw_file));
        c = cellular_chain_complex(x, field);
      } else {
        throw Error("BadInput", "pass exactly one of --complex or --cw");
      }
      HomologyResult h = homology(c, field);
      return emit(betti_json(h.betti_map()), common, echo, true, out, started);
    }

    if (*is_cw_cmd) {
      Poset p = io::poset_from_json(common.note(poset_file));
      CWPosetReport rep = is_cw_poset(p, field);
      return emit(cw_report_json(rep), common, echo, rep.is_cw(), out, started);
    }

    if (*dcons_cmd) {
      Poset p = io::poset_from_json(common.note(poset_file));
      CoverStrategy s = CoverStrategy::SmallestId;
      if (strategy == "largest")
        s = CoverStrategy::LargestId;
      else if (strategy != "smallest")
        throw Error("BadInput", "--strategy must be smallest or largest");
      DSequence d = d_construction(p, field, s);
      json payload;
      payload["dims"] = d.dims();
      payload["is_complex"] = d.is_complex;
      json summands = json::array();
      for (int degree = 0; degree < static_cast<int>(d.summands.size());
           ++degree) {
        json level = json::array();
        for (const auto& sm : d.summands[degree])
          level.push_back(json{{"element", p.id(sm.element)},
                               {"homology_degree", sm.hdeg},
                               {"count", sm.count}});
        summands.push_back(std::move(level));
      }
      payload["summands"] = summands;
      if (with_matrices) {
        json ms = json::array();
        for (int degree = 1; degree <= d.cc.hi(); ++degree) {
          const Matrix& m = d.cc.diff(degree);
          json jm = json::array();
          for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int cidx = 0; cidx < m.cols(); ++cidx)
              row.push_back(m.at(r, cidx).str());
            jm.push_back(std::move(row));
          }
          ms.push_back(std::move(jm));
        }
        payload["matrices"] = ms;
      }
      return emit(payload, common, echo, true, out, started);
    }

    if (*compare_cmd) {
      RegularCWComplex x = io::cw_from_json(common.note(cw_file));
      ChainComplex c = cellular_chain_complex(x, field);
      FacePoset fp = face_poset(x);
      DSequence d = d_construction(fp.poset, field);
      bool iso = d.is_complex && compare_complexes(c, d.cc, shift, field);
      json payload;
      payload["isomorphic"] = iso;
      json dims = json::array();
      for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
      payload["dims"] = dims;
      payload["d_dims"] = d.dims();
      payload["is_complex"] = d.is_complex;
      return emit(payload, common, echo, iso, out, started);
    }

    if (*filt_cmd) {
      Poset p = io::poset_from_json(common.note(poset_file));
      FiltrationChecker checker(p, field);
      json checks = json::array();
      bool all = true;
      auto run_one = [&](int alpha, int j) {
        bool okay = checker.check(alpha, j);
        all = all && okay;
        checks.push_back(
            json{{"alpha", p.id(alpha)}, {"j", j}, {"ok", okay}});
      };
      if (!alpha_id.empty() && jay >= 0) {
        run_one(p.index(alpha_id), jay);
      } else if (!alpha_id.empty()) {
        int alpha = p.index(alpha_id);
        for (int j = 0; j <= checker.ranks()[alpha]; ++j) run_one(alpha, j);
      } else {
        const int zero = *p.least();
        for (int alpha = 0; alpha < p.size(); ++alpha) {
          if (alpha == zero) continue;
          for (int j = 0; j <= checker.ranks()[alpha]; ++j) run_one(alpha, j);
        }
      }
      json payload;
      payload["all_true"] = all;
      payload["checks"] = checks;
      return emit(payload, common, echo, all, out, started);
    }

    if (*lcm_cmd) {
      MonomialIdeal ideal = io::ideal_from_json(common.note(ideal_file));
      LcmLattice lat = lcm_lattice(ideal);
      json payload;
      payload["poset"] = io::poset_to_json(lat.poset);
      json monomials = json::object();
      for (int i = 0; i < lat.poset.size(); ++i)
        monomials[lat.poset.id(i)] = lat.monomials[i].exps();
      payload["monomials"] = monomials;
      return emit(payload, common, echo, true, out, started);
    }

    if (*resolve_cmd) {
      MonomialIdeal ideal = io::ideal_from_json(common.note(ideal_file));
      MultigradedComplex fx =
          build_resolution(ideal, resolution_mode(), parse_order(ideal), field);
      json payload;
      payload["ranks"] = fx.ranks();
      payload["resolution"] = io::resolution_to_json(fx);
      return emit(payload, common, echo, true, out, started);
    }

    if (*verify_cmd) {
      MonomialIdeal ideal = io::ideal_from_json(common.note(ideal_file));
      MultigradedComplex fx;
      if (!resolution_file.empty())
        fx = io::resolution_from_json(common.note(resolution_file));
      else
        fx = build_resolution(ideal, resolution_mode(), parse_order(ideal),
                              field);
      ResolutionVerdict rv = is_resolution(fx, ideal, field);
      bool minimal = is_minimal(fx);
      LatticeLinearVerdict ll = is_lattice_linear(fx, ideal);
      json payload;
      payload["is_resolution"] = rv.resolves;
      json failing = json::array();
      for (const auto& b : rv.failing) failing.push_back(b.exps());
      payload["witnesses"] = failing;
      payload["is_minimal"] = minimal;
      payload["lattice_linear"] = ll.lattice_linear;
      payload["lattice_linear_witnesses"] = ll.witnesses;
      json warnings = json::array();
      if (!minimal)
        warnings.push_back(
            "lattice-linearity is defined for minimal resolutions; input is "
            "not minimal");
      payload["warnings"] = warnings;
      payload["ranks"] = fx.ranks();
      return emit(payload, common, echo, rv.resolves, out, started);
    }

    if (*betti_cmd) {
      MonomialIdeal ideal = io::ideal_from_json(common.note(ideal_file));
      BettiTable table = gpw_betti(ideal, field);
      json payload;
      payload["total"] = table.totals;
      json tbl = json::object();
      for (const auto& [key, value] : table.entries) {
        const auto& [i, m] = key;
        tbl[std::to_string(i)][m.str()] = value;
      }
      payload["table"] = tbl;
      return emit(payload, common, echo, true, out, started);
    }

    if (*lattice_report_cmd) {
      MonomialIdeal ideal = io::ideal_from_json(common.note(ideal_file));
      CWLatticeReport rep = cw_lattice_report(ideal, field);
      json payload;
      payload["is_cw"] = rep.is_cw;
      if (rep.witness) payload["witness"] = *rep.witness;
      payload["lattice_linear_certified"] = rep.lattice_linear_certified;
      payload["poset_report"] = cw_report_json(rep.poset_report);
      if (rep.minimal_cellular) {
        payload["ranks"] = rep.minimal_cellular->ranks();
        payload["resolution"] = io::resolution_to_json(*rep.minimal_cellular);
      }
      return emit(payload, common, echo, true, out, started);
    }

    throw Error("BadInput", "no subcommand selected");
  } catch (const Error& e) {
    json report;
    report["error"] = {{"kind", e.kind()},
                       {"location", e.location()},
                       {"message", e.message()}};
    report["command"] = echo;
    out << (common.pretty ? report.dump(2) : report.dump()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json report;
    report["error"] = {{"kind", "Internal"},
                       {"location", ""},
                       {"message", e.what()}};
    report["command"] = echo;
    out << (common.pretty ? report.dump(2) : report.dump()) << "\n";
    return 2;
  }
}

}  // namespace cwres
