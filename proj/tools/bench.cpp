// Benchmark comparing the OpenMP interval/strand kernels against their
// serial reference implementations on face posets of simplex boundaries and
// a Taylor resolution sweep.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cwres/cw.hpp"
#include "cwres/d_construction.hpp"
#include "cwres/ideal.hpp"
#include "cwres/parallel.hpp"
#include "cwres/resolution.hpp"

using namespace cwres;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - t0)
             .count() /
         1000.0;
}

// boundary of the n-simplex as a regular CW complex
RegularCWComplex simplex_boundary(int n) {
  std::vector<CWCell> cells;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    if (mask == (1u << (n + 1)) - 1) continue;  // drop the top cell
    std::vector<int> verts;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) verts.push_back(i);
    auto subset_id = [](const std::vector<int>& s) {
      std::string id;
      for (int v : s) id += std::to_string(v + 1);
      return id;
    };
    CWCell c;
    c.id = subset_id(verts);
    c.dim = static_cast<int>(verts.size()) - 1;
    if (verts.size() > 1)
      for (size_t k = 0; k < verts.size(); ++k) {
        std::vector<int> facet;
        for (size_t j = 0; j < verts.size(); ++j)
          if (j != k) facet.push_back(verts[j]);
        c.facets.push_back(subset_id(facet));
      }
    cells.push_back(std::move(c));
  }
  return RegularCWComplex::from_cells(std::move(cells));
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 5;
  if (argc > 1) max_n = std::atoi(argv[1]);
  const Field f;

  std::printf("threads available: %d\n\n", par::thread_cap());
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  for (int n = 3; n <= max_n; ++n) {
    RegularCWComplex x = simplex_boundary(n);
    FacePoset fp = face_poset(x);

    auto t0 = std::chrono::steady_clock::now();
    IntervalTable serial = interval_homology_table_serial(fp.poset, f);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    IntervalTable parallel = interval_homology_table(fp.poset, f);
    double parallel_ms = ms_since(t0);

    int betti_serial = 0, betti_parallel = 0;
    for (int i = 0; i < fp.poset.size(); ++i) {
      if (serial.by_element[i]) betti_serial += serial.by_element[i]->hom.total();
      if (parallel.by_element[i])
        betti_parallel += parallel.by_element[i]->hom.total();
    }
    if (betti_serial != betti_parallel) {
      std::fprintf(stderr, "kernel results disagree\n");
      return 1;
    }

    std::string name = "interval table, ∂Δ^" + std::to_string(n);
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / (parallel_ms > 0 ? parallel_ms : 1));
  }

  {
    std::vector<Monomial> gens;
    const int vars = std::min(max_n + 1, 6);
    for (int i = 0; i < vars; ++i) {
      std::vector<long long> e(vars, 0);
      e[i] = 1;
      e[(i + 1) % vars] = 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal = MonomialIdeal::minimalize(vars, gens);
    MultigradedComplex taylor = homogenize_cellular(taylor_complex(ideal), f);

    auto t0 = std::chrono::steady_clock::now();
    ResolutionVerdict serial = is_resolution_serial(taylor, ideal, f);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    ResolutionVerdict parallel = is_resolution(taylor, ideal, f);
    double parallel_ms = ms_since(t0);

    if (serial.resolves != parallel.resolves) {
      std::fprintf(stderr, "strand kernels disagree\n");
      return 1;
    }
    std::string name =
        "strand sweep, Taylor on " + std::to_string(vars) + " gens";
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / (parallel_ms > 0 ? parallel_ms : 1));
  }
  return 0;
}
