#ifndef CWRES_TESTS_CORPUS_HPP
#define CWRES_TESTS_CORPUS_HPP

// Corpus of small simplicial complexes: every complex on a full vertex set
// of size <= 4 (enumerated as down-closed families above the vertices),
// topped up with seeded random complexes on 5 vertices. Each entry converts
// to a RegularCWComplex whose cells are the nonempty faces.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cwres/cw.hpp"

namespace corpus {

using Face = std::vector<int>;

struct Complex {
  int vertices = 0;
  std::vector<Face> faces;  // all nonempty faces, sorted
  std::string name;
};

inline std::vector<Face> subsets_of_size_at_least_two(int k) {
  std::vector<Face> subs;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    Face f;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) f.push_back(i + 1);
    subs.push_back(std::move(f));
  }
  std::sort(subs.begin(), subs.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return subs;
}

// all complexes with vertex set exactly {1..k}
inline std::vector<Complex> all_on_exactly(int k) {
  const auto subs = subsets_of_size_at_least_two(k);
  const int n = static_cast<int>(subs.size());
  std::vector<Complex> out;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    // down-closure: every chosen face's sub-faces of size >= 2 are chosen
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask & (1ull << i))) continue;
      const Face& f = subs[i];
      if (f.size() == 2) continue;
      for (size_t drop = 0; drop < f.size() && closed; ++drop) {
        Face sub;
        for (size_t j = 0; j < f.size(); ++j)
          if (j != drop) sub.push_back(f[j]);
        int idx = static_cast<int>(
            std::find(subs.begin(), subs.end(), sub) - subs.begin());
        if (!(mask & (1ull << idx))) closed = false;
      }
    }
    if (!closed) continue;
    Complex c;
    c.vertices = k;
    for (int v = 1; v <= k; ++v) c.faces.push_back({v});
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) c.faces.push_back(subs[i]);
    c.name = "all" + std::to_string(k) + "_" + std::to_string(mask);
    out.push_back(std::move(c));
  }
  return out;
}

// deterministic linear congruential generator
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed) {}
  unsigned next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned>(state >> 33);
  }
  int uniform(int n) { return static_cast<int>(next() % n); }
};

inline std::vector<Complex> random_on_five(int how_many, unsigned long long seed) {
  std::vector<Complex> out;
  std::set<std::set<Face>> seen;
  Rng rng(seed);
  while (static_cast<int>(out.size()) < how_many) {
    std::set<Face> faces;
    for (int v = 1; v <= 5; ++v) faces.insert({v});
    const int extra = 1 + rng.uniform(4);
    for (int t = 0; t < extra; ++t) {
      const int size = 2 + rng.uniform(3);  // facets of 2..4 vertices
      std::vector<int> pool = {1, 2, 3, 4, 5};
      Face f;
      for (int s = 0; s < size; ++s) {
        int pick = rng.uniform(static_cast<int>(pool.size()));
        f.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
      std::sort(f.begin(), f.end());
      // close downward
      std::vector<Face> stack = {f};
      while (!stack.empty()) {
        Face g = stack.back();
        stack.pop_back();
        if (g.empty() || !faces.insert(g).second) continue;
        if (g.size() > 1)
          for (size_t dropped = 0; dropped < g.size(); ++dropped) {
            Face sub;
            for (size_t j = 0; j < g.size(); ++j)
              if (j != dropped) sub.push_back(g[j]);
            stack.push_back(sub);
          }
      }
    }
    if (!seen.insert(faces).second) continue;
    Complex c;
    c.vertices = 5;
    c.faces.assign(faces.begin(), faces.end());
    std::sort(c.faces.begin(), c.faces.end(),
              [](const Face& a, const Face& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    c.name = "rand5_" + std::to_string(out.size());
    out.push_back(std::move(c));
  }
  return out;
}

// the acceptance corpus: everything on <= 4 vertices plus random complexes
// on 5 vertices up to at least `minimum` entries
inline std::vector<Complex> build(int minimum = 200) {
  std::vector<Complex> out;
  for (int k = 1; k <= 4; ++k) {
    auto all = all_on_exactly(k);
    out.insert(out.end(), all.begin(), all.end());
  }
  const int missing = std::max(25, minimum - static_cast<int>(out.size()));
  auto extra = random_on_five(missing, 20260808ULL);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

inline std::string face_id(const Face& f) {
  std::string id;
  for (int v : f) id += std::to_string(v);
  return id;
}

inline cwres::RegularCWComplex to_cw(const Complex& c) {
  std::vector<cwres::CWCell> cells;
  for (const auto& f : c.faces) {
    cwres::CWCell cell;
    cell.id = face_id(f);
    cell.dim = static_cast<int>(f.size()) - 1;
    if (f.size() > 1)
      for (size_t k = 0; k < f.size(); ++k) {
        Face sub;
        for (size_t j = 0; j < f.size(); ++j)
          if (j != k) sub.push_back(f[j]);
        cell.facets.push_back(face_id(sub));
      }
    cells.push_back(std::move(cell));
  }
  return cwres::RegularCWComplex::from_cells(std::move(cells));
}

}  // namespace corpus

#endif
