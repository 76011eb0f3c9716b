#include "cwres/d_construction.hpp"

#include <algorithm>

#include "cwres/errors.hpp"
#include "cwres/parallel.hpp"

namespace cwres {

namespace {

IntervalTable build_table(const Poset& p, const Field& f, bool parallel) {
  auto zero = p.least();
  if (!zero) throw Error("NoLeastElement", "poset has no least element");
  IntervalTable t;
  t.zero = *zero;
  t.by_element.resize(p.size());
  std::vector<int> members;
  for (int x = 0; x < p.size(); ++x)
    if (x != t.zero) members.push_back(x);
  auto job = [&](int k) {
    int alpha = members[k];
    IntervalHomology ih;
    ih.complex = order_complex_over(p, [&](int e) {
      return e != t.zero && p.less(e, alpha);
    });
    ih.chain = ih.complex.reduced_chain_complex(f);
    ih.hom = homology_unchecked(ih.chain, f);
    t.by_element[alpha] = std::move(ih);
  };
  if (parallel)
    par::parallel_for(static_cast<int>(members.size()), job);
  else
    par::serial_for(static_cast<int>(members.size()), job);
  return t;
}

}  // namespace

IntervalTable interval_homology_table(const Poset& p, const Field& f) {
  return build_table(p, f, true);
}

IntervalTable interval_homology_table_serial(const Poset& p, const Field& f) {
  return build_table(p, f, false);
}

IntervalContext::IntervalContext(const Poset& p, const Field& f, bool parallel)
    : p_(&p), f_(f), table_(build_table(p, f, parallel)) {
  ext_ = p.linear_extension();
  pos_.resize(p.size());
  for (int i = 0; i < p.size(); ++i) pos_[ext_[i]] = i;
}

const IntervalHomology& IntervalContext::delta(int alpha) const {
  if (alpha == table_.zero || !table_.by_element[alpha])
    throw Error("Internal", "no interval data for element " + p_->id(alpha));
  return *table_.by_element[alpha];
}

int IntervalContext::top_of(const std::vector<int>& face) const {
  if (face.empty()) throw Error("Internal", "top of empty chain");
  return ext_[face.back()];
}

int IntervalContext::assign_cover(int alpha, const std::vector<int>& face,
                                  CoverStrategy s) const {
  const int top = top_of(face);
  int best = -1;
  for (int lam : p_->lower_covers(alpha)) {
    if (!p_->leq(top, lam)) continue;
    if (best < 0) {
      best = lam;
      continue;
    }
    const bool smaller = p_->id(lam) < p_->id(best);
    if ((s == CoverStrategy::SmallestId) == smaller) best = lam;
  }
  if (best < 0)
    throw Error("Internal", "no cover of " + p_->id(alpha) + " above " +
                                p_->id(top));
  return best;
}

std::map<std::vector<int>, int> IntervalContext::cover_assignment(
    int alpha, CoverStrategy s) const {
  const IntervalHomology& ih = delta(alpha);
  std::map<std::vector<int>, int> out;
  for (int d = 0; d <= ih.complex.dim(); ++d)
    for (const auto& face : ih.complex.faces(d))
      out[face] = assign_cover(alpha, face, s);
  return out;
}

std::vector<Rational> IntervalContext::reinterpret_chain(
    int alpha, int lambda, const std::vector<Rational>& chain,
    int degree) const {
  const IntervalHomology& src = delta(alpha);
  const IntervalHomology& dst = delta(lambda);
  std::vector<Rational> out(dst.chain.dim(degree));
  if (degree == -1) {
    // both complexes share the single empty face
    if (!chain.empty()) out[0] = chain[0];
    return out;
  }
  const auto& faces = src.complex.faces(degree);
  for (size_t idx = 0; idx < chain.size(); ++idx) {
    if (chain[idx].is_zero()) continue;
    const auto& face = faces[idx];
    int j = dst.complex.face_index(degree, face);
    if (j < 0)
      throw Error("Internal", "chain leaves the target interval at face " +
                                  src.complex.face_label(face));
    out[j] = chain[idx];
  }
  return out;
}

std::vector<Rational> IntervalContext::connecting_map(
    int alpha, int lambda, const std::vector<Rational>& cycle,
    int cycle_degree, CoverStrategy s) const {
  const IntervalHomology& src = delta(alpha);
  if (static_cast<int>(cycle.size()) != src.chain.dim(cycle_degree))
    throw Error("DimensionMismatch", "cycle length != chain dimension");

  if (cycle_degree == -1) {
    // border case: φ_1 is the identity on H̃_{-1}
    if (lambda != table_.zero)
      throw Error("Internal", "border connecting map expects λ = 0̂");
    auto coords = src.hom.expand(-1, cycle, f_);
    if (!coords)
      throw Error("NotACycle", "class not expressible in H̃_{-1}");
    return *coords;
  }

  const bool lambda_covers =
      std::find(p_->lower_covers(alpha).begin(), p_->lower_covers(alpha).end(),
                lambda) != p_->lower_covers(alpha).end();
  if (!lambda_covers || lambda == table_.zero)
    throw Error("BadInput",
                "'" + p_->id(lambda) + "' is not a lower cover of '" +
                    p_->id(alpha) + "' above 0̂");

  // cycle check
  for (const auto& r : apply(src.chain.diff(cycle_degree), cycle, f_))
    if (!r.is_zero()) throw Error("NotACycle", "class representative is not a cycle");

  // the λ-part of the cycle under the cover assignment
  std::vector<Rational> part(cycle.size());
  const auto& faces = src.complex.faces(cycle_degree);
  for (size_t idx = 0; idx < cycle.size(); ++idx) {
    if (cycle[idx].is_zero()) continue;
    if (assign_cover(alpha, faces[idx], s) == lambda) part[idx] = cycle[idx];
  }

  // δ([z]) is represented by d(z_λ), supported in Δ_{α,λ} ⊆ Δ_λ
  std::vector<Rational> boundary =
      apply(src.chain.diff(cycle_degree), part, f_);
  std::vector<Rational> in_lambda =
      reinterpret_chain(alpha, lambda, boundary, cycle_degree - 1);

  const IntervalHomology& dst = delta(lambda);
  auto coords = dst.hom.expand(cycle_degree - 1, in_lambda, f_);
  if (!coords)
    throw Error("CoordinateSolveFailed",
                "connecting image is not a cycle of Δ_" + p_->id(lambda));
  return *coords;
}

Matrix IntervalContext::phi_component(int alpha, int lambda, int hdeg,
                                      CoverStrategy s) const {
  const IntervalHomology& src = delta(alpha);
  const int cols = src.hom.betti(hdeg);
  int rows;
  if (hdeg == -1)
    rows = 1;  // the D_0 summand
  else
    rows = delta(lambda).hom.betti(hdeg - 1);
  Matrix m(rows, cols);
  for (int k = 0; k < cols; ++k) {
    auto col = connecting_map(alpha, lambda, src.hom.at(hdeg).cycles[k], hdeg, s);
    for (int r = 0; r < rows && r < static_cast<int>(col.size()); ++r)
      m.at(r, k) = col[r];
  }
  return m;
}

std::vector<int> DSequence::dims() const {
  std::vector<int> d;
  for (int i = cc.lo(); i <= cc.hi(); ++i) d.push_back(cc.dim(i));
  return d;
}

const DSummand* DSequence::summand_at(int degree, int element) const {
  if (degree < 0 || degree >= static_cast<int>(summands.size())) return nullptr;
  for (const auto& s : summands[degree])
    if (s.element == element) return &s;
  return nullptr;
}

DSequence d_construction(const IntervalContext& ctx, CoverStrategy s) {
  const Poset& p = ctx.poset();
  const Field& f = ctx.field();
  const int zero = ctx.zero();

  int hi = 0;
  for (int alpha = 0; alpha < p.size(); ++alpha) {
    if (alpha == zero) continue;
    const auto& hom = ctx.delta(alpha).hom;
    for (int h = hom.lo(); h <= hom.hi(); ++h)
      if (hom.betti(h) > 0) hi = std::max(hi, h + 2);
  }

  DSequence d;
  d.summands.resize(hi + 1);
  std::vector<int> dims(hi + 1, 0);
  std::vector<std::vector<std::string>> labels(hi + 1);

  dims[0] = 1;
  labels[0] = {p.id(zero)};
  d.summands[0].push_back(DSummand{zero, -2, 0, 1});

  for (int alpha = 0; alpha < p.size(); ++alpha) {
    if (alpha == zero) continue;
    const auto& hom = ctx.delta(alpha).hom;
    for (int h = hom.lo(); h <= hom.hi(); ++h) {
      const int b = hom.betti(h);
      if (b == 0) continue;
      const int degree = h + 2;
      DSummand sm{alpha, h, dims[degree], b};
      dims[degree] += b;
      for (int k = 0; k < b; ++k)
        labels[degree].push_back(
            b == 1 ? p.id(alpha) : p.id(alpha) + "#" + std::to_string(k));
      d.summands[degree].push_back(sm);
    }
  }

  std::vector<Matrix> diffs;
  for (int degree = 1; degree <= hi; ++degree) {
    Matrix m(dims[degree - 1], dims[degree]);
    for (const auto& sm : d.summands[degree]) {
      if (sm.hdeg == -1) {
        // atom summand: φ_1 is the identity onto D_0
        for (int k = 0; k < sm.count; ++k)
          m.at(0, sm.offset + k) = f.from_int(1);
        continue;
      }
      for (int lam : p.lower_covers(sm.element)) {
        if (lam == zero) continue;
        const DSummand* target = d.summand_at(degree - 1, lam);
        if (!target || target->count == 0) continue;
        Matrix block = ctx.phi_component(sm.element, lam, sm.hdeg, s);
        for (int r = 0; r < target->count; ++r)
          for (int c = 0; c < sm.count; ++c)
            m.at(target->offset + r, sm.offset + c) = block.at(r, c);
      }
    }
    diffs.push_back(std::move(m));
  }

  d.cc = ChainComplex(0, std::move(dims), std::move(diffs), std::move(labels));
  d.witness = d.cc.verify(f);
  d.is_complex = !d.witness.has_value();
  return d;
}

DSequence d_construction(const Poset& p, const Field& f, CoverStrategy s,
                         bool parallel) {
  IntervalContext ctx(p, f, parallel);
  return d_construction(ctx, s);
}

bool compare_complexes(const ChainComplex& c, const ChainComplex& d, int shift,
                       const Field& f) {
  if (c.verify(f) || d.verify(f))
    throw Error("NotAComplex", "compare_complexes requires verified complexes");
  const int lo = std::min(c.lo(), d.lo() - shift) - 1;
  const int hi = std::max(c.hi(), d.hi() - shift) + 1;
  for (int i = lo; i <= hi; ++i) {
    if (c.dim(i) != d.dim(i + shift)) return false;
    if (rank(c.diff(i), f) != rank(d.diff(i + shift), f)) return false;
  }
  return true;
}

namespace {

std::vector<int> require_ranks(const Poset& p) {
  RankResult rr = compute_rank(p);
  if (!rr.ranked)
    throw Error("NotRanked", "poset is not ranked",
                rr.witness ? rr.witness->element : "");
  return rr.rank;
}

SimplicialComplex filtration_complex(const Poset& p,
                                     const std::vector<int>& rank, int zero,
                                     int alpha, int j) {
  const int target = rank[alpha] - j;
  std::vector<int> ext = p.linear_extension();
  std::vector<std::string> universe;
  for (int i : ext) universe.push_back(p.id(i));
  SimplicialComplex out(universe);
  for (int gamma = 0; gamma < p.size(); ++gamma) {
    if (gamma == zero || rank[gamma] != target || !p.leq(gamma, alpha))
      continue;
    out = out.unioned(order_complex_over(
        p, [&](int e) { return e != zero && p.leq(e, gamma); }));
  }
  return out;
}

}  // namespace

SimplicialComplex skeletal_filtration(const Poset& p, int alpha, int j) {
  if (j < 0) throw Error("BadInput", "filtration index must be >= 0");
  auto zero = p.least();
  if (!zero) throw Error("NoLeastElement", "poset has no least element");
  return filtration_complex(p, require_ranks(p), *zero, alpha, j);
}

FiltrationChecker::FiltrationChecker(const Poset& p, const Field& f,
                                     CoverStrategy s)
    : ctx_(p, f), strategy_(s), rank_(require_ranks(p)) {}

SimplicialComplex FiltrationChecker::filtration(int alpha, int j) const {
  return filtration_complex(ctx_.poset(), rank_, ctx_.zero(), alpha, j);
}

bool FiltrationChecker::check(int alpha, int j) const {
  const Poset& p = ctx_.poset();
  const Field& f = ctx_.field();
  if (alpha == ctx_.zero()) return true;

  SimplicialComplex k0 = filtration(alpha, j);
  SimplicialComplex k1 = filtration(alpha, j + 1);
  SimplicialComplex k2 = filtration(alpha, j + 2);

  ChainComplex c0 = k0.reduced_chain_complex(f);

  SubcomplexSelection sub1;
  sub1[-1].insert("{}");
  for (int dd = 0; dd <= k1.dim(); ++dd)
    for (const auto& face : k1.faces(dd)) sub1[dd].insert(k1.face_label(face));
  HomologyResult rel = relative_homology(c0, sub1, f);
  ChainComplex q = quotient_complex(c0, sub1);

  const int top_rank = rank_[alpha] - j;

  for (int i = 1; i <= rel.hi(); ++i) {
    for (const auto& rep : rel.at(i).cycles) {
      // lift the relative class to a chain of Δ^{(j)}
      std::vector<Rational> w(c0.dim(i));
      for (size_t k = 0; k < rep.size(); ++k) {
        if (rep[k].is_zero()) continue;
        int idx = c0.label_index(i, q.labels(i)[k]);
        if (idx < 0) throw Error("Internal", "lost quotient label");
        w[idx] = rep[k];
      }

      // Route A: connecting map of the triple, then reindex over tops of
      // rank top_rank - 1.
      std::map<int, std::vector<Rational>> route_a;
      {
        std::vector<Rational> u = apply(c0.diff(i), w, f);
        std::map<int, std::vector<Rational>> blocks;
        const auto& faces = k0.faces(i - 1);
        for (size_t idx = 0; idx < u.size(); ++idx) {
          if (u[idx].is_zero()) continue;
          const auto& face = faces[idx];
          if (!k1.contains(face))
            throw Error("Internal", "d(w) is not supported in Δ^{(j+1)}");
          int t = ctx_.top_of(face);
          if (rank_[t] != top_rank - 1) {
            if (!k2.contains(face))
              throw Error("Internal", "unexpected face outside Δ^{(j+2)}");
            continue;  // relatively zero
          }
          auto& block = blocks[t];
          if (block.empty()) block.assign(ctx_.delta(t).chain.dim(i - 2), {});
          std::vector<int> hat(face.begin(), face.end() - 1);
          int pos;
          if (hat.empty())
            pos = 0;  // the empty face at degree -1
          else {
            pos = ctx_.delta(t).complex.face_index(i - 2, hat);
            if (pos < 0) throw Error("Internal", "reindexed face missing");
          }
          Rational sign = f.from_int((i - 1) % 2 == 0 ? 1 : -1);
          block[pos] = f.add(block[pos], f.mul(sign, u[idx]));
        }
        for (auto& [t, chain] : blocks) {
          auto coords = ctx_.delta(t).hom.expand(i - 2, chain, f);
          if (!coords)
            throw Error("CoordinateSolveFailed",
                        "route A block is not a cycle at " + p.id(t));
          route_a[t] = *coords;
        }
      }

      // Route B: reindex over tops of rank top_rank, then apply φ.
      std::map<int, std::vector<Rational>> route_b;
      {
        std::map<int, std::vector<Rational>> blocks;
        const auto& faces = k0.faces(i);
        for (size_t idx = 0; idx < w.size(); ++idx) {
          if (w[idx].is_zero()) continue;
          const auto& face = faces[idx];
          int beta = ctx_.top_of(face);
          if (rank_[beta] != top_rank)
            throw Error("Internal", "relative chain with unexpected top");
          auto& block = blocks[beta];
          if (block.empty())
            block.assign(ctx_.delta(beta).chain.dim(i - 1), {});
          std::vector<int> hat(face.begin(), face.end() - 1);
          int pos = ctx_.delta(beta).complex.face_index(i - 1, hat);
          if (pos < 0) throw Error("Internal", "reindexed face missing");
          Rational sign = f.from_int(i % 2 == 0 ? 1 : -1);
          block[pos] = f.add(block[pos], f.mul(sign, w[idx]));
        }
        for (auto& [beta, chain] : blocks) {
          auto coords = ctx_.delta(beta).hom.expand(i - 1, chain, f);
          if (!coords)
            throw Error("CoordinateSolveFailed",
                        "route B block is not a cycle at " + p.id(beta));
          if (std::all_of(coords->begin(), coords->end(),
                          [](const Rational& r) { return r.is_zero(); }))
            continue;
          for (int gamma : p.lower_covers(beta)) {
            if (gamma == ctx_.zero()) continue;
            const int rows = ctx_.delta(gamma).hom.betti(i - 2);
            if (rows == 0) continue;
            Matrix block_m =
                ctx_.phi_component(beta, gamma, i - 1, strategy_);
            auto& acc = route_b[gamma];
            if (acc.empty()) acc.assign(rows, {});
            for (int r = 0; r < rows; ++r)
              for (size_t c = 0; c < coords->size(); ++c)
                acc[r] = f.add(acc[r],
                               f.mul(block_m.at(r, static_cast<int>(c)),
                                     (*coords)[c]));
          }
        }
      }

      // compare (missing blocks are zero)
      auto nonzero = [](const std::vector<Rational>& v) {
        return std::any_of(v.begin(), v.end(),
                           [](const Rational& r) { return !r.is_zero(); });
      };
      std::set<int> keys;
      for (const auto& [t, v] : route_a)
        if (nonzero(v)) keys.insert(t);
      for (const auto& [t, v] : route_b)
        if (nonzero(v)) keys.insert(t);
      for (int t : keys) {
        auto ita = route_a.find(t);
        auto itb = route_b.find(t);
        const int n = ctx_.delta(t).hom.betti(i - 2);
        std::vector<Rational> va = ita == route_a.end()
                                       ? std::vector<Rational>(n)
                                       : ita->second;
        std::vector<Rational> vb = itb == route_b.end()
                                       ? std::vector<Rational>(n)
                                       : itb->second;
        if (va != vb) return false;
      }
    }
  }
  return true;
}

bool check_filtration_square(const Poset& p, int alpha, int j, const Field& f) {
  return FiltrationChecker(p, f).check(alpha, j);
}

}  // namespace cwres
