#include "cwres/poset.hpp"

#include <algorithm>
#include <queue>

#include "cwres/errors.hpp"
#include "cwres/parallel.hpp"
#include "cwres/simplicial.hpp"

namespace cwres {

namespace {

// Kahn's algorithm, smallest index first; throws on a cycle.
std::vector<int> topological_order(int n,
                                   const std::vector<std::vector<int>>& up) {
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : up[x]) ++indeg[y];
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  std::vector<int> order;
  while (!q.empty()) {
    int x = q.top();
    q.pop();
    order.push_back(x);
    for (int y : up[x])
      if (--indeg[y] == 0) q.push(y);
  }
  if (static_cast<int>(order.size()) != n)
    throw Error("CycleDetected", "cover relation contains a cycle");
  return order;
}

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   std::vector<std::pair<std::string, std::string>> covers,
                   std::map<std::string, std::string> labels) {
  Poset p;
  p.ids_ = std::move(elements);
  p.labels_ = std::move(labels);
  for (int i = 0; i < p.size(); ++i) {
    if (p.index_.count(p.ids_[i]))
      throw Error("DuplicateId", "element '" + p.ids_[i] + "' repeated");
    p.index_[p.ids_[i]] = i;
  }
  const int n = p.size();
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : covers) {
    auto li = p.index_.find(lo), hi_it = p.index_.find(hi);
    if (li == p.index_.end())
      throw Error("UnknownElement", "cover endpoint '" + lo + "'");
    if (hi_it == p.index_.end())
      throw Error("UnknownElement", "cover endpoint '" + hi + "'");
    int a = li->second, b = hi_it->second;
    if (a == b)
      throw Error("CycleDetected", "cover from '" + lo + "' to itself");
    if (adj[a][b]) continue;  // repeated cover pair is harmless
    adj[a][b] = true;
    p.covers_.emplace_back(a, b);
    p.up_[a].push_back(b);
    p.down_[b].push_back(a);
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  for (auto& v : p.down_) std::sort(v.begin(), v.end());

  const std::vector<int> topo = topological_order(n, p.up_);

  // reachability closure, propagated in reverse topological order
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    p.leq_[x][x] = true;
    for (int y : p.up_[x])
      for (int z = 0; z < n; ++z)
        if (p.leq_[y][z]) p.leq_[x][z] = true;
  }

  // Hasse minimality: a cover (a,b) must not be implied by a path of
  // length >= 2 through other covers.
  for (const auto& [a, b] : p.covers_)
    for (int m : p.up_[a])
      if (m != b && p.leq_[m][b])
        throw Error("TransitiveCover", "cover " + p.ids_[a] + " < " +
                                           p.ids_[b] + " implied via " +
                                           p.ids_[m]);
  return p;
}

int Poset::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw Error("UnknownElement", "no element '" + id + "'");
  return it->second;
}

std::optional<int> Poset::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Poset::least() const {
  for (int i = 0; i < size(); ++i) {
    bool below_all = true;
    for (int j = 0; j < size() && below_all; ++j) below_all = leq_[i][j];
    if (below_all) return i;
  }
  return std::nullopt;
}

std::vector<int> Poset::linear_extension() const {
  return topological_order(size(), up_);
}

Poset Poset::induced(const std::vector<int>& members) const {
  std::vector<std::string> els;
  for (int m : members) els.push_back(ids_[m]);
  std::vector<std::pair<std::string, std::string>> cov;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      int a = members[i], b = members[j];
      if (!less(a, b)) continue;
      bool is_cover = true;
      for (int m : members)
        if (less(a, m) && less(m, b)) {
          is_cover = false;
          break;
        }
      if (is_cover) cov.emplace_back(ids_[a], ids_[b]);
    }
  std::map<std::string, std::string> lbl;
  for (int m : members) {
    auto it = labels_.find(ids_[m]);
    if (it != labels_.end()) lbl[it->first] = it->second;
  }
  return build(std::move(els), std::move(cov), std::move(lbl));
}

Poset Poset::open_interval(int a, int b) const {
  if (!less(a, b))
    throw Error("NotComparable",
                "'" + ids_[a] + "' is not below '" + ids_[b] + "'");
  std::vector<int> members;
  for (int x = 0; x < size(); ++x)
    if (less(a, x) && less(x, b)) members.push_back(x);
  return induced(members);
}

Poset Poset::half_closed_interval(int a, int b) const {
  if (!less(a, b))
    throw Error("NotComparable",
                "'" + ids_[a] + "' is not below '" + ids_[b] + "'");
  std::vector<int> members;
  for (int x = 0; x < size(); ++x)
    if (less(a, x) && leq(x, b)) members.push_back(x);
  return induced(members);
}

RankResult compute_rank(const Poset& p) {
  auto zero = p.least();
  if (!zero) throw Error("NoLeastElement", "poset has no least element");
  const int n = p.size();
  std::vector<int> rank(n, -1);
  std::vector<int> parent(n, -1);
  rank[*zero] = 0;
  RankResult res;
  auto chain_to = [&](int x) {
    std::vector<std::string> chain;
    for (int c = x; c != -1; c = parent[c]) chain.push_back(p.id(c));
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  for (int x : p.linear_extension()) {
    if (rank[x] < 0) continue;  // cannot happen with a least element
    for (int y : p.upper_covers(x)) {
      if (rank[y] < 0) {
        rank[y] = rank[x] + 1;
        parent[y] = x;
      } else if (rank[y] != rank[x] + 1) {
        RankWitness w;
        w.element = p.id(y);
        w.chain1 = chain_to(y);
        w.chain2 = chain_to(x);
        w.chain2.push_back(p.id(y));
        res.ranked = false;
        res.witness = std::move(w);
        return res;
      }
    }
  }
  res.ranked = true;
  res.rank = std::move(rank);
  return res;
}

std::optional<std::string> CWPosetReport::witness() const {
  if (!failures.empty()) return failures.front();
  if (thin_witness) return thin_witness->first + " < " + thin_witness->second;
  return std::nullopt;
}

CWPosetReport is_cw_poset(const Poset& p, const Field& f, bool parallel) {
  CWPosetReport rep;
  auto zero = p.least();
  rep.least_element = zero.has_value();
  rep.nontrivial = p.size() > 1;
  if (!rep.least_element || !rep.nontrivial) return rep;

  RankResult rr = compute_rank(p);
  rep.ranked = rr.ranked;
  if (!rep.ranked) return rep;
  const auto& rank = rr.rank;

  // thinness first: a cheap necessary condition before any homology
  rep.thin = true;
  for (int a = 0; a < p.size() && *rep.thin; ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.less(a, b) || rank[b] != rank[a] + 2) continue;
      int middles = 0;
      for (int m = 0; m < p.size(); ++m)
        if (p.less(a, m) && p.less(m, b)) ++middles;
      if (middles != 2) {
        rep.thin = false;
        rep.thin_witness = {p.id(a), p.id(b)};
        break;
      }
    }

  // homology-sphere proxy per element above 0̂
  std::vector<int> members;
  for (int x = 0; x < p.size(); ++x)
    if (x != *zero) members.push_back(x);
  rep.verdicts.resize(members.size());
  auto job = [&](int k) {
    int x = members[k];
    SimplicialComplex delta = order_complex_over(
        p, [&](int e) { return p.less(*zero, e) && p.less(e, x); });
    HomologyResult h = homology(delta.reduced_chain_complex(f), f);
    CWPosetReport::ElementVerdict v;
    v.id = p.id(x);
    v.expected_degree = rank[x] - 2;
    v.betti = h.betti_map();
    v.sphere = (v.betti.size() == 1 && v.betti.count(v.expected_degree) &&
                v.betti.at(v.expected_degree) == 1);
    rep.verdicts[k] = std::move(v);
  };
  if (parallel)
    par::parallel_for(static_cast<int>(members.size()), job);
  else
    par::serial_for(static_cast<int>(members.size()), job);
  for (const auto& v : rep.verdicts)
    if (!v.sphere) rep.failures.push_back(v.id);
  return rep;
}

}  // namespace cwres
