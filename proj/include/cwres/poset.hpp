#ifndef CWRES_POSET_HPP
#define CWRES_POSET_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwres/field.hpp"

namespace cwres {

// Finite poset given by its Hasse diagram. Build validates that the cover
// digraph is acyclic, that no cover pair is implied by transitivity, and
// that ids are distinct. Element order is the input order and fixes every
// deterministic basis downstream.
class Poset {
 public:
  static Poset build(std::vector<std::string> elements,
                     std::vector<std::pair<std::string, std::string>> covers,
                     std::map<std::string, std::string> labels = {});

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index(const std::string& id) const;  // UnknownElement if absent
  std::optional<int> find(const std::string& id) const;

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }

  bool less(int a, int b) const { return leq_[a][b] && a != b; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  std::optional<int> least() const;

  // Elements x with a < x < b (resp. a < x <= b), induced covers recomputed.
  Poset open_interval(int a, int b) const;
  Poset half_closed_interval(int a, int b) const;

  // Deterministic linear extension (Kahn's algorithm, smallest index first).
  std::vector<int> linear_extension() const;

  const std::map<std::string, std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::string, std::string> labels_;

  Poset induced(const std::vector<int>& members) const;
};

struct RankWitness {
  std::string element;
  std::vector<std::string> chain1, chain2;  // maximal chains of unequal length
};

struct RankResult {
  bool ranked = false;
  std::vector<int> rank;  // by element index, when ranked
  std::optional<RankWitness> witness;
};

// Requires a least element (NoLeastElement otherwise). rank(0̂) = 0 and rank
// increases by exactly one along covers; when no such function exists the
// witness carries two maximal chains of different lengths to one element.
RankResult compute_rank(const Poset& p);

// CW-poset test via the homology-sphere proxy: P has 0̂, is nontrivial and
// ranked, every length-2 interval has exactly two middle elements, and each
// open interval (0̂,x) has the reduced homology of a sphere of dimension
// rank(x)-2. Certifies homology spheres only; sphere recognition proper is
// undecidable.
struct CWPosetReport {
  bool least_element = false;
  bool nontrivial = false;
  bool ranked = false;
  std::optional<bool> thin;  // only meaningful when ranked
  std::optional<std::pair<std::string, std::string>> thin_witness;

  struct ElementVerdict {
    std::string id;
    int expected_degree = 0;  // rank - 2
    bool sphere = false;
    std::map<int, int> betti;
  };
  std::vector<ElementVerdict> verdicts;  // elements above 0̂, input order
  std::vector<std::string> failures;     // ids failing the sphere proxy

  bool is_cw() const {
    return least_element && nontrivial && ranked && thin.value_or(false) &&
           failures.empty();
  }
  std::optional<std::string> witness() const;
};

CWPosetReport is_cw_poset(const Poset& p, const Field& f,
                          bool parallel = true);

}  // namespace cwres

#endif
