#ifndef CWRES_RESOLUTION_HPP
#define CWRES_RESOLUTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwres/cw.hpp"
#include "cwres/d_construction.hpp"
#include "cwres/ideal.hpp"

namespace cwres {

struct MgEntry {
  int row = 0, col = 0;
  Rational scalar;
  Monomial mono;
};

// Complex of free multigraded modules: each basis element carries a
// monomial multidegree and each differential entry a scalar-monomial pair.
// Homogeneity means row-mdeg * entry-mono = col-mdeg for every entry.
struct MultigradedComplex {
  int vars = 0;
  std::vector<std::vector<Monomial>> mdegs;       // per homological degree
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<MgEntry>> diffs;        // diffs[d]: degree d -> d-1;
                                                  // diffs[0] stays empty

  int length() const { return static_cast<int>(mdegs.size()) - 1; }
  std::vector<int> ranks() const;
  ChainComplex scalar_frame(const Field& f) const;
  std::optional<std::string> homogeneity_violation() const;
  std::optional<ComplexWitness> verify(const Field& f) const;
};

// Homogenization of the cellular chain complex: degree -1 becomes the rank
// one module at multidegree 1 and ∂σ = Σ c_{σ,τ} (m_σ/m_τ) τ.
MultigradedComplex homogenize_cellular(const RegularCWComplex& x,
                                       const Field& f);

// Homogenization of D(P): basis multidegrees are η(α), entries pick up
// x^{η(α)-η(λ)}, and the border differential is x^{η(λ)} times the identity.
// η is given per poset element index and must be divisibility-monotone.
MultigradedComplex homogenize_d(const DSequence& d, const Poset& p,
                                const std::vector<Monomial>& eta,
                                const Field& f);

// Bayer-Sturmfels criterion over the finite test set L_N: for each lattice
// multidegree b, the b-strand must have homology k in degree 0 when
// x^b ∉ N (that is, b = 1) and vanish identically otherwise.
struct ResolutionVerdict {
  bool resolves = false;
  std::vector<Monomial> failing;
};

ResolutionVerdict is_resolution(const MultigradedComplex& fx,
                                const MonomialIdeal& ideal, const Field& f,
                                bool parallel = true);
ResolutionVerdict is_resolution_serial(const MultigradedComplex& fx,
                                       const MonomialIdeal& ideal,
                                       const Field& f);

// No nonzero entry carries monomial 1.
bool is_minimal(const MultigradedComplex& fx);

struct LatticeLinearVerdict {
  bool lattice_linear = false;
  std::vector<std::string> witnesses;  // offending entries, human-readable
};

// Every nonzero entry must connect multidegrees m' ⋖ m that form a cover in
// the lcm-lattice of the ideal.
LatticeLinearVerdict is_lattice_linear(const MultigradedComplex& fx,
                                       const MonomialIdeal& ideal);

// Multigraded Betti numbers of R/N from lcm-lattice interval homology:
// β_{i,m} = dim H̃_{i-2}(Δ(1,m)) for m in L_N above 1, plus β_{0,1} = 1.
struct BettiTable {
  std::map<std::pair<int, Monomial>, int> entries;
  std::vector<int> totals;
};

BettiTable gpw_betti(const MonomialIdeal& ideal, const Field& f);

// If L_N is a CW-poset, the supported complex X_N gives a minimal cellular
// resolution and the ideal is lattice-linear. Otherwise the report carries
// the failing lattice element; lattice-linearity is then certified directly
// on the Scarf complex whenever that happens to resolve.
struct CWLatticeReport {
  CWPosetReport poset_report;
  bool is_cw = false;
  std::optional<std::string> witness;
  bool lattice_linear_certified = false;
  std::optional<MultigradedComplex> minimal_cellular;
};

CWLatticeReport cw_lattice_report(const MonomialIdeal& ideal, const Field& f);

}  // namespace cwres

#endif
