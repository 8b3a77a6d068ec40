#ifndef OSP_ORACLE_HPP
#define OSP_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osp/distributions.hpp"
#include "osp/multi_index.hpp"
#include "osp/poly.hpp"

namespace osp {

/// A weight measure reduced to what integration needs: exact expectations of
/// basis elements. Every orthogonality statement here is checked against
/// these closed-form moments.
struct MomentFunctional {
  int dim = 0;
  Basis basis = Basis::monomial;
  std::string name;
  std::function<Exact(const MultiIndex&)> mom;
};

MomentFunctional to_functional(const WeightSpec& w);

/// E[p] under the functional (converts p to the functional's basis).
Exact integrate(const Poly& p, const MomentFunctional& w);

/// E[a*b], computed by exact multiplication followed by moment reduction.
Exact inner_product(const Poly& a, const Poly& b, const MomentFunctional& w);
Exact inner_product(const Poly& a, const Poly& b, const WeightSpec& w);

/// Independent second path for lattice weights: enumerate the finite support
/// and sum pmf * a * b directly.
Exact inner_product_brute(const Poly& a, const Poly& b, const WeightSpec& w);

/// A constructible orthogonal family over a fixed index set.
struct Family {
  std::string name;
  std::vector<MultiIndex> indices;
  std::function<Poly(const MultiIndex&)> make;
  /// Closed-form squared norm to compare the Gram diagonal against; empty
  /// function means no printed constant is available.
  std::function<Exact(const MultiIndex&)> printed_norm;
};

/// Exact Gram matrix with diagnostics. Diagonal mismatches against the
/// printed constants and nonzero off-diagonal entries are recorded, never
/// corrected.
struct GramReport {
  std::string family;
  std::string weight;
  std::vector<MultiIndex> indices;
  std::vector<std::vector<Exact>> matrix;

  struct OffDiagIssue {
    MultiIndex n, m;
    Exact value;
  };
  struct DiagIssue {
    MultiIndex n;
    Exact oracle;
    Exact printed;
  };
  std::vector<OffDiagIssue> offdiag_nonzero;
  std::vector<DiagIssue> diag_mismatches;
  bool compared_printed = false;

  bool diagonal_ok() const { return diag_mismatches.empty(); }
  bool orthogonal() const { return offdiag_nonzero.empty(); }
  bool clean() const { return orthogonal() && diagonal_ok(); }
};

GramReport gram_matrix(const Family& fam, const MomentFunctional& w);

/// Orthogonal expansion f = sum_n c_n a_n G_n with a_n = E[f G_n] and
/// c_n = 1/E[G_n^2]; the residual is the exact difference and must vanish
/// when deg(f) is covered by the index set.
struct FourierExpansion {
  std::vector<MultiIndex> indices;
  std::vector<Exact> coefficients;  // a_n
  std::vector<Exact> norms;         // E[G_n^2]
  Poly residual;
};

FourierExpansion fourier_expand(const Poly& f, const Family& fam, const MomentFunctional& w);

}  // namespace osp

#endif
