#ifndef TFACT_INVARIANCE_HPP
#define TFACT_INVARIANCE_HPP
//
// Project     : tfact
// Module      : invariance
// Description : residual extraction and its invariance modulo constant
//               unitaries, the rho-kernel / Theta-range characterization of
//               the maximizing subspace, the dimension formula, monotone
//               index recovery, and the index bound against iota
//

#include <vector>

#include <tfact/hankel.hpp>
#include <tfact/thematic.hpp>

namespace tfact {

// Psi = Xi_{r-1}^* ... Xi_0^* Phi conj(Theta_0) ... conj(Theta_{r-1}):
// peeling the factorization down to its residual entry
CircleFunction extract_residual(const CircleFunction& phi,
                                const std::vector<CircleFunction>& xi_chain,
                                const std::vector<CircleFunction>& theta_chain);
// convenience: chains taken from the bundle's own blocks
CircleFunction extract_residual(const CircleFunction& phi, const FactorBundle& bundle);

struct ResidualEquivalence {
  bool equivalent = false;
  Mat u1; // right factor, (n-r) x (n-r)
  Mat u2; // left factor, (m-r) x (m-r)
  double max_deviation = 0.0; // max over grid of ||psi2 - U2 psi1 U1||_F
};

// Searches for constant unitaries with psi2 ~ U2 psi1 U1 by alternating
// orthogonal-Procrustes sweeps (identity start plus one seeded random
// restart). Equivalent when the residual deviation falls below
// eq_tol * max(1, sup ||psi1||).
ResidualEquivalence residual_equivalence(const CircleFunction& psi1, const CircleFunction& psi2,
                                         const GridSpec& grid, const ToleranceConfig& tol = {});

// necessary condition for equivalence: unitary conjugation preserves
// pointwise singular values
double max_pointwise_singular_gap(const CircleFunction& f, const CircleFunction& g,
                                  const GridSpec& grid);

// spectral cut of Phi^t(zeta) conj(Phi(zeta)): eigenvalues below t^2 are
// zeroed, the rest kept
Mat rho_matrix(const CircleFunction& phi, double t, cplx zeta, const ToleranceConfig& tol = {});

// f analytic and rho(Phi^t conj(Phi)) f = 0 on the grid
bool l_subspace_member(const CircleFunction& f, const CircleFunction& phi, double t,
                       const GridSpec& grid, const ToleranceConfig& tol = {});

// f analytic and f = Theta g for analytic g, Theta the chain product
bool theta_range_member(const CircleFunction& f, const std::vector<CircleFunction>& theta_chain,
                        const GridSpec& grid, const ToleranceConfig& tol = {});

struct RecoveredIndices {
  double level = 0.0;
  std::vector<int> indices; // nonincreasing; sums to D(0)
  MaximizingDimTable table;
};

// Recovers the monotone thematic indices at level t0 from the D(kappa)
// table alone: repeatedly find the next distinct index value as the
// smallest kappa at which the already-recovered groups explain D exactly,
// then read off its multiplicity one step earlier. The result is
// cross-checked against the full table (InconsistentTable on any mismatch).
RecoveredIndices recover_monotone_indices(const CircleFunction& phi, double t0,
                                          const GridSpec& grid, const ToleranceConfig& tol = {});

struct DimFormulaRow {
  int kappa = 0;
  int measured = 0;
  int predicted = 0;
  bool ok = false;
};

struct DimFormulaReport {
  bool consistent = false;
  std::vector<DimFormulaRow> rows;
  int first_violation = -1; // kappa of the first mismatch, -1 if none
};

// measured D(kappa) against sum over candidates of max(k - kappa, 0):
// refutes candidate index multisets that no thematic factorization realizes
DimFormulaReport verify_dimension_formula(const CircleFunction& phi, double t0,
                                          std::vector<int> candidates, const GridSpec& grid,
                                          const ToleranceConfig& tol = {});

struct IotaBoundReport {
  int index0 = 0;   // ind T_{u_0}
  int iota = 0;     // iota(H_Phi) of the composed symbol
  bool bound_ok = false;
  bool attained = false;
};

// top-slot index against the norm-drop exponent of the composed function
IotaBoundReport iota_bound_check(const FactorBundle& bundle, const GridSpec& grid,
                                 const ToleranceConfig& tol = {});

} // namespace tfact

#endif
