#ifndef TFACT_THEMATIC_HPP
#define TFACT_THEMATIC_HPP
//
// Project     : tfact
// Module      : thematic
// Description : thematic blocks, lifted blocks, factor bundles and their
//               composition/verification; thematic indices, monotonicity and
//               nu invariants; catalog of reference factorizations
//

#include <optional>
#include <string>
#include <vector>

#include <tfact/circle_fn.hpp>

namespace tfact {

enum class BlockSide { left, right };

// A thematic pair (v, Theta): v is an n x 1 inner co-outer column, Theta an
// n x (n-1) inner co-outer complement, and (v | conj(Theta)) is
// unitary-valued. Right blocks assemble to V = (v | conj(Theta)); left
// blocks to W = (v | conj(Theta))^t, so that W^t is thematic.
// n = 1 degenerates to a unimodular constant with no complement.
struct ThematicBlock {
  int size = 0;
  CircleFunction v = CircleFunction::zero(1, 1);
  std::optional<CircleFunction> theta; // absent iff size == 1
  BlockSide side = BlockSide::right;

  CircleFunction assembled() const;
};

// I_offset (+) inner, as in the nested factors of a factorization
struct LiftedBlock {
  int offset = 0;
  ThematicBlock inner;

  int ambient() const { return offset + inner.size; }
  CircleFunction assembled() const;
};

LiftedBlock lift(const ThematicBlock& block, int offset);

struct DiagSlot {
  double t = 0.0;
  CircleFunction u = CircleFunction::scalar_monomial(0); // scalar unimodular
};

// Factorization data Phi = W_0^* ... W_{r-1}^* D V_{r-1}^* ... V_0^* with
// D = diag(t_j u_j) (+) residual. No residual means the full form: r equals
// min(m, n) and D is padded with zero rows/columns to m x n.
struct FactorBundle {
  int m = 0, n = 0;
  std::vector<LiftedBlock> left;  // W_j, side == left
  std::vector<LiftedBlock> right; // V_j, side == right
  std::vector<DiagSlot> diag;
  std::optional<CircleFunction> residual; // (m-r) x (n-r)

  int r() const { return static_cast<int>(diag.size()); }
};

struct CheckResult {
  std::string name;
  bool ok = false;
  double deviation = 0.0;
  std::string detail;
};

struct VerifyReport {
  bool ok = false;
  std::vector<CheckResult> checks;

  const CheckResult* find(const std::string& name) const;
};

// unitarity, inner and co-outer certificates; first-column minors checked
// for analyticity when the grid resolves their degree range
VerifyReport verify_thematic(const ThematicBlock& block, const GridSpec& grid,
                             const ToleranceConfig& tol = {});

// shape/structure errors only; semantic failures are verify_bundle's job
CircleFunction compose(const FactorBundle& bundle);

// (a) every block thematic, (b) recomposition matches the target on the
// grid, (c) t nonincreasing, (d) u_j unimodular with positive index for
// t_j > 0, (e) residual sup norm <= t_{r-1} and Hankel norm strictly below
VerifyReport verify_bundle(const FactorBundle& bundle, const CircleFunction& target,
                           const GridSpec& grid, const ToleranceConfig& tol = {});

struct NuEntry {
  double t = 0.0;
  int nu = 0;
};

struct IndexReport {
  std::vector<int> indices;   // k_j = ind T_{u_j}, for slots with t_j > 0
  std::vector<double> values; // the matching t_j
  std::vector<NuEntry> nu;    // per equal-t group (grouped within sv_tol)
  bool monotone = false;      // nonincreasing indices within each group
  bool iota_bound_ok = false; // k_0 <= iota(compose(bundle))
};

IndexReport indices(const FactorBundle& bundle, const GridSpec& grid,
                    const ToleranceConfig& tol = {});

struct BadlyApproximableCert {
  bool badly_approximable = false;
  double modulus = 0.0;          // the constant |phi|
  double modulus_deviation = 0.0;
  std::optional<int> index;      // ind T_{phi/|phi|} when modulus is constant
};

// scalar criterion: constant modulus and positive Toeplitz index
BadlyApproximableCert scalar_badly_approximable(const CircleFunction& phi, const GridSpec& grid,
                                                const ToleranceConfig& tol = {});

// ---- catalog -----------------------------------------------------------

// identity-split thematic block: v = e_1, Theta = (e_2 .. e_n)
ThematicBlock identity_block(int n, BlockSide side);
// 2 x 2 antidiagonal constant: v = e_2, Theta = e_1
ThematicBlock swap_block(BlockSide side);
// unimodular constant (size-1 degenerate block)
ThematicBlock constant_block(cplx phase, BlockSide side);
// 2 x 2 rotation family: right blocks have v = (c z^p, s)^t,
// Theta = (-s, c z^p)^t; left blocks v = (c, s z^p)^t, Theta = (-s z^p, c)^t
// with s = sqrt(1 - c^2)
ThematicBlock rotation_block(int power, double c, BlockSide side);

// diag(c_j zbar^{m_j}) with identity blocks; c nonincreasing, m_j >= 1.
// With a residual the bundle is partial on the enlarged ambient size.
FactorBundle catalog_diag_monomial(const std::vector<double>& coeffs,
                                   const std::vector<int>& exps);
FactorBundle catalog_diag_monomial(const std::vector<double>& coeffs,
                                   const std::vector<int>& exps,
                                   const CircleFunction& residual);

// The three reference factorizations of diag(zbar^2, zbar^6): the identity
// split with indices (2, 6), the rotation split with indices (1, 7), and
// the antidiagonal split with indices (6, 2) - the only monotone one.
std::vector<FactorBundle> catalog_z2z6_factorizations();
CircleFunction diag_z2z6_symbol();

// Rewrites a partial bundle without changing its composition: the last
// level's Theta/Xi are multiplied by constant unitaries and the residual
// absorbs them (Psi -> Q_xi^* Psi conj(Q_theta)); optional per-level phases
// move between the columns v_j / w_j and the diagonal u_j.
FactorBundle twisted_copy(const FactorBundle& bundle, const Mat& q_theta, const Mat& q_xi,
                          const std::vector<cplx>& v_phases = {},
                          const std::vector<cplx>& w_phases = {});

} // namespace tfact

#endif
