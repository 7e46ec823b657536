#ifndef TFACT_CIRCLE_FN_HPP
#define TFACT_CIRCLE_FN_HPP
//
// Project     : tfact
// Module      : circle_fn
// Description : matrix-valued functions on the unit circle, held as matrix
//               Laurent polynomials or rationals with scalar denominator;
//               evaluation, Fourier coefficients, pointwise algebra, and the
//               analytic predicates (unitary-valued, inner, co-outer) plus
//               winding numbers / Toeplitz indices
//

#include <map>
#include <optional>
#include <vector>

#include <tfact/types.hpp>

namespace tfact {

struct LaurentTerm {
  int power;
  Mat coeff;
};

/// A matrix function on |z| = 1. Immutable after construction; all
/// operations are pure functions of their inputs.
///
/// Two representations:
///   laurent  - finite sum of coeff(k) * z^k with distinct integer powers
///   rational - matrix polynomial numerator (nonnegative powers) divided by
///              a scalar polynomial q(z) with no roots on the unit circle
class CircleFunction {
public:
  enum class Kind { laurent, rational };

  static CircleFunction laurent(int rows, int cols, std::vector<LaurentTerm> terms);
  static CircleFunction rational(int rows, int cols, std::vector<LaurentTerm> numerator,
                                 std::vector<cplx> denominator);
  static CircleFunction constant(const Mat& value);
  static CircleFunction zero(int rows, int cols);
  static CircleFunction identity(int n);
  // coeff * z^power, scalar
  static CircleFunction scalar_monomial(int power, cplx coeff = 1.0);
  static CircleFunction monomial(int power, const Mat& coeff);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Kind kind() const { return kind_; }
  bool is_scalar() const { return rows_ == 1 && cols_ == 1; }
  bool is_laurent() const { return kind_ == Kind::laurent; }

  // terms(): Laurent terms, or the numerator for rationals; sorted by power,
  // exact-zero coefficient matrices dropped.
  const std::vector<LaurentTerm>& terms() const { return terms_; }
  // denominator coefficients, ascending powers; {1} for laurent functions
  const std::vector<cplx>& denominator() const { return denom_; }

  int min_power() const; // 0 for empty term lists
  int max_power() const;
  // largest d such that the coefficient of z^-d can be nonzero
  // (laurent: -min_power; rational: unbounded decay handled elsewhere)
  int max_negative_degree() const;

  Mat evaluate(cplx zeta, const ToleranceConfig& tol = {}) const;
  // no unit-modulus precondition check; used by grid samplers
  Mat evaluate_unchecked(cplx zeta) const;

  Mat coefficient(int power) const; // laurent only: exact read-off (zero if absent)

private:
  CircleFunction() = default;
  void normalize();

  int rows_ = 0, cols_ = 0;
  Kind kind_ = Kind::laurent;
  std::vector<LaurentTerm> terms_;
  std::vector<cplx> denom_{cplx(1.0)};
};

// ---- pointwise algebra ------------------------------------------------

CircleFunction multiply(const CircleFunction& f, const CircleFunction& g);
CircleFunction add(const CircleFunction& f, const CircleFunction& g);
CircleFunction scale(const CircleFunction& f, cplx factor);
// evaluate(adjoint(f), z) == evaluate(f, z)^* on |z| = 1
CircleFunction adjoint(const CircleFunction& f);
CircleFunction transpose(const CircleFunction& f);
// entrywise conjugate on the circle: coeff(k) z^k -> conj(coeff(k)) z^-k
CircleFunction conj_fn(const CircleFunction& f);
// z^k * f
CircleFunction shift(const CircleFunction& f, int k);
// pad f into an R x C zero function at block offset (ro, co)
CircleFunction embed(const CircleFunction& f, int R, int C, int ro, int co);
CircleFunction hconcat(const CircleFunction& f, const CircleFunction& g);
CircleFunction direct_sum(const CircleFunction& f, const CircleFunction& g);

// ---- sampling and Fourier analysis ------------------------------------

std::vector<Mat> sample_on_grid(const CircleFunction& f, const GridSpec& grid);

// Coefficients for every power in [k_min, k_max]. Exact for laurent
// representations; rationals are sampled and the geometric aliasing tail is
// checked against coeff_tol (GridTooCoarse when it cannot be met).
std::map<int, Mat> fourier_coefficients(const CircleFunction& f, int k_min, int k_max,
                                        const GridSpec& grid, const ToleranceConfig& tol = {});

// max Frobenius norm over all negative-power coefficients (with rational
// tail bound folded in)
double max_negative_coefficient_norm(const CircleFunction& f, const GridSpec& grid,
                                     const ToleranceConfig& tol = {});

double max_grid_distance(const CircleFunction& f, const CircleFunction& g, const GridSpec& grid);
// sup over the grid of the pointwise operator norm
double sup_norm_on_grid(const CircleFunction& f, const GridSpec& grid);

// ---- analytic predicates ----------------------------------------------

struct UnitaryReport {
  bool unitary = false;
  double max_deviation = 0.0; // max over grid of ||f(z)^* f(z) - I||
};
UnitaryReport is_unitary_valued(const CircleFunction& f, const GridSpec& grid,
                                const ToleranceConfig& tol = {});

enum class InnerFailure { none, not_analytic, not_isometric };

struct InnerReport {
  bool inner = false;
  InnerFailure reason = InnerFailure::none;
  double max_negative_coeff = 0.0;
  double max_isometry_deviation = 0.0;
};
InnerReport is_inner(const CircleFunction& f, const GridSpec& grid,
                     const ToleranceConfig& tol = {});

// Polynomial co-outer test. Columns: entry polynomials share no root in the
// closed unit disk. n x (n-1) complements: the maximal minors of f^t share
// no root there. Roots via companion-matrix eigenvalues; the closed disk is
// |root| <= 1 + eq_tol.
bool is_co_outer_polynomial(const CircleFunction& f, const ToleranceConfig& tol = {});

// ---- winding ------------------------------------------------------------

// Discrete phase unwrapping; requires min |u| > 0.5 on the grid and snaps
// to an integer within 0.01 (NonIntegerWinding otherwise).
int winding_number(const CircleFunction& u, const GridSpec& grid);

// -winding_number(u) for unimodular u
int toeplitz_index(const CircleFunction& u, const GridSpec& grid,
                   const ToleranceConfig& tol = {});

} // namespace tfact

#endif
