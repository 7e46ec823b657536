#ifndef TFACT_TYPES_HPP
#define TFACT_TYPES_HPP
//
// Project     : tfact
// Module      : types
// Description : shared scalar/matrix aliases, grid and tolerance settings,
//               and the error taxonomy used across the library
//

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tfact {

using cplx = std::complex<double>;
using Mat  = Eigen::MatrixXcd;
using Vec  = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

// Every failure mode the library can signal. The CLI maps these onto
// process exit codes (parse -> 1, ambiguity -> 3, everything else -> 2).
enum class errc {
  non_unit_argument,
  denominator_near_zero,
  grid_too_coarse,
  shape_mismatch,
  not_bounded_away_from_zero,
  non_integer_winding,
  not_unimodular,
  ambiguous_spectrum,
  inconsistent_table,
  not_analytic,
  degenerate_input,
  not_nonincreasing,
  unsupported_representation,
  invariant_violation,
  parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

// Uniform sampling grid zeta_j = exp(i (2 pi j / samples + offset)).
// samples must be a power of two; offset lies in [0, 2 pi / samples).
struct GridSpec {
  int samples = 1024;
  double offset = 0.0;

  void validate() const {
    if (samples < 2 || (samples & (samples - 1)) != 0)
      fail(errc::invariant_violation, "grid samples must be a power of two >= 2");
    if (offset < 0.0 || offset >= 2.0 * pi / samples)
      fail(errc::invariant_violation, "grid offset out of [0, 2 pi / samples)");
  }

  cplx point(int j) const {
    const double theta = 2.0 * pi * j / samples + offset;
    return {std::cos(theta), std::sin(theta)};
  }
};

struct ToleranceConfig {
  double eq_tol = 1e-9;     // relative tolerance for pointwise equalities
  double sv_tol = 1e-6;     // relative tolerance for singular-value banding
  double coeff_tol = 1e-10; // absolute floor for a Fourier coefficient to count as zero

  void validate() const {
    if (eq_tol <= 0 || sv_tol <= 0 || coeff_tol <= 0)
      fail(errc::invariant_violation, "tolerances must be strictly positive");
    if (sv_tol <= eq_tol)
      fail(errc::invariant_violation, "sv_tol must exceed eq_tol");
  }
};

// Largest singular value; Frobenius norm. Small dense matrices only.
double operator_norm(const Mat& m);
inline double frobenius_norm(const Mat& m) { return m.norm(); }

} // namespace tfact

#endif
