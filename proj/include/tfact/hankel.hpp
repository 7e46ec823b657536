#ifndef TFACT_HANKEL_HPP
#define TFACT_HANKEL_HPP
//
// Project     : tfact
// Module      : hankel
// Description : truncated block Hankel/Toeplitz operators built from Fourier
//               coefficients; norms, singular spectra, maximizing-space
//               dimensions D(kappa), and the norm-drop exponent iota
//

#include <optional>
#include <string>
#include <vector>

#include <tfact/circle_fn.hpp>

namespace tfact {

// Block (i, j) holds the coefficient of z^-(i+j+1), 0 <= i, j < order.
// For a laurent symbol whose most negative power is -d, order >= d makes the
// truncation contain every nonzero block (exact == true): appending another
// block row or column adds only zeros, so norms and spectra are those of the
// full operator.
struct HankelTruncation {
  int block_rows = 0; // m
  int block_cols = 0; // n
  int order = 0;      // N
  bool exact = false;
  Mat matrix;         // (N m) x (N n)
};

// entry (i, j) = coefficient of z^(i-j); scalar symbols
struct ToeplitzTruncation {
  int order = 0;
  Mat matrix;
};

struct MaximizingDimTable {
  struct Entry {
    int kappa = 0;
    int dim = 0;
    double gap = 0.0; // smallest |s - t| / t among singular values not counted
  };
  double level = 0.0;
  std::vector<Entry> entries;

  int dim_at(int kappa) const; // 0 past the recorded range
};

HankelTruncation hankel_matrix(const CircleFunction& f, int order, const GridSpec& grid,
                               const ToleranceConfig& tol = {});
ToeplitzTruncation toeplitz_matrix(const CircleFunction& u, int order, const GridSpec& grid,
                                   const ToleranceConfig& tol = {});

std::vector<double> singular_values(const HankelTruncation& h);

// ||H_f|| from the exact truncation (laurent: order = max negative degree;
// rational: order grown until the trailing coefficient blocks vanish)
double hankel_norm(const CircleFunction& f, const GridSpec& grid,
                   const ToleranceConfig& tol = {});

struct HankelNormAt {
  double value = 0.0;
  bool exact = false; // when false the value is only a lower bound
};
HankelNormAt hankel_norm_at(const CircleFunction& f, int order, const GridSpec& grid,
                            const ToleranceConfig& tol = {});

// dim { f in H^2 : ||H_{z^kappa Phi} f|| = t ||f|| } for laurent symbols:
// the multiplicity of t in the singular spectrum of the exact truncation of
// the shifted symbol, counted with the sv_tol band. Singular values falling
// in the guard annulus (t (1 - 10 sv_tol), t (1 - sv_tol)) raise
// AmbiguousSpectrum instead of being silently excluded.
int maximizing_dim(const CircleFunction& f, double t, int kappa, const GridSpec& grid,
                   const ToleranceConfig& tol = {});

// entries for kappa = 0..kappa_max; by default the table stops at the first
// kappa with dimension zero
MaximizingDimTable dim_table(const CircleFunction& f, double t, std::optional<int> kappa_max,
                             const GridSpec& grid, const ToleranceConfig& tol = {});

// smallest j >= 0 with ||H_{z^j f}|| < ||H_f||; zero_hankel marks the
// degenerate convention for symbols whose Hankel operator already vanishes
struct IotaResult {
  int value = 0;
  bool zero_hankel = false;
};
IotaResult iota(const CircleFunction& f, const GridSpec& grid, const ToleranceConfig& tol = {});

// Continuous (laurent/rational) symbols have compact Hankel operators, so
// the essential norm is 0 (Hartman's theorem).
struct EssentialNormBound {
  double value = 0.0;
  std::string certificate;
};
EssentialNormBound essential_norm_bound(const CircleFunction& f);

} // namespace tfact

#endif
