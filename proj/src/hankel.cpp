#include <tfact/hankel.hpp>

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace tfact {

namespace {

Mat assemble_hankel(const CircleFunction& f, int order, const GridSpec& grid,
                    const ToleranceConfig& tol) {
  const int m = f.rows(), n = f.cols();
  const auto coeffs = fourier_coefficients(f, -(2 * order - 1), -1, grid, tol);
  Mat h = Mat::Zero(order * m, order * n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) h.block(i * m, j * n, m, n) = coeffs.at(-(i + j + 1));
  return h;
}

// exact truncation order for a laurent symbol (>= 1 so the matrix is nonempty)
int exact_order(const CircleFunction& f) { return std::max(1, f.max_negative_degree()); }

// order past which a rational symbol's trailing coefficient blocks fall
// below coeff_tol, making the truncation exact for tolerance purposes
int adaptive_order(const CircleFunction& f, const GridSpec& grid, const ToleranceConfig& tol) {
  const int cap = grid.samples / 4;
  int deepest = 0;
  {
    // scan the negative spectrum outward until the geometric tail is spent
    int K = 1;
    double tail = max_negative_coefficient_norm(f, grid, tol);
    if (tail <= tol.coeff_tol) return 1;
    while (K < cap) {
      K = std::min(2 * K + 4, cap);
      const auto coeffs = fourier_coefficients(f, -K, -1, grid, tol);
      deepest = 0;
      for (const auto& [k, c] : coeffs)
        if (c.norm() > tol.coeff_tol) deepest = std::max(deepest, -k);
      if (deepest < K) break;
    }
  }
  // the nonzero block anti-triangle spans rows and columns 0..deepest-1
  return std::max(1, deepest);
}

std::vector<double> svd_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

} // namespace

int MaximizingDimTable::dim_at(int kappa) const {
  for (const auto& e : entries)
    if (e.kappa == kappa) return e.dim;
  return 0;
}

HankelTruncation hankel_matrix(const CircleFunction& f, int order, const GridSpec& grid,
                               const ToleranceConfig& tol) {
  if (order < 1) fail(errc::invariant_violation, "hankel_matrix: order must be >= 1");
  HankelTruncation h;
  h.block_rows = f.rows();
  h.block_cols = f.cols();
  h.order = order;
  h.exact = f.is_laurent() && order >= f.max_negative_degree();
  h.matrix = assemble_hankel(f, order, grid, tol);
  return h;
}

ToeplitzTruncation toeplitz_matrix(const CircleFunction& u, int order, const GridSpec& grid,
                                   const ToleranceConfig& tol) {
  if (order < 1) fail(errc::invariant_violation, "toeplitz_matrix: order must be >= 1");
  if (!u.is_scalar()) fail(errc::shape_mismatch, "toeplitz_matrix: scalar symbol required");
  const auto coeffs = fourier_coefficients(u, -(order - 1), order - 1, grid, tol);
  ToeplitzTruncation t;
  t.order = order;
  t.matrix = Mat::Zero(order, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) t.matrix(i, j) = coeffs.at(i - j)(0, 0);
  return t;
}

std::vector<double> singular_values(const HankelTruncation& h) { return svd_values(h.matrix); }

double hankel_norm(const CircleFunction& f, const GridSpec& grid, const ToleranceConfig& tol) {
  const int order = f.is_laurent() ? exact_order(f) : adaptive_order(f, grid, tol);
  return operator_norm(assemble_hankel(f, order, grid, tol));
}

HankelNormAt hankel_norm_at(const CircleFunction& f, int order, const GridSpec& grid,
                            const ToleranceConfig& tol) {
  const auto h = hankel_matrix(f, order, grid, tol);
  return {operator_norm(h.matrix), h.exact};
}

int maximizing_dim(const CircleFunction& f, double t, int kappa, const GridSpec& grid,
                   const ToleranceConfig& tol) {
  if (!f.is_laurent())
    fail(errc::unsupported_representation, "maximizing_dim requires a laurent symbol");
  if (t <= 0) fail(errc::invariant_violation, "maximizing_dim: level must be positive");
  if (kappa < 0) fail(errc::invariant_violation, "maximizing_dim: kappa must be >= 0");
  const CircleFunction shifted = shift(f, kappa);
  const auto values = svd_values(assemble_hankel(shifted, exact_order(shifted), grid, tol));
  int count = 0;
  for (double s : values) {
    if (std::abs(s - t) <= tol.sv_tol * t) {
      ++count;
    } else if (s > t * (1.0 - 10.0 * tol.sv_tol) && s < t * (1.0 - tol.sv_tol)) {
      fail(errc::ambiguous_spectrum,
           "singular value " + std::to_string(s) + " falls in the guard annulus below level " +
               std::to_string(t));
    }
  }
  return count;
}

MaximizingDimTable dim_table(const CircleFunction& f, double t, std::optional<int> kappa_max,
                             const GridSpec& grid, const ToleranceConfig& tol) {
  if (!f.is_laurent())
    fail(errc::unsupported_representation, "dim_table requires a laurent symbol");
  MaximizingDimTable table;
  table.level = t;
  // past the most negative power the shifted symbol is analytic, so the
  // dimension is certainly zero; that bounds the default sweep
  const int hard_stop = kappa_max.value_or(f.max_negative_degree());
  for (int kappa = 0; kappa <= hard_stop; ++kappa) {
    const CircleFunction shifted = shift(f, kappa);
    const auto values = svd_values(assemble_hankel(shifted, exact_order(shifted), grid, tol));
    int count = 0;
    double gap = std::numeric_limits<double>::infinity();
    for (double s : values) {
      if (std::abs(s - t) <= tol.sv_tol * t) {
        ++count;
      } else {
        if (s > t * (1.0 - 10.0 * tol.sv_tol) && s < t * (1.0 - tol.sv_tol))
          fail(errc::ambiguous_spectrum, "singular value in the guard annulus below level");
        gap = std::min(gap, std::abs(s - t) / t);
      }
    }
    table.entries.push_back({kappa, count, gap});
    if (!kappa_max && count == 0) break;
  }
  if (!kappa_max && (table.entries.empty() || table.entries.back().dim != 0))
    table.entries.push_back({hard_stop + 1, 0, 0.0});
  return table;
}

IotaResult iota(const CircleFunction& f, const GridSpec& grid, const ToleranceConfig& tol) {
  if (!f.is_laurent()) fail(errc::unsupported_representation, "iota requires a laurent symbol");
  const double t = hankel_norm(f, grid, tol);
  if (t <= 1e-12) return {0, true};
  const int d = f.max_negative_degree();
  for (int j = 1; j <= d; ++j) {
    const double v = hankel_norm(shift(f, j), grid, tol);
    if (v >= t * (1.0 - tol.sv_tol)) continue;
    if (v > t * (1.0 - 10.0 * tol.sv_tol))
      fail(errc::ambiguous_spectrum, "shifted Hankel norm falls in the tolerance annulus");
    return {j, false};
  }
  return {d, false}; // z^d f is analytic, so the norm has certainly dropped
}

EssentialNormBound essential_norm_bound(const CircleFunction& f) {
  (void)f; // laurent and rational symbols are continuous on the circle
  return {0.0,
          "Hartman's theorem: the symbol is continuous, hence the Hankel operator is "
          "compact and its essential norm is 0"};
}

} // namespace tfact
