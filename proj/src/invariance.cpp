#include <tfact/invariance.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace tfact {

namespace {

// maximizer of Re tr(X M) over unitary X
Mat procrustes_factor(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.matrixU().adjoint();
}

Mat random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  // fix the phase ambiguity so the factor is deterministic
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

double alignment_objective(const std::vector<Mat>& a, const std::vector<Mat>& b, const Mat& u2,
                           const Mat& u1) {
  double acc = 0.0;
  for (size_t j = 0; j < a.size(); ++j) acc += (b[j] - u2 * a[j] * u1).squaredNorm();
  return acc;
}

// alternating polar sweeps for min sum ||b - U2 a U1||^2
std::pair<Mat, Mat> align(const std::vector<Mat>& a, const std::vector<Mat>& b, Mat u2, Mat u1) {
  double prev = alignment_objective(a, b, u2, u1);
  for (int sweep = 0; sweep < 100; ++sweep) {
    Mat m2 = Mat::Zero(u2.rows(), u2.cols());
    for (size_t j = 0; j < a.size(); ++j) m2 += a[j] * u1 * b[j].adjoint();
    u2 = procrustes_factor(m2);
    Mat m1 = Mat::Zero(u1.rows(), u1.cols());
    for (size_t j = 0; j < a.size(); ++j) m1 += b[j].adjoint() * u2 * a[j];
    u1 = procrustes_factor(m1);
    const double cur = alignment_objective(a, b, u2, u1);
    if (prev - cur <= 1e-12 * prev) break;
    prev = cur;
  }
  return {u2, u1};
}

// When the residuals really are unitarily related with constant factors,
// matching their singular bases at one well-conditioned point lands on the
// solution up to the SVD gauge, which the sweeps then absorb.
std::pair<Mat, Mat> pointwise_svd_start(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  size_t best = 0;
  double best_norm = -1.0;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j].norm() > best_norm) {
      best_norm = a[j].norm();
      best = j;
    }
  Eigen::JacobiSVD<Mat> sa(a[best], Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::JacobiSVD<Mat> sb(b[best], Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {Mat(sb.matrixU() * sa.matrixU().adjoint()),
          Mat(sa.matrixV() * sb.matrixV().adjoint())};
}

} // namespace

CircleFunction extract_residual(const CircleFunction& phi,
                                const std::vector<CircleFunction>& xi_chain,
                                const std::vector<CircleFunction>& theta_chain) {
  if (xi_chain.size() != theta_chain.size() || xi_chain.empty())
    fail(errc::shape_mismatch, "extract_residual: chains must be nonempty and equally long");
  const int r = static_cast<int>(xi_chain.size());
  if (r >= std::min(phi.rows(), phi.cols()))
    fail(errc::invariant_violation, "extract_residual: requires r < min(m, n)");

  CircleFunction acc = phi;
  for (int j = 0; j < r; ++j) acc = multiply(acc, conj_fn(theta_chain[j]));
  for (int j = 0; j < r; ++j) acc = multiply(adjoint(xi_chain[j]), acc);
  return acc;
}

CircleFunction extract_residual(const CircleFunction& phi, const FactorBundle& bundle) {
  std::vector<CircleFunction> xi, theta;
  for (const auto& block : bundle.left) {
    if (!block.inner.theta) fail(errc::shape_mismatch, "left block lacks a complement");
    xi.push_back(*block.inner.theta);
  }
  for (const auto& block : bundle.right) {
    if (!block.inner.theta) fail(errc::shape_mismatch, "right block lacks a complement");
    theta.push_back(*block.inner.theta);
  }
  return extract_residual(phi, xi, theta);
}

ResidualEquivalence residual_equivalence(const CircleFunction& psi1, const CircleFunction& psi2,
                                         const GridSpec& grid, const ToleranceConfig& tol) {
  if (psi1.rows() != psi2.rows() || psi1.cols() != psi2.cols())
    fail(errc::shape_mismatch, "residual_equivalence: shapes differ");
  const auto a = sample_on_grid(psi1, grid);
  const auto b = sample_on_grid(psi2, grid);
  const int m = psi1.rows(), n = psi1.cols();

  double sup1 = 0.0, sup2 = 0.0;
  for (const auto& s : a) sup1 = std::max(sup1, s.norm());
  for (const auto& s : b) sup2 = std::max(sup2, s.norm());

  ResidualEquivalence res;
  res.u1 = Mat::Identity(n, n);
  res.u2 = Mat::Identity(m, m);
  if (sup1 <= 1e-13) {
    if (sup2 > 1e-13)
      fail(errc::degenerate_input, "first residual vanishes but the second does not");
    res.equivalent = true;
    return res;
  }

  auto deviation = [&](const Mat& u2, const Mat& u1) {
    double worst = 0.0;
    for (size_t j = 0; j < a.size(); ++j)
      worst = std::max(worst, (b[j] - u2 * a[j] * u1).norm());
    return worst;
  };

  auto [u2, u1] = align(a, b, Mat::Identity(m, m), Mat::Identity(n, n));
  double best = alignment_objective(a, b, u2, u1);
  auto consider = [&](const Mat& s2, const Mat& s1) {
    auto [w2, w1] = align(a, b, s2, s1);
    const double obj = alignment_objective(a, b, w2, w1);
    if (obj < best) {
      best = obj;
      u2 = w2;
      u1 = w1;
    }
  };

  {
    const auto [s2, s1] = pointwise_svd_start(a, b);
    consider(s2, s1);
  }
  std::mt19937 rng(12345);
  consider(random_unitary(m, rng), random_unitary(n, rng));

  res.u1 = u1;
  res.u2 = u2;
  res.max_deviation = deviation(u2, u1);
  res.equivalent = res.max_deviation <= tol.eq_tol * std::max(1.0, sup1);
  return res;
}

double max_pointwise_singular_gap(const CircleFunction& f, const CircleFunction& g,
                                  const GridSpec& grid) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    fail(errc::shape_mismatch, "singular gap: shapes differ");
  const auto a = sample_on_grid(f, grid);
  const auto b = sample_on_grid(g, grid);
  double worst = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    Eigen::JacobiSVD<Mat> sa(a[j]), sb(b[j]);
    worst = std::max(worst, (sa.singularValues() - sb.singularValues()).cwiseAbs().maxCoeff());
  }
  return worst;
}

Mat rho_matrix(const CircleFunction& phi, double t, cplx zeta, const ToleranceConfig& tol) {
  if (std::abs(std::abs(zeta) - 1.0) > tol.eq_tol)
    fail(errc::non_unit_argument, "rho_matrix: argument is not on the unit circle");
  if (t <= 0) fail(errc::invariant_violation, "rho_matrix: level must be positive");
  const Mat p = phi.evaluate_unchecked(zeta);
  Mat a = p.transpose() * p.conjugate();
  a = 0.5 * (a + a.adjoint()); // clean up round-off asymmetry
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const double cut = t * t * (1.0 - tol.sv_tol);
  Mat d = Mat::Zero(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    if (es.eigenvalues()(i) >= cut) d(i, i) = es.eigenvalues()(i);
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

bool l_subspace_member(const CircleFunction& f, const CircleFunction& phi, double t,
                       const GridSpec& grid, const ToleranceConfig& tol) {
  if (f.cols() != 1 || f.rows() != phi.cols())
    fail(errc::shape_mismatch, "l_subspace_member: f must be a column matching phi");
  if (max_negative_coefficient_norm(f, grid, tol) > tol.coeff_tol)
    fail(errc::not_analytic, "l_subspace_member: f has negative Fourier coefficients");
  const auto fs = sample_on_grid(f, grid);
  double supf = 0.0;
  for (const auto& s : fs) supf = std::max(supf, s.norm());
  if (supf == 0.0) return true;
  double worst = 0.0;
  for (int j = 0; j < grid.samples; ++j) {
    const cplx zeta = grid.point(j);
    worst = std::max(worst, (rho_matrix(phi, t, zeta, tol) * fs[j]).norm());
  }
  return worst <= tol.eq_tol * supf;
}

bool theta_range_member(const CircleFunction& f, const std::vector<CircleFunction>& theta_chain,
                        const GridSpec& grid, const ToleranceConfig& tol) {
  if (theta_chain.empty()) fail(errc::shape_mismatch, "theta_range_member: empty chain");
  CircleFunction theta = theta_chain.front();
  for (size_t j = 1; j < theta_chain.size(); ++j) theta = multiply(theta, theta_chain[j]);
  if (f.cols() != 1 || f.rows() != theta.rows())
    fail(errc::shape_mismatch, "theta_range_member: f must be a column matching the chain");
  if (max_negative_coefficient_norm(f, grid, tol) > tol.coeff_tol)
    fail(errc::not_analytic, "theta_range_member: f has negative Fourier coefficients");

  const CircleFunction g = multiply(adjoint(theta), f);
  const double supf = std::max(1.0, sup_norm_on_grid(f, grid));
  const double recon = max_grid_distance(multiply(theta, g), f, grid);
  if (recon > tol.eq_tol * supf) return false;
  return max_negative_coefficient_norm(g, grid, tol) <= tol.coeff_tol;
}

RecoveredIndices recover_monotone_indices(const CircleFunction& phi, double t0,
                                          const GridSpec& grid, const ToleranceConfig& tol) {
  if (t0 <= 0) fail(errc::invariant_violation, "recover_monotone_indices: level must be positive");
  RecoveredIndices out;
  out.level = t0;
  out.table = dim_table(phi, t0, std::nullopt, grid, tol);

  const auto d = [&](int kappa) { return out.table.dim_at(kappa); };
  const int total = d(0);
  if (total == 0) return out; // nothing at this level

  int k0 = -1;
  for (const auto& e : out.table.entries)
    if (e.dim == 0) {
      k0 = e.kappa;
      break;
    }
  if (k0 <= 0) fail(errc::inconsistent_table, "no kappa with vanishing dimension");

  struct Group {
    int value;
    int mult;
  };
  std::vector<Group> groups{{k0, d(k0 - 1)}};
  if (groups[0].mult < 1) fail(errc::inconsistent_table, "leading multiplicity is not positive");

  auto recovered_sum = [&groups]() {
    int s = 0;
    for (const auto& g : groups) s += g.value * g.mult;
    return s;
  };
  auto partial_dim = [&groups](int kappa) {
    int s = 0;
    for (const auto& g : groups) s += g.mult * std::max(g.value - kappa, 0);
    return s;
  };

  while (recovered_sum() < total) {
    const int prev_value = groups.back().value;
    int next_value = -1;
    for (int kappa = 0; kappa < prev_value; ++kappa) {
      if (d(kappa) == partial_dim(kappa)) {
        next_value = kappa;
        break;
      }
    }
    if (next_value < 1)
      fail(errc::inconsistent_table, "no kappa satisfies the recovery recursion");
    const int mult = d(next_value - 1) - partial_dim(next_value - 1);
    if (mult < 1) fail(errc::inconsistent_table, "recovered multiplicity is not positive");
    groups.push_back({next_value, mult});
  }
  if (recovered_sum() != total)
    fail(errc::inconsistent_table, "recovered indices do not exhaust D(0)");

  for (const auto& g : groups)
    for (int i = 0; i < g.mult; ++i) out.indices.push_back(g.value);

  // certify against the whole measured table
  for (const auto& e : out.table.entries) {
    int predicted = 0;
    for (int k : out.indices) predicted += std::max(k - e.kappa, 0);
    if (predicted != e.dim)
      fail(errc::inconsistent_table, "recovered indices disagree with the measured table");
  }
  return out;
}

DimFormulaReport verify_dimension_formula(const CircleFunction& phi, double t0,
                                          std::vector<int> candidates, const GridSpec& grid,
                                          const ToleranceConfig& tol) {
  for (int k : candidates)
    if (k < 1) fail(errc::invariant_violation, "candidate indices must be positive");
  std::sort(candidates.begin(), candidates.end(), std::greater<int>());
  const int kappa_max = candidates.empty() ? 0 : candidates.front();

  DimFormulaReport rep;
  rep.consistent = true;
  for (int kappa = 0; kappa <= kappa_max; ++kappa) {
    int predicted = 0;
    for (int k : candidates) predicted += std::max(k - kappa, 0);
    const int measured = maximizing_dim(phi, t0, kappa, grid, tol);
    const bool ok = measured == predicted;
    rep.rows.push_back({kappa, measured, predicted, ok});
    if (!ok && rep.first_violation < 0) {
      rep.first_violation = kappa;
      rep.consistent = false;
    }
  }
  return rep;
}

IotaBoundReport iota_bound_check(const FactorBundle& bundle, const GridSpec& grid,
                                 const ToleranceConfig& tol) {
  if (bundle.diag.empty() || bundle.diag.front().t <= 0)
    fail(errc::invariant_violation, "iota_bound_check: top slot must have t > 0");
  IotaBoundReport rep;
  rep.index0 = toeplitz_index(bundle.diag.front().u, grid, tol);
  rep.iota = iota(compose(bundle), grid, tol).value;
  rep.bound_ok = rep.index0 <= rep.iota;
  rep.attained = rep.index0 == rep.iota;
  return rep;
}

} // namespace tfact
