#ifndef TFACT_TESTS_TESTUTIL_HPP
#define TFACT_TESTS_TESTUTIL_HPP
//
// shared fixtures: catalog symbols, Blaschke factors, random generators
//

#include <random>
#include <vector>

#include <tfact/invariance.hpp>
#include <tfact/thematic.hpp>

namespace tfact::testutil {

inline CircleFunction diag_conj_monomials(const std::vector<int>& exps,
                                          const std::vector<double>& coeffs = {}) {
  const int p = static_cast<int>(exps.size());
  std::vector<LaurentTerm> terms;
  for (int j = 0; j < p; ++j) {
    Mat e = Mat::Zero(p, p);
    e(j, j) = coeffs.empty() ? 1.0 : coeffs[j];
    terms.push_back({-exps[j], e});
  }
  return CircleFunction::laurent(p, p, terms);
}

// (z - a) / (1 - conj(a) z): analytic, unimodular on the circle, winding +1
inline CircleFunction blaschke(cplx a) {
  Mat c0(1, 1), c1(1, 1);
  c0(0, 0) = -a;
  c1(0, 0) = 1.0;
  return CircleFunction::rational(1, 1, {{0, c0}, {1, c1}}, {cplx(1.0), -std::conj(a)});
}

inline CircleFunction conj_blaschke(cplx a) { return conj_fn(blaschke(a)); }

inline Mat random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline CircleFunction random_laurent(int rows, int cols, int max_abs_power, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> terms_dist(1, 4);
  std::uniform_int_distribution<int> power_dist(-max_abs_power, max_abs_power);
  std::vector<LaurentTerm> terms;
  const int nterms = terms_dist(rng);
  for (int t = 0; t < nterms; ++t) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cplx(gauss(rng), gauss(rng));
    terms.push_back({power_dist(rng), m});
  }
  return CircleFunction::laurent(rows, cols, terms);
}

// unimodular test symbols: z^k times a phase times an optional (conjugated)
// Blaschke factor with |a| <= 0.45, keeping |u| safely away from 0 issues
inline CircleFunction random_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<int> power_dist(-6, 6);
  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * pi);
  std::uniform_real_distribution<double> radius_dist(0.0, 0.45);
  std::uniform_int_distribution<int> kind_dist(0, 2);
  const double alpha = phase_dist(rng);
  CircleFunction u = CircleFunction::scalar_monomial(power_dist(rng),
                                                     cplx(std::cos(alpha), std::sin(alpha)));
  const int kind = kind_dist(rng);
  if (kind > 0) {
    const double beta = phase_dist(rng);
    const cplx a = radius_dist(rng) * cplx(std::cos(beta), std::sin(beta));
    u = multiply(u, kind == 1 ? blaschke(a) : conj_blaschke(a));
  }
  return u;
}

// a partial bundle on rotation-family blocks: r = 1 on a 2 x 2 ambient with
// scalar residual psi
inline FactorBundle rotation_partial_bundle(int left_power, int right_power, double c, double t,
                                            const CircleFunction& u, const CircleFunction& psi) {
  FactorBundle b;
  b.m = b.n = 2;
  b.left = {lift(rotation_block(left_power, c, BlockSide::left), 0)};
  b.right = {lift(rotation_block(right_power, c, BlockSide::right), 0)};
  b.diag = {{t, u}};
  b.residual = psi;
  return b;
}

} // namespace tfact::testutil

#endif
