#include <doctest.h>

#include <random>

#include <tfact/circle_fn.hpp>

#include "testutil.hpp"

using namespace tfact;
using testutil::conj_blaschke;
using testutil::diag_conj_monomials;
using testutil::random_laurent;
using testutil::random_unimodular;

namespace {
const GridSpec grid{};
const ToleranceConfig tol{};

CircleFunction sqrt2_right_factor() {
  // [[zbar/s2, 1/s2], [-1/s2, z/s2]]
  const double s2 = std::sqrt(2.0);
  Mat c0 = Mat::Zero(2, 2), cm1 = Mat::Zero(2, 2), cp1 = Mat::Zero(2, 2);
  c0(0, 1) = 1.0 / s2;
  c0(1, 0) = -1.0 / s2;
  cm1(0, 0) = 1.0 / s2;
  cp1(1, 1) = 1.0 / s2;
  return CircleFunction::laurent(2, 2, {{-1, cm1}, {0, c0}, {1, cp1}});
}
} // namespace

TEST_CASE("evaluate: monomial diagonals at zeta = 1") {
  const auto f = diag_conj_monomials({2, 6});
  const Mat v = f.evaluate(1.0);
  CHECK((v - Mat::Identity(2, 2)).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("evaluate: conjugate monomial and geometric rational") {
  const auto zbar = CircleFunction::scalar_monomial(-1);
  CHECK(std::abs(zbar.evaluate(cplx(0, 1))(0, 0) - cplx(0, -1)) < 1e-14);

  Mat one = Mat::Identity(1, 1);
  const auto geo = CircleFunction::rational(1, 1, {{0, one}}, {1.0, -0.5});
  CHECK(std::abs(geo.evaluate(1.0)(0, 0) - 2.0) < 1e-14);
}

TEST_CASE("evaluate: rejects off-circle arguments") {
  const auto f = CircleFunction::scalar_monomial(-1);
  CHECK_THROWS_AS((void)f.evaluate(cplx(1.5, 0.0)), error);
  try {
    (void)f.evaluate(cplx(1.5, 0.0));
  } catch (const error& e) {
    CHECK(e.code() == errc::non_unit_argument);
  }
}

TEST_CASE("rational construction rejects denominators with circle roots") {
  Mat one = Mat::Identity(1, 1);
  CHECK_THROWS_AS(
      (void)CircleFunction::rational(1, 1, {{0, one}}, {1.0, -1.0}), // root at z = 1
      error);
}

TEST_CASE("evaluate: denominator guard at a near-circle root off the sampling comb") {
  // root at (1 + 1e-13) e^{i pi/1024} passes the sampled construction check
  // but trips the evaluation guard exactly at its own angle
  const double ang = pi / 1024;
  const cplx root = (1.0 + 1e-13) * cplx(std::cos(ang), std::sin(ang));
  Mat one = Mat::Identity(1, 1);
  const auto f = CircleFunction::rational(1, 1, {{0, one}}, {-root, 1.0});
  const cplx zeta{std::cos(ang), std::sin(ang)};
  CHECK_THROWS_AS((void)f.evaluate_unchecked(zeta), error);
}

TEST_CASE("fourier: scalar monomial reads off exactly") {
  const auto f = CircleFunction::scalar_monomial(-2);
  const auto coeffs = fourier_coefficients(f, -4, 4, grid, tol);
  for (const auto& [k, m] : coeffs) {
    if (k == -2)
      CHECK(std::abs(m(0, 0) - 1.0) < 1e-15);
    else
      CHECK(m.norm() < 1e-15);
  }
}

TEST_CASE("fourier: geometric series of 1/(1 - z/2)") {
  Mat one = Mat::Identity(1, 1);
  const auto f = CircleFunction::rational(1, 1, {{0, one}}, {1.0, -0.5});
  const auto coeffs = fourier_coefficients(f, -5, 10, grid, tol);
  for (const auto& [k, m] : coeffs) {
    const double expected = k >= 0 ? std::pow(2.0, -k) : 0.0;
    CHECK(std::abs(m(0, 0) - expected) < 1e-11);
  }
}

TEST_CASE("fourier: matrix coefficient read-off") {
  const auto f = diag_conj_monomials({2, 6});
  const auto coeffs = fourier_coefficients(f, -6, -6, grid, tol);
  Mat expected = Mat::Zero(2, 2);
  expected(1, 1) = 1.0;
  CHECK((coeffs.at(-6) - expected).norm() < 1e-15);
}

TEST_CASE("fourier: grid too coarse") {
  const auto f = CircleFunction::scalar_monomial(-2);
  CHECK_THROWS_AS((void)fourier_coefficients(f, -40, 40, GridSpec{64, 0.0}, tol), error);
}

TEST_CASE("fourier/evaluation roundtrip reconstructs samples to 1e-12") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_laurent(2, 3, 8, rng);
    const auto coeffs = fourier_coefficients(f, f.min_power(), f.max_power(), grid, tol);
    double worst = 0.0;
    for (int j = 0; j < grid.samples; j += 7) {
      const cplx zeta = grid.point(j);
      Mat acc = Mat::Zero(2, 3);
      for (const auto& [k, m] : coeffs) acc += m * std::pow(zeta, k);
      worst = std::max(worst, (acc - f.evaluate_unchecked(zeta)).norm());
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("multiply: zbar z cancels; identity is neutral") {
  const auto zbar = CircleFunction::scalar_monomial(-1);
  const auto z = CircleFunction::scalar_monomial(1);
  const auto prod = multiply(zbar, z);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms()[0].power == 0);
  CHECK(std::abs(prod.terms()[0].coeff(0, 0) - 1.0) < 1e-15);

  std::mt19937 rng(11);
  const auto a = random_laurent(3, 3, 5, rng);
  CHECK(max_grid_distance(multiply(a, CircleFunction::identity(3)), a, grid) < 1e-14);
}

TEST_CASE("multiply: conjugating diag(zbar^6, zbar^2) by the swap recovers diag(zbar^2, zbar^6)") {
  Mat p(2, 2);
  p << 0, 1, 1, 0;
  const auto swap = CircleFunction::constant(p);
  const auto inner = diag_conj_monomials({6, 2});
  const auto full = multiply(multiply(swap, inner), swap);
  CHECK(max_grid_distance(full, diag_conj_monomials({2, 6}), grid) < 1e-15);
}

TEST_CASE("adjoint: conjugate monomials and constants") {
  const auto f = CircleFunction::monomial(-1, Mat::Identity(2, 2));
  const auto a = adjoint(f);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].power == 1);

  Mat u(2, 2);
  u << cplx(0, 1), 0, 0, cplx(0, -1);
  const auto cu = adjoint(CircleFunction::constant(u));
  CHECK((cu.evaluate(1.0) - Mat(u.adjoint())).norm() < 1e-15);
}

TEST_CASE("adjoint is an involution and certifies unitarity") {
  std::mt19937 rng(3);
  const auto f = random_laurent(2, 2, 6, rng);
  CHECK(max_grid_distance(adjoint(adjoint(f)), f, grid) < 1e-14);

  const auto v = sqrt2_right_factor();
  CHECK(max_grid_distance(multiply(adjoint(v), v), CircleFunction::identity(2), grid) < 1e-14);
}

TEST_CASE("adjoint of a rational symbol matches pointwise conjugate transpose") {
  const auto b = conj_blaschke(cplx(0.3, 0.1));
  const auto a = adjoint(b);
  for (int j = 0; j < grid.samples; j += 31) {
    const cplx zeta = grid.point(j);
    const Mat lhs = a.evaluate_unchecked(zeta);
    const Mat rhs = b.evaluate_unchecked(zeta).adjoint();
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("is_unitary_valued: reference factors") {
  CHECK(is_unitary_valued(sqrt2_right_factor(), grid, tol).unitary);
  CHECK(is_unitary_valued(diag_conj_monomials({2, 6}), grid, tol).unitary);

  Mat d(2, 2);
  d << 0.5, 0, 0, 1.0;
  const auto rep = is_unitary_valued(CircleFunction::constant(d), grid, tol);
  CHECK_FALSE(rep.unitary);
  CHECK(rep.max_deviation == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("is_inner: analytic isometric columns") {
  const double s2 = std::sqrt(2.0);
  Mat c0 = Mat::Zero(2, 1), c1 = Mat::Zero(2, 1);
  c1(0, 0) = 1.0 / s2;
  c0(1, 0) = 1.0 / s2;
  const auto v = CircleFunction::laurent(2, 1, {{0, c0}, {1, c1}});
  CHECK(is_inner(v, grid, tol).inner);

  const auto bad = CircleFunction::monomial(-1, Mat::Identity(2, 2));
  const auto rep = is_inner(bad, grid, tol);
  CHECK_FALSE(rep.inner);
  CHECK(rep.reason == InnerFailure::not_analytic);

  Mat e1 = Mat::Zero(2, 1);
  e1(0, 0) = 1.0;
  CHECK(is_inner(CircleFunction::constant(e1), grid, tol).inner);
}

TEST_CASE("inner implies vanishing negative coefficients") {
  const double s2 = std::sqrt(2.0);
  Mat c0 = Mat::Zero(2, 1), c1 = Mat::Zero(2, 1);
  c1(0, 0) = 1.0 / s2;
  c0(1, 0) = 1.0 / s2;
  const auto v = CircleFunction::laurent(2, 1, {{0, c0}, {1, c1}});
  REQUIRE(is_inner(v, grid, tol).inner);
  const auto coeffs = fourier_coefficients(v, -8, -1, grid, tol);
  for (const auto& [k, m] : coeffs) CHECK(m.norm() <= tol.coeff_tol);
}

TEST_CASE("is_co_outer_polynomial: columns") {
  const double s2 = std::sqrt(2.0);
  {
    Mat c0 = Mat::Zero(2, 1), c1 = Mat::Zero(2, 1);
    c1(0, 0) = 1.0 / s2;
    c0(1, 0) = 1.0 / s2;
    CHECK(is_co_outer_polynomial(CircleFunction::laurent(2, 1, {{0, c0}, {1, c1}}), tol));
  }
  {
    // (z, z^2)^t: common inner factor z
    Mat c1 = Mat::Zero(2, 1), c2 = Mat::Zero(2, 1);
    c1(0, 0) = 1.0;
    c2(1, 0) = 1.0;
    CHECK_FALSE(is_co_outer_polynomial(CircleFunction::laurent(2, 1, {{1, c1}, {2, c2}}), tol));
  }
  {
    // theta = (-1/s2, z/s2)^t: 1 x 1 minors share no root
    Mat c0 = Mat::Zero(2, 1), c1 = Mat::Zero(2, 1);
    c0(0, 0) = -1.0 / s2;
    c1(1, 0) = 1.0 / s2;
    CHECK(is_co_outer_polynomial(CircleFunction::laurent(2, 1, {{0, c0}, {1, c1}}), tol));
  }
}

TEST_CASE("is_co_outer_polynomial: rejects non-polynomial input") {
  CHECK_THROWS_AS((void)is_co_outer_polynomial(CircleFunction::scalar_monomial(-1), tol), error);
  CHECK_THROWS_AS((void)is_co_outer_polynomial(conj_blaschke(0.3), tol), error);
}

TEST_CASE("winding: monomials, constants, Blaschke conjugates") {
  CHECK(winding_number(CircleFunction::scalar_monomial(-3), grid) == -3);
  CHECK(winding_number(CircleFunction::scalar_monomial(0, std::polar(1.0, pi / 4)), grid) == 0);
  CHECK(winding_number(conj_blaschke(0.3), grid) == -1);
}

TEST_CASE("winding: rejects symbols that dip toward zero") {
  Mat half = Mat::Identity(1, 1) * 0.5;
  Mat quarter = Mat::Identity(1, 1) * 0.45;
  const auto u = CircleFunction::laurent(1, 1, {{0, half}, {-1, quarter}});
  CHECK_THROWS_AS((void)winding_number(u, grid), error);
}

TEST_CASE("winding additivity over random unimodular products") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_unimodular(rng);
    const auto v = random_unimodular(rng);
    const int wu = winding_number(u, grid);
    const int wv = winding_number(v, grid);
    CHECK(winding_number(multiply(u, v), grid) == wu + wv);
  }
}

TEST_CASE("toeplitz_index: monomials are exact") {
  CHECK(toeplitz_index(CircleFunction::scalar_monomial(-6), grid, tol) == 6);
  CHECK(toeplitz_index(CircleFunction::scalar_monomial(2), grid, tol) == -2);
  for (int k = -5; k <= 5; ++k)
    CHECK(toeplitz_index(CircleFunction::scalar_monomial(k), grid, tol) == -k);
}

TEST_CASE("toeplitz_index: conjugate Blaschke composite") {
  const auto u = multiply(CircleFunction::scalar_monomial(-1), conj_blaschke(0.3));
  CHECK(toeplitz_index(u, grid, tol) == 2);
}

TEST_CASE("toeplitz_index: rejects non-unimodular symbols") {
  CHECK_THROWS_AS((void)toeplitz_index(CircleFunction::scalar_monomial(-1, 0.5), grid, tol),
                  error);
}
