#include <tfact/circle_fn.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace tfact {

namespace {

// scalar polynomials, coefficients ascending in the power of z
using Poly = std::vector<cplx>;

Poly poly_trim(Poly p, double floor = 0.0) {
  double scale = 0.0;
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  const double cut = std::max(floor, 1e-12 * scale);
  while (!p.empty() && std::abs(p.back()) <= cut) p.pop_back();
  return p;
}

bool poly_is_zero(const Poly& p) { return poly_trim(p).empty(); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

cplx poly_eval(const Poly& p, cplx z) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<cplx> poly_roots(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  if (p.size() <= 1) return {};
  const int deg = static_cast<int>(p.size()) - 1;
  Mat companion = Mat::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -p[i] / p[deg];
    if (i > 0) companion(i, i - 1) = 1.0;
  }
  Eigen::ComplexEigenSolver<Mat> es(companion, /*computeEigenvectors=*/false);
  std::vector<cplx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

// geometric decay ratio of the Fourier coefficients of 1/q: the largest of
// |root| for roots inside the disk and 1/|root| for roots outside
double denominator_decay_ratio(const std::vector<cplx>& denom) {
  double ratio = 0.0;
  for (const auto& root : poly_roots(Poly(denom.begin(), denom.end()))) {
    const double m = std::abs(root);
    ratio = std::max(ratio, m < 1.0 ? m : 1.0 / m);
  }
  return ratio;
}

Poly entry_poly(const CircleFunction& f, int row, int col) {
  Poly p;
  for (const auto& t : f.terms()) {
    if (t.power < 0) continue;
    if (static_cast<int>(p.size()) <= t.power) p.resize(t.power + 1, cplx(0.0));
    p[t.power] = t.coeff(row, col);
  }
  return p;
}

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m) {
  const size_t k = m.size();
  if (k == 0) return {cplx(1.0)};
  if (k == 1) return m[0][0];
  Poly det;
  for (size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Poly>> minor_m;
    minor_m.reserve(k - 1);
    for (size_t r = 1; r < k; ++r) {
      std::vector<Poly> row;
      row.reserve(k - 1);
      for (size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor_m.push_back(std::move(row));
    }
    Poly term = poly_mul(m[0][j], poly_matrix_det(minor_m));
    if (j % 2 == 1)
      for (auto& c : term) c = -c;
    det = poly_add(det, term);
  }
  return det;
}

// do the polynomials share a root with |root| <= 1 + eq_tol?
bool common_root_in_closed_disk(const std::vector<Poly>& polys, double eq_tol) {
  std::vector<Poly> nonzero;
  for (const auto& p : polys)
    if (!poly_is_zero(p)) nonzero.push_back(poly_trim(p));
  if (nonzero.empty()) return true; // identically zero: every point is a common root
  if (nonzero.front().size() == 1) return false; // nonzero constant: no roots at all
  // a common root must be a root of the first polynomial; match the
  // remaining root sets against its candidates
  const double match_tol = 1e-7;
  for (const auto& cand : poly_roots(nonzero.front())) {
    if (std::abs(cand) > 1.0 + eq_tol) continue;
    bool everywhere = true;
    for (size_t j = 1; j < nonzero.size() && everywhere; ++j) {
      bool hit = false;
      for (const auto& r : poly_roots(nonzero[j]))
        if (std::abs(cand - r) <= match_tol * std::max(1.0, std::abs(cand))) {
          hit = true;
          break;
        }
      everywhere = hit;
    }
    if (everywhere) return true;
  }
  return false;
}

void check_shapes_equal(const CircleFunction& f, const CircleFunction& g, const char* op) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    fail(errc::shape_mismatch, std::string(op) + ": operand shapes differ");
}

} // namespace

// ---- CircleFunction ------------------------------------------------------

void CircleFunction::normalize() {
  std::map<int, Mat> merged;
  for (auto& t : terms_) {
    if (t.coeff.rows() != rows_ || t.coeff.cols() != cols_)
      fail(errc::shape_mismatch, "coefficient matrix shape does not match function shape");
    auto [it, inserted] = merged.emplace(t.power, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  terms_.clear();
  for (auto& [p, m] : merged) {
    if (m.isZero(0.0)) continue;
    terms_.push_back({p, std::move(m)});
  }
}

CircleFunction CircleFunction::laurent(int rows, int cols, std::vector<LaurentTerm> terms) {
  if (rows < 1 || cols < 1) fail(errc::invariant_violation, "rows and cols must be positive");
  CircleFunction f;
  f.rows_ = rows;
  f.cols_ = cols;
  f.kind_ = Kind::laurent;
  f.terms_ = std::move(terms);
  f.normalize();
  return f;
}

CircleFunction CircleFunction::rational(int rows, int cols, std::vector<LaurentTerm> numerator,
                                        std::vector<cplx> denominator) {
  if (rows < 1 || cols < 1) fail(errc::invariant_violation, "rows and cols must be positive");
  CircleFunction f;
  f.rows_ = rows;
  f.cols_ = cols;
  f.kind_ = Kind::rational;
  f.terms_ = std::move(numerator);
  f.normalize();
  for (const auto& t : f.terms_)
    if (t.power < 0)
      fail(errc::invariant_violation, "rational numerator must be a matrix polynomial");
  f.denom_ = poly_trim(std::move(denominator));
  if (f.denom_.empty()) fail(errc::invariant_violation, "denominator is identically zero");
  // bounded away from zero on |z| = 1, checked by sampling
  const int probes = 1024;
  double min_q = std::numeric_limits<double>::max();
  for (int j = 0; j < probes; ++j) {
    const double theta = 2.0 * pi * j / probes;
    min_q = std::min(min_q, std::abs(poly_eval(f.denom_, {std::cos(theta), std::sin(theta)})));
  }
  if (min_q <= 1e-9)
    fail(errc::invariant_violation, "denominator has a root on (or too close to) the unit circle");
  return f;
}

CircleFunction CircleFunction::constant(const Mat& value) {
  return laurent(static_cast<int>(value.rows()), static_cast<int>(value.cols()), {{0, value}});
}

CircleFunction CircleFunction::zero(int rows, int cols) { return laurent(rows, cols, {}); }

CircleFunction CircleFunction::identity(int n) { return constant(Mat::Identity(n, n)); }

CircleFunction CircleFunction::scalar_monomial(int power, cplx coeff) {
  Mat m(1, 1);
  m(0, 0) = coeff;
  return laurent(1, 1, {{power, m}});
}

CircleFunction CircleFunction::monomial(int power, const Mat& coeff) {
  return laurent(static_cast<int>(coeff.rows()), static_cast<int>(coeff.cols()),
                 {{power, coeff}});
}

int CircleFunction::min_power() const { return terms_.empty() ? 0 : terms_.front().power; }
int CircleFunction::max_power() const { return terms_.empty() ? 0 : terms_.back().power; }

int CircleFunction::max_negative_degree() const {
  if (kind_ != Kind::laurent) fail(errc::unsupported_representation, "laurent representation required");
  return std::max(0, -min_power());
}

Mat CircleFunction::evaluate_unchecked(cplx zeta) const {
  Mat acc = Mat::Zero(rows_, cols_);
  for (const auto& t : terms_) acc += t.coeff * std::pow(zeta, t.power);
  if (kind_ == Kind::rational) {
    const cplx q = poly_eval(denom_, zeta);
    if (std::abs(q) < 1e-9) fail(errc::denominator_near_zero, "denominator vanishes at argument");
    acc /= q;
  }
  return acc;
}

Mat CircleFunction::evaluate(cplx zeta, const ToleranceConfig& tol) const {
  if (std::abs(std::abs(zeta) - 1.0) > tol.eq_tol)
    fail(errc::non_unit_argument, "argument is not on the unit circle");
  return evaluate_unchecked(zeta);
}

Mat CircleFunction::coefficient(int power) const {
  if (kind_ != Kind::laurent)
    fail(errc::unsupported_representation, "coefficient read-off requires laurent representation");
  for (const auto& t : terms_)
    if (t.power == power) return t.coeff;
  return Mat::Zero(rows_, cols_);
}

// ---- algebra --------------------------------------------------------------

CircleFunction multiply(const CircleFunction& f, const CircleFunction& g) {
  if (f.cols() != g.rows()) fail(errc::shape_mismatch, "multiply: f.cols != g.rows");
  if (f.is_laurent() && g.is_laurent()) {
    std::vector<LaurentTerm> out;
    for (const auto& a : f.terms())
      for (const auto& b : g.terms()) out.push_back({a.power + b.power, a.coeff * b.coeff});
    return CircleFunction::laurent(f.rows(), g.cols(), std::move(out));
  }
  // rational path: shift laurent factors into polynomial-over-z^d form first
  auto as_rational = [](const CircleFunction& h) {
    if (!h.is_laurent()) return h;
    const int d = h.max_negative_degree();
    std::vector<LaurentTerm> num;
    for (const auto& t : h.terms()) num.push_back({t.power + d, t.coeff});
    std::vector<cplx> q(d + 1, cplx(0.0));
    q[d] = 1.0;
    return CircleFunction::rational(h.rows(), h.cols(), std::move(num), std::move(q));
  };
  const CircleFunction fr = as_rational(f), gr = as_rational(g);
  std::vector<LaurentTerm> out;
  for (const auto& a : fr.terms())
    for (const auto& b : gr.terms()) out.push_back({a.power + b.power, a.coeff * b.coeff});
  Poly q = poly_mul(Poly(fr.denominator().begin(), fr.denominator().end()),
                    Poly(gr.denominator().begin(), gr.denominator().end()));
  return CircleFunction::rational(f.rows(), g.cols(), std::move(out), std::move(q));
}

CircleFunction add(const CircleFunction& f, const CircleFunction& g) {
  check_shapes_equal(f, g, "add");
  if (f.is_laurent() && g.is_laurent()) {
    std::vector<LaurentTerm> out(f.terms());
    for (const auto& t : g.terms()) out.push_back(t);
    return CircleFunction::laurent(f.rows(), f.cols(), std::move(out));
  }
  auto as_rational = [](const CircleFunction& h) {
    if (!h.is_laurent()) return h;
    const int d = h.max_negative_degree();
    std::vector<LaurentTerm> num;
    for (const auto& t : h.terms()) num.push_back({t.power + d, t.coeff});
    std::vector<cplx> q(d + 1, cplx(0.0));
    q[d] = 1.0;
    return CircleFunction::rational(h.rows(), h.cols(), std::move(num), std::move(q));
  };
  const CircleFunction fr = as_rational(f), gr = as_rational(g);
  const Poly qf(fr.denominator().begin(), fr.denominator().end());
  const Poly qg(gr.denominator().begin(), gr.denominator().end());
  std::vector<LaurentTerm> out;
  for (const auto& a : fr.terms())
    for (size_t j = 0; j < qg.size(); ++j)
      if (qg[j] != cplx(0.0)) out.push_back({a.power + static_cast<int>(j), a.coeff * qg[j]});
  for (const auto& b : gr.terms())
    for (size_t j = 0; j < qf.size(); ++j)
      if (qf[j] != cplx(0.0)) out.push_back({b.power + static_cast<int>(j), b.coeff * qf[j]});
  return CircleFunction::rational(f.rows(), f.cols(), std::move(out), poly_mul(qf, qg));
}

CircleFunction scale(const CircleFunction& f, cplx factor) {
  std::vector<LaurentTerm> out;
  for (const auto& t : f.terms()) out.push_back({t.power, t.coeff * factor});
  if (f.is_laurent()) return CircleFunction::laurent(f.rows(), f.cols(), std::move(out));
  return CircleFunction::rational(f.rows(), f.cols(), std::move(out), f.denominator());
}

CircleFunction transpose(const CircleFunction& f) {
  std::vector<LaurentTerm> out;
  for (const auto& t : f.terms()) out.push_back({t.power, t.coeff.transpose()});
  if (f.is_laurent()) return CircleFunction::laurent(f.cols(), f.rows(), std::move(out));
  return CircleFunction::rational(f.cols(), f.rows(), std::move(out), f.denominator());
}

CircleFunction conj_fn(const CircleFunction& f) {
  if (f.is_laurent()) {
    std::vector<LaurentTerm> out;
    for (const auto& t : f.terms()) out.push_back({-t.power, t.coeff.conjugate()});
    return CircleFunction::laurent(f.rows(), f.cols(), std::move(out));
  }
  // conj(N/q)(z) = (sum conj(N_k) z^(d-k)) / (sum conj(q_j) z^(d-j)) on |z| = 1
  const int deg_q = static_cast<int>(f.denominator().size()) - 1;
  const int d = std::max(f.max_power(), deg_q);
  std::vector<LaurentTerm> num;
  for (const auto& t : f.terms()) num.push_back({d - t.power, t.coeff.conjugate()});
  std::vector<cplx> q(d + 1, cplx(0.0));
  for (int j = 0; j <= deg_q; ++j) q[d - j] = std::conj(f.denominator()[j]);
  return CircleFunction::rational(f.rows(), f.cols(), std::move(num), std::move(q));
}

CircleFunction adjoint(const CircleFunction& f) { return conj_fn(transpose(f)); }

CircleFunction shift(const CircleFunction& f, int k) {
  std::vector<LaurentTerm> out;
  for (const auto& t : f.terms()) out.push_back({t.power + k, t.coeff});
  if (f.is_laurent()) return CircleFunction::laurent(f.rows(), f.cols(), std::move(out));
  if (k < 0) {
    // keep the numerator polynomial: fold z^-k into the denominator instead
    for (auto& t : out) t.power -= k;
    Poly zk(static_cast<size_t>(-k) + 1, cplx(0.0));
    zk.back() = 1.0;
    return CircleFunction::rational(f.rows(), f.cols(), std::move(out),
                                    poly_mul(Poly(f.denominator().begin(), f.denominator().end()), zk));
  }
  return CircleFunction::rational(f.rows(), f.cols(), std::move(out), f.denominator());
}

CircleFunction embed(const CircleFunction& f, int R, int C, int ro, int co) {
  if (ro < 0 || co < 0 || ro + f.rows() > R || co + f.cols() > C)
    fail(errc::shape_mismatch, "embed: block does not fit");
  std::vector<LaurentTerm> out;
  for (const auto& t : f.terms()) {
    Mat big = Mat::Zero(R, C);
    big.block(ro, co, f.rows(), f.cols()) = t.coeff;
    out.push_back({t.power, std::move(big)});
  }
  if (f.is_laurent()) return CircleFunction::laurent(R, C, std::move(out));
  return CircleFunction::rational(R, C, std::move(out), f.denominator());
}

CircleFunction hconcat(const CircleFunction& f, const CircleFunction& g) {
  if (f.rows() != g.rows()) fail(errc::shape_mismatch, "hconcat: row counts differ");
  const int C = f.cols() + g.cols();
  return add(embed(f, f.rows(), C, 0, 0), embed(g, f.rows(), C, 0, f.cols()));
}

CircleFunction direct_sum(const CircleFunction& f, const CircleFunction& g) {
  const int R = f.rows() + g.rows(), C = f.cols() + g.cols();
  return add(embed(f, R, C, 0, 0), embed(g, R, C, f.rows(), f.cols()));
}

// ---- sampling and Fourier analysis ----------------------------------------

std::vector<Mat> sample_on_grid(const CircleFunction& f, const GridSpec& grid) {
  grid.validate();
  std::vector<Mat> samples;
  samples.reserve(grid.samples);
  for (int j = 0; j < grid.samples; ++j) samples.push_back(f.evaluate_unchecked(grid.point(j)));
  return samples;
}

namespace {

// worst-case aliasing error of the sampled DFT for a rational symbol,
// per requested coefficient
double rational_alias_bound(const CircleFunction& f, const std::vector<Mat>& samples,
                            int worst_abs_power, int M) {
  const double r = denominator_decay_ratio(f.denominator());
  if (r == 0.0) {
    // polynomial over a root-free constant: finite spectrum, no tail beyond
    // the numerator degree
    return (M > f.max_power() + worst_abs_power) ? 0.0
                                                 : std::numeric_limits<double>::infinity();
  }
  double C = 0.0;
  for (const auto& s : samples) C = std::max(C, s.norm());
  const int d0 = f.max_power() + static_cast<int>(f.denominator().size()) - 1;
  const int margin = M - worst_abs_power - d0;
  if (margin <= 0) return std::numeric_limits<double>::infinity();
  return 2.0 * C * std::pow(r, margin) / (1.0 - r);
}

} // namespace

std::map<int, Mat> fourier_coefficients(const CircleFunction& f, int k_min, int k_max,
                                        const GridSpec& grid, const ToleranceConfig& tol) {
  grid.validate();
  if (k_min > k_max) fail(errc::invariant_violation, "fourier_coefficients: empty power range");
  if (grid.samples < 2 * (k_max - k_min) + 2)
    fail(errc::grid_too_coarse, "grid does not satisfy M >= 2 (k_max - k_min) + 2");

  std::map<int, Mat> out;
  if (f.is_laurent()) {
    for (int k = k_min; k <= k_max; ++k) out.emplace(k, f.coefficient(k));
    return out;
  }

  const auto samples = sample_on_grid(f, grid);
  const int M = grid.samples;
  const int worst = std::max(std::abs(k_min), std::abs(k_max));
  if (rational_alias_bound(f, samples, worst, M) > tol.coeff_tol)
    fail(errc::grid_too_coarse, "aliasing tail bound exceeds coeff_tol; refine the grid");
  for (int k = k_min; k <= k_max; ++k) {
    Mat acc = Mat::Zero(f.rows(), f.cols());
    for (int j = 0; j < M; ++j) acc += samples[j] * std::pow(std::conj(grid.point(j)), k);
    out.emplace(k, acc / static_cast<double>(M));
  }
  return out;
}

double max_negative_coefficient_norm(const CircleFunction& f, const GridSpec& grid,
                                     const ToleranceConfig& tol) {
  if (f.is_laurent()) {
    double worst = 0.0;
    for (const auto& t : f.terms())
      if (t.power < 0) worst = std::max(worst, t.coeff.norm());
    return worst;
  }
  const double r = denominator_decay_ratio(f.denominator());
  if (r == 0.0) return 0.0; // polynomial numerator over constant denominator
  const auto samples = sample_on_grid(f, grid);
  double C = 0.0;
  for (const auto& s : samples) C = std::max(C, s.norm());
  if (C == 0.0) return 0.0;
  const int d0 = f.max_power() + static_cast<int>(f.denominator().size()) - 1;
  // window depth at which the geometric tail drops below coeff_tol
  int K = d0 + 1;
  while (2.0 * C * std::pow(r, K - d0) / (1.0 - r) > tol.coeff_tol && K < grid.samples / 2) ++K;
  const auto coeffs = fourier_coefficients(f, -K, -1, grid, tol);
  double worst = 2.0 * C * std::pow(r, K - d0) / (1.0 - r); // remaining tail
  for (const auto& [k, m] : coeffs) worst = std::max(worst, m.norm());
  return worst;
}

double max_grid_distance(const CircleFunction& f, const CircleFunction& g, const GridSpec& grid) {
  check_shapes_equal(f, g, "max_grid_distance");
  const auto sf = sample_on_grid(f, grid), sg = sample_on_grid(g, grid);
  double worst = 0.0;
  for (size_t j = 0; j < sf.size(); ++j) worst = std::max(worst, (sf[j] - sg[j]).norm());
  return worst;
}

double sup_norm_on_grid(const CircleFunction& f, const GridSpec& grid) {
  double worst = 0.0;
  for (const auto& s : sample_on_grid(f, grid)) worst = std::max(worst, operator_norm(s));
  return worst;
}

// ---- predicates ------------------------------------------------------------

UnitaryReport is_unitary_valued(const CircleFunction& f, const GridSpec& grid,
                                const ToleranceConfig& tol) {
  if (f.rows() != f.cols()) fail(errc::shape_mismatch, "is_unitary_valued: function not square");
  const Mat eye = Mat::Identity(f.cols(), f.cols());
  double worst = 0.0;
  for (const auto& s : sample_on_grid(f, grid))
    worst = std::max(worst, operator_norm(s.adjoint() * s - eye));
  return {worst <= tol.eq_tol, worst};
}

InnerReport is_inner(const CircleFunction& f, const GridSpec& grid, const ToleranceConfig& tol) {
  if (f.rows() < f.cols()) fail(errc::shape_mismatch, "is_inner: more columns than rows");
  InnerReport rep;
  rep.max_negative_coeff = max_negative_coefficient_norm(f, grid, tol);
  const Mat eye = Mat::Identity(f.cols(), f.cols());
  for (const auto& s : sample_on_grid(f, grid))
    rep.max_isometry_deviation =
        std::max(rep.max_isometry_deviation, operator_norm(s.adjoint() * s - eye));
  if (rep.max_negative_coeff > tol.coeff_tol)
    rep.reason = InnerFailure::not_analytic;
  else if (rep.max_isometry_deviation > tol.eq_tol)
    rep.reason = InnerFailure::not_isometric;
  rep.inner = rep.reason == InnerFailure::none;
  return rep;
}

bool is_co_outer_polynomial(const CircleFunction& f, const ToleranceConfig& tol) {
  if (!f.is_laurent() || f.min_power() < 0)
    fail(errc::unsupported_representation,
         "co-outer test requires a matrix polynomial (nonnegative powers)");
  const int n = f.rows(), c = f.cols();
  if (c == 1) {
    std::vector<Poly> entries;
    for (int i = 0; i < n; ++i) entries.push_back(entry_poly(f, i, 0));
    return !common_root_in_closed_disk(entries, tol.eq_tol);
  }
  if (c != n - 1)
    fail(errc::shape_mismatch, "co-outer test expects a column or an n x (n-1) complement");
  // maximal minors of f^t: drop one column of the (n-1) x n transpose at a time
  std::vector<Poly> minors;
  for (int drop = 0; drop < n; ++drop) {
    std::vector<std::vector<Poly>> sub(c, std::vector<Poly>(c));
    for (int i = 0; i < c; ++i) {
      int cc = 0;
      for (int j = 0; j < n; ++j) {
        if (j == drop) continue;
        sub[i][cc++] = entry_poly(f, j, i); // (f^t)(i, j) = f(j, i)
      }
    }
    minors.push_back(poly_matrix_det(sub));
  }
  return !common_root_in_closed_disk(minors, tol.eq_tol);
}

int winding_number(const CircleFunction& u, const GridSpec& grid) {
  if (!u.is_scalar()) fail(errc::shape_mismatch, "winding_number: scalar symbol required");
  const auto samples = sample_on_grid(u, grid);
  const int M = grid.samples;
  for (const auto& s : samples)
    if (std::abs(s(0, 0)) <= 0.5)
      fail(errc::not_bounded_away_from_zero, "|u| <= 0.5 somewhere on the grid");
  double total = 0.0;
  for (int j = 0; j < M; ++j) {
    const cplx a = samples[j](0, 0);
    const cplx b = samples[(j + 1) % M](0, 0);
    total += std::arg(b / a);
  }
  const double raw = total / (2.0 * pi);
  const double snapped = std::round(raw);
  if (std::abs(raw - snapped) > 0.01)
    fail(errc::non_integer_winding, "unwrapped winding is not close to an integer; grid undersampled");
  return static_cast<int>(snapped);
}

int toeplitz_index(const CircleFunction& u, const GridSpec& grid, const ToleranceConfig& tol) {
  if (!u.is_scalar()) fail(errc::shape_mismatch, "toeplitz_index: scalar symbol required");
  for (const auto& s : sample_on_grid(u, grid))
    if (std::abs(std::abs(s(0, 0)) - 1.0) > tol.eq_tol)
      fail(errc::not_unimodular, "symbol is not unimodular on the grid");
  return -winding_number(u, grid);
}

} // namespace tfact
