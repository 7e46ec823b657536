#include <tfact/thematic.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <tfact/hankel.hpp>

namespace tfact {

namespace {

std::string block_label(BlockSide side, int level) {
  return (side == BlockSide::left ? "left_block_" : "right_block_") + std::to_string(level);
}

// right-form matrix (v | conj(theta)) regardless of side; unitarity and the
// component predicates are side-independent
CircleFunction right_form(const ThematicBlock& b) {
  if (!b.theta) return b.v;
  return hconcat(b.v, conj_fn(*b.theta));
}

int popcount(unsigned x) {
  int c = 0;
  for (; x; x >>= 1) c += x & 1;
  return c;
}

// analyticity of the minors of the assembled block that involve the first
// column, checked by sampling each minor and reading its negative Fourier
// coefficients
CheckResult minors_check(const CircleFunction& assembled, const GridSpec& grid,
                         const ToleranceConfig& tol) {
  CheckResult res{"first_column_minors", true, 0.0, ""};
  const int n = assembled.rows();
  if (n == 1 || n > 4) {
    res.detail = "skipped";
    return res;
  }
  const int spread = assembled.max_power() - assembled.min_power();
  if (grid.samples < 2 * n * spread + 2) {
    res.detail = "skipped: grid too coarse for the minor degree range";
    return res;
  }
  const auto samples = sample_on_grid(assembled, grid);
  const int M = grid.samples;
  const int lo = n * std::min(0, assembled.min_power());
  for (unsigned rmask = 1; rmask < (1u << n); ++rmask) {
    for (unsigned cmask = 1; cmask < (1u << n); ++cmask) {
      if (!(cmask & 1u)) continue; // must involve the first column
      const int k = popcount(rmask);
      if (popcount(cmask) != k) continue;
      std::vector<int> rsel, csel;
      for (int i = 0; i < n; ++i) {
        if (rmask & (1u << i)) rsel.push_back(i);
        if (cmask & (1u << i)) csel.push_back(i);
      }
      std::vector<cplx> dets(M);
      for (int j = 0; j < M; ++j) {
        Mat sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = samples[j](rsel[a], csel[b]);
        dets[j] = sub.determinant();
      }
      for (int p = lo; p < 0; ++p) {
        cplx acc = 0.0;
        for (int j = 0; j < M; ++j) acc += dets[j] * std::pow(std::conj(grid.point(j)), p);
        const double mag = std::abs(acc) / M;
        res.deviation = std::max(res.deviation, mag);
      }
    }
  }
  if (res.deviation > tol.coeff_tol) {
    res.ok = false;
    res.detail = "a first-column minor has nonvanishing negative coefficients";
  }
  return res;
}

void structural_check(const FactorBundle& b) {
  const int r = b.r();
  if (r < 1) fail(errc::invariant_violation, "bundle has no diagonal slots");
  if (static_cast<int>(b.left.size()) != r || static_cast<int>(b.right.size()) != r)
    fail(errc::invariant_violation, "bundle block lists must have one entry per diagonal slot");
  if (b.residual) {
    if (r >= std::min(b.m, b.n))
      fail(errc::invariant_violation, "partial bundle requires r < min(m, n)");
    if (b.residual->rows() != b.m - r || b.residual->cols() != b.n - r)
      fail(errc::shape_mismatch, "residual must be (m-r) x (n-r)");
  } else if (r != std::min(b.m, b.n)) {
    fail(errc::invariant_violation, "full bundle requires r = min(m, n)");
  }
  for (int j = 0; j < r; ++j) {
    const auto& w = b.left[j];
    const auto& v = b.right[j];
    if (w.offset != j || v.offset != j)
      fail(errc::invariant_violation, "lifted block offsets must equal their level");
    if (w.ambient() != b.m || v.ambient() != b.n)
      fail(errc::shape_mismatch, "lifted block sizes must fill the ambient dimension");
    if (w.inner.side != BlockSide::left || v.inner.side != BlockSide::right)
      fail(errc::invariant_violation, "bundle sides are inconsistent");
    if (!b.diag[j].u.is_scalar())
      fail(errc::shape_mismatch, "diagonal symbols must be scalar");
    if (b.diag[j].t < 0)
      fail(errc::invariant_violation, "diagonal values must be nonnegative");
  }
}

} // namespace

CircleFunction ThematicBlock::assembled() const {
  if (size != static_cast<int>(v.rows()) || v.cols() != 1)
    fail(errc::shape_mismatch, "thematic block: v must be size x 1");
  if (size == 1) {
    if (theta) fail(errc::shape_mismatch, "size-1 thematic block cannot carry a complement");
    return v;
  }
  if (!theta || theta->rows() != size || theta->cols() != size - 1)
    fail(errc::shape_mismatch, "thematic block: theta must be size x (size-1)");
  const CircleFunction rf = right_form(*this);
  return side == BlockSide::right ? rf : transpose(rf);
}

CircleFunction LiftedBlock::assembled() const {
  const CircleFunction core = inner.assembled();
  if (offset == 0) return core;
  return direct_sum(CircleFunction::identity(offset), core);
}

LiftedBlock lift(const ThematicBlock& block, int offset) {
  if (offset < 0) fail(errc::invariant_violation, "lift: offset must be >= 0");
  return {offset, block};
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerifyReport verify_thematic(const ThematicBlock& block, const GridSpec& grid,
                             const ToleranceConfig& tol) {
  VerifyReport rep;
  auto push = [&rep](CheckResult c) { rep.checks.push_back(std::move(c)); };

  CircleFunction rf = CircleFunction::zero(1, 1);
  try {
    (void)block.assembled();
    rf = right_form(block);
  } catch (const error& e) {
    push({"shape", false, 0.0, e.what()});
    rep.ok = false;
    return rep;
  }
  push({"shape", true, 0.0, ""});

  const auto uni = is_unitary_valued(rf, grid, tol);
  push({"unitary", uni.unitary, uni.max_deviation, ""});

  const auto vi = is_inner(block.v, grid, tol);
  push({"v_inner", vi.inner, std::max(vi.max_negative_coeff, vi.max_isometry_deviation),
        vi.reason == InnerFailure::not_analytic    ? "NotAnalytic"
        : vi.reason == InnerFailure::not_isometric ? "NotIsometric"
                                                   : ""});
  try {
    push({"v_co_outer", is_co_outer_polynomial(block.v, tol), 0.0, ""});
  } catch (const error& e) {
    push({"v_co_outer", false, 0.0, e.what()});
  }

  if (block.theta) {
    const auto ti = is_inner(*block.theta, grid, tol);
    push({"theta_inner", ti.inner, std::max(ti.max_negative_coeff, ti.max_isometry_deviation),
          ti.reason == InnerFailure::not_analytic    ? "NotAnalytic"
          : ti.reason == InnerFailure::not_isometric ? "NotIsometric"
                                                     : ""});
    try {
      push({"theta_co_outer", is_co_outer_polynomial(*block.theta, tol), 0.0, ""});
    } catch (const error& e) {
      push({"theta_co_outer", false, 0.0, e.what()});
    }
  }

  if (rf.is_laurent()) push(minors_check(rf, grid, tol));

  rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                       [](const CheckResult& c) { return c.ok; });
  return rep;
}

CircleFunction compose(const FactorBundle& bundle) {
  structural_check(bundle);
  const int r = bundle.r();

  CircleFunction d = CircleFunction::zero(bundle.m, bundle.n);
  for (int j = 0; j < r; ++j)
    d = add(d, embed(scale(bundle.diag[j].u, bundle.diag[j].t), bundle.m, bundle.n, j, j));
  if (bundle.residual) d = add(d, embed(*bundle.residual, bundle.m, bundle.n, r, r));

  CircleFunction acc = adjoint(bundle.left[0].assembled());
  for (int j = 1; j < r; ++j) acc = multiply(acc, adjoint(bundle.left[j].assembled()));
  acc = multiply(acc, d);
  for (int j = r - 1; j >= 0; --j) acc = multiply(acc, adjoint(bundle.right[j].assembled()));
  return acc;
}

VerifyReport verify_bundle(const FactorBundle& bundle, const CircleFunction& target,
                           const GridSpec& grid, const ToleranceConfig& tol) {
  VerifyReport rep;
  auto push = [&rep](CheckResult c) { rep.checks.push_back(std::move(c)); };

  CircleFunction composed = CircleFunction::zero(1, 1);
  try {
    composed = compose(bundle);
  } catch (const error& e) {
    push({"structure", false, 0.0, e.what()});
    rep.ok = false;
    return rep;
  }
  push({"structure", true, 0.0, ""});

  for (int j = 0; j < bundle.r(); ++j) {
    const auto lw = verify_thematic(bundle.left[j].inner, grid, tol);
    std::string detail;
    for (const auto& c : lw.checks)
      if (!c.ok) detail += (detail.empty() ? "" : ", ") + c.name;
    push({block_label(BlockSide::left, j), lw.ok, 0.0, detail});
    const auto rv = verify_thematic(bundle.right[j].inner, grid, tol);
    detail.clear();
    for (const auto& c : rv.checks)
      if (!c.ok) detail += (detail.empty() ? "" : ", ") + c.name;
    push({block_label(BlockSide::right, j), rv.ok, 0.0, detail});
  }

  if (target.rows() != bundle.m || target.cols() != bundle.n) {
    push({"recompose", false, 0.0, "target shape differs from bundle shape"});
  } else {
    const double dev = max_grid_distance(composed, target, grid);
    const double scale = std::max(1.0, sup_norm_on_grid(target, grid));
    push({"recompose", dev <= tol.eq_tol * scale, dev, ""});
  }

  {
    bool ordered = true;
    for (int j = 0; j + 1 < bundle.r(); ++j)
      if (bundle.diag[j].t + tol.eq_tol * std::max(1.0, bundle.diag[j].t) < bundle.diag[j + 1].t)
        ordered = false;
    push({"t_nonincreasing", ordered, 0.0, ""});
  }

  for (int j = 0; j < bundle.r(); ++j) {
    const auto& slot = bundle.diag[j];
    const std::string name = "diag_" + std::to_string(j);
    try {
      const int k = toeplitz_index(slot.u, grid, tol);
      if (slot.t > 0 && k <= 0)
        push({name, false, 0.0, "index " + std::to_string(k) + " is not positive"});
      else
        push({name, true, 0.0, "index " + std::to_string(k)});
    } catch (const error& e) {
      push({name, false, 0.0, e.what()});
    }
  }

  if (bundle.residual) {
    const double t_last = bundle.diag.back().t;
    const double sup = sup_norm_on_grid(*bundle.residual, grid);
    const double hn = hankel_norm(*bundle.residual, grid, tol);
    const bool ok =
        sup <= t_last * (1.0 + tol.eq_tol) && hn <= t_last * (1.0 - tol.sv_tol);
    std::ostringstream detail;
    detail << "sup=" << sup << " hankel=" << hn << " bound=" << t_last;
    push({"residual_bound", ok, std::max(sup - t_last, hn - t_last), detail.str()});
  }

  rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                       [](const CheckResult& c) { return c.ok; });
  return rep;
}

IndexReport indices(const FactorBundle& bundle, const GridSpec& grid,
                    const ToleranceConfig& tol) {
  IndexReport rep;
  for (const auto& slot : bundle.diag) {
    if (slot.t <= 0) continue;
    rep.indices.push_back(toeplitz_index(slot.u, grid, tol));
    rep.values.push_back(slot.t);
  }

  rep.monotone = true;
  size_t group_begin = 0;
  for (size_t j = 0; j <= rep.values.size(); ++j) {
    const bool boundary =
        j == rep.values.size() ||
        (j > group_begin &&
         std::abs(rep.values[j] - rep.values[group_begin]) >
             tol.sv_tol * std::max(rep.values[group_begin], rep.values[j]));
    if (!boundary) continue;
    if (j > group_begin) {
      int nu = 0;
      for (size_t i = group_begin; i < j; ++i) {
        nu += rep.indices[i];
        if (i > group_begin && rep.indices[i] > rep.indices[i - 1]) rep.monotone = false;
      }
      rep.nu.push_back({rep.values[group_begin], nu});
      group_begin = j;
    }
  }

  rep.iota_bound_ok = true;
  if (!rep.indices.empty()) {
    try {
      const auto it = iota(compose(bundle), grid, tol);
      rep.iota_bound_ok = rep.indices.front() <= it.value;
    } catch (const error&) {
      // bound left unrefuted when the composition cannot be analyzed
    }
  }
  return rep;
}

BadlyApproximableCert scalar_badly_approximable(const CircleFunction& phi, const GridSpec& grid,
                                                const ToleranceConfig& tol) {
  if (!phi.is_scalar()) fail(errc::shape_mismatch, "scalar criterion on a matrix symbol");
  const auto samples = sample_on_grid(phi, grid);
  double lo = std::numeric_limits<double>::max(), hi = 0.0;
  for (const auto& s : samples) {
    const double m = std::abs(s(0, 0));
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  BadlyApproximableCert cert;
  cert.modulus = 0.5 * (lo + hi);
  cert.modulus_deviation = hi - cert.modulus;
  if (cert.modulus < 1e-12) return cert; // zero function
  if (cert.modulus_deviation > tol.eq_tol * std::max(1.0, cert.modulus)) return cert;
  cert.index = -winding_number(scale(phi, 1.0 / cert.modulus), grid);
  cert.badly_approximable = *cert.index > 0;
  return cert;
}

// ---- catalog ---------------------------------------------------------------

ThematicBlock constant_block(cplx phase, BlockSide side) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12)
    fail(errc::not_unimodular, "size-1 thematic block must be a unimodular constant");
  Mat m(1, 1);
  m(0, 0) = phase;
  return {1, CircleFunction::constant(m), std::nullopt, side};
}

ThematicBlock identity_block(int n, BlockSide side) {
  if (n < 1) fail(errc::invariant_violation, "identity_block: size must be >= 1");
  if (n == 1) return constant_block(1.0, side);
  const Mat eye = Mat::Identity(n, n);
  return {n, CircleFunction::constant(eye.col(0)),
          CircleFunction::constant(eye.rightCols(n - 1)), side};
}

ThematicBlock swap_block(BlockSide side) {
  Mat v(2, 1), th(2, 1);
  v << 0, 1;
  th << 1, 0;
  return {2, CircleFunction::constant(v), CircleFunction::constant(th), side};
}

ThematicBlock rotation_block(int power, double c, BlockSide side) {
  if (c <= 0.0 || c >= 1.0)
    fail(errc::invariant_violation, "rotation_block: c must lie strictly between 0 and 1");
  if (power < 0) fail(errc::invariant_violation, "rotation_block: power must be >= 0");
  const double s = std::sqrt(1.0 - c * c);
  Mat vc0 = Mat::Zero(2, 1), vcp = Mat::Zero(2, 1);
  Mat tc0 = Mat::Zero(2, 1), tcp = Mat::Zero(2, 1);
  if (side == BlockSide::right) {
    vcp(0, 0) = c; // v = (c z^p, s)^t
    vc0(1, 0) = s;
    tc0(0, 0) = -s; // theta = (-s, c z^p)^t
    tcp(1, 0) = c;
  } else {
    vc0(0, 0) = c; // v = (c, s z^p)^t
    vcp(1, 0) = s;
    tcp(0, 0) = -s; // theta = (-s z^p, c)^t
    tc0(1, 0) = c;
  }
  return {2, CircleFunction::laurent(2, 1, {{0, vc0}, {power, vcp}}),
          CircleFunction::laurent(2, 1, {{0, tc0}, {power, tcp}}), side};
}

namespace {

FactorBundle diag_monomial_bundle(const std::vector<double>& coeffs, const std::vector<int>& exps,
                                  std::optional<CircleFunction> residual) {
  if (coeffs.empty() || coeffs.size() != exps.size())
    fail(errc::invariant_violation, "coefficient and exponent lists must match and be nonempty");
  for (size_t j = 0; j + 1 < coeffs.size(); ++j)
    if (coeffs[j] < coeffs[j + 1] - 1e-12)
      fail(errc::not_nonincreasing, "coefficients must be nonincreasing");
  for (int e : exps)
    if (e < 1) fail(errc::invariant_violation, "exponents must be >= 1");

  FactorBundle b;
  const int r = static_cast<int>(coeffs.size());
  b.m = r + (residual ? residual->rows() : 0);
  b.n = r + (residual ? residual->cols() : 0);
  for (int j = 0; j < r; ++j) {
    b.left.push_back(lift(identity_block(b.m - j, BlockSide::left), j));
    b.right.push_back(lift(identity_block(b.n - j, BlockSide::right), j));
    b.diag.push_back({coeffs[j], CircleFunction::scalar_monomial(-exps[j])});
  }
  b.residual = std::move(residual);
  return b;
}

} // namespace

FactorBundle catalog_diag_monomial(const std::vector<double>& coeffs,
                                   const std::vector<int>& exps) {
  return diag_monomial_bundle(coeffs, exps, std::nullopt);
}

FactorBundle catalog_diag_monomial(const std::vector<double>& coeffs, const std::vector<int>& exps,
                                   const CircleFunction& residual) {
  return diag_monomial_bundle(coeffs, exps, residual);
}

CircleFunction diag_z2z6_symbol() {
  Mat e11 = Mat::Zero(2, 2), e22 = Mat::Zero(2, 2);
  e11(0, 0) = 1.0;
  e22(1, 1) = 1.0;
  return CircleFunction::laurent(2, 2, {{-2, e11}, {-6, e22}});
}

std::vector<FactorBundle> catalog_z2z6_factorizations() {
  const double c = 1.0 / std::sqrt(2.0);
  std::vector<FactorBundle> out;

  FactorBundle b1;
  b1.m = b1.n = 2;
  b1.left = {lift(identity_block(2, BlockSide::left), 0),
             lift(constant_block(1.0, BlockSide::left), 1)};
  b1.right = {lift(identity_block(2, BlockSide::right), 0),
              lift(constant_block(1.0, BlockSide::right), 1)};
  b1.diag = {{1.0, CircleFunction::scalar_monomial(-2)},
             {1.0, CircleFunction::scalar_monomial(-6)}};
  out.push_back(std::move(b1));

  FactorBundle b2;
  b2.m = b2.n = 2;
  b2.left = {lift(rotation_block(5, c, BlockSide::left), 0),
             lift(constant_block(1.0, BlockSide::left), 1)};
  b2.right = {lift(rotation_block(1, c, BlockSide::right), 0),
              lift(constant_block(1.0, BlockSide::right), 1)};
  b2.diag = {{1.0, CircleFunction::scalar_monomial(-1)},
             {1.0, CircleFunction::scalar_monomial(-7)}};
  out.push_back(std::move(b2));

  FactorBundle b3;
  b3.m = b3.n = 2;
  b3.left = {lift(swap_block(BlockSide::left), 0),
             lift(constant_block(1.0, BlockSide::left), 1)};
  b3.right = {lift(swap_block(BlockSide::right), 0),
              lift(constant_block(1.0, BlockSide::right), 1)};
  b3.diag = {{1.0, CircleFunction::scalar_monomial(-6)},
             {1.0, CircleFunction::scalar_monomial(-2)}};
  out.push_back(std::move(b3));

  return out;
}

FactorBundle twisted_copy(const FactorBundle& bundle, const Mat& q_theta, const Mat& q_xi,
                          const std::vector<cplx>& v_phases, const std::vector<cplx>& w_phases) {
  structural_check(bundle);
  if (!bundle.residual)
    fail(errc::invariant_violation, "twisted_copy: partial bundle with residual required");
  const int r = bundle.r();
  const int nr = bundle.n - r, mr = bundle.m - r;
  if (q_theta.rows() != nr || q_theta.cols() != nr || q_xi.rows() != mr || q_xi.cols() != mr)
    fail(errc::shape_mismatch, "twist unitaries must match the residual shape");
  if (operator_norm(Mat(q_theta.adjoint() * q_theta - Mat::Identity(nr, nr))) > 1e-10 ||
      operator_norm(Mat(q_xi.adjoint() * q_xi - Mat::Identity(mr, mr))) > 1e-10)
    fail(errc::invariant_violation, "twist matrices must be unitary");

  FactorBundle out = bundle;
  auto& last_right = out.right[r - 1].inner;
  auto& last_left = out.left[r - 1].inner;
  last_right.theta = multiply(*last_right.theta, CircleFunction::constant(q_theta));
  last_left.theta = multiply(*last_left.theta, CircleFunction::constant(q_xi));
  out.residual =
      multiply(multiply(CircleFunction::constant(q_xi.adjoint()), *bundle.residual),
               CircleFunction::constant(q_theta.conjugate()));

  auto apply_phase = [&](std::vector<LiftedBlock>& blocks, const std::vector<cplx>& phases) {
    for (size_t j = 0; j < phases.size() && j < blocks.size(); ++j) {
      if (std::abs(std::abs(phases[j]) - 1.0) > 1e-12)
        fail(errc::not_unimodular, "phase twists must be unimodular");
      blocks[j].inner.v = scale(blocks[j].inner.v, phases[j]);
      out.diag[j].u = scale(out.diag[j].u, phases[j]);
    }
  };
  apply_phase(out.left, w_phases);
  apply_phase(out.right, v_phases);
  return out;
}

} // namespace tfact
