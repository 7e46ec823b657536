#include <tfact/cli.hpp>

#include <filesystem>
#include <sstream>

#include <tfact/invariance.hpp>
#include <tfact/io.hpp>

namespace tfact {

using nlohmann::json;

namespace {

json base_report(const char* command) {
  json j;
  j["schema_version"] = report_schema_version;
  j["command"] = command;
  return j;
}

json dim_table_json(const MaximizingDimTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries) {
    json row{{"kappa", e.kappa}, {"dim", e.dim}};
    if (std::isfinite(e.gap)) row["gap"] = e.gap;
    entries.push_back(std::move(row));
  }
  return json{{"level", table.level}, {"entries", std::move(entries)}};
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

json checks_json(const VerifyReport& rep) {
  json out = json::array();
  for (const auto& c : rep.checks)
    out.push_back(
        {{"name", c.name}, {"ok", c.ok}, {"deviation", c.deviation}, {"detail", c.detail}});
  return out;
}

CmdResult error_result(const char* command, const error& e) {
  CmdResult res;
  res.exit_code = exit_code_for(e);
  res.report = base_report(command);
  res.report["error"] = e.what();
  res.text = std::string("error: ") + e.what() + "\n";
  return res;
}

} // namespace

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error: return 1;
    case errc::ambiguous_spectrum:
    case errc::inconsistent_table: return 3;
    default: return 2;
  }
}

CmdResult cmd_analyze(const std::string& symbol_file, const RunConfig& cfg) {
  CmdResult res;
  res.report = base_report("analyze");
  res.report["symbol"] = symbol_file;
  try {
    const GridSpec grid = cfg.grid();
    const ToleranceConfig tol = cfg.tolerances();
    grid.validate();
    tol.validate();
    const CircleFunction phi = load_symbol(symbol_file);
    res.report["rows"] = phi.rows();
    res.report["cols"] = phi.cols();
    res.report["kind"] = phi.is_laurent() ? "laurent" : "rational";

    std::ostringstream text;
    double t0;
    if (cfg.trunc) {
      const auto at = hankel_norm_at(phi, *cfg.trunc, grid, tol);
      t0 = at.value;
      res.report["hankel_norm_exact"] = at.exact;
      if (!at.exact) text << "note: truncation below the exact order, norm is a lower bound\n";
    } else {
      t0 = hankel_norm(phi, grid, tol);
      res.report["hankel_norm_exact"] = true;
    }
    res.report["hankel_norm"] = t0;
    const auto ess = essential_norm_bound(phi);
    res.report["essential_norm"] = {{"value", ess.value}, {"certificate", ess.certificate}};
    text << "t0 = " << t0 << "\n";
    text << "essential norm = " << ess.value << " (" << ess.certificate << ")\n";

    if (t0 <= 1e-12) {
      res.report["zero_hankel"] = true;
      text << "Hankel operator vanishes; the symbol is analytic at this tolerance\n";
      res.text = text.str();
      return res;
    }
    res.report["zero_hankel"] = false;

    if (!phi.is_laurent()) {
      text << "index recovery requires a laurent symbol; skipping the dimension table\n";
      res.text = text.str();
      return res;
    }

    const auto it = iota(phi, grid, tol);
    res.report["iota"] = it.value;
    text << "iota = " << it.value << "\n";

    const auto rec = recover_monotone_indices(phi, t0, grid, tol);
    if (cfg.kappa_max) {
      res.report["dim_table"] = dim_table_json(dim_table(phi, t0, cfg.kappa_max, grid, tol));
    } else {
      res.report["dim_table"] = dim_table_json(rec.table);
    }
    res.report["recovered_indices"] = rec.indices;
    int nu = 0;
    for (int k : rec.indices) nu += k;
    res.report["nu"] = nu;

    text << "D = [";
    for (size_t i = 0; i < rec.table.entries.size(); ++i)
      text << (i ? ", " : "") << rec.table.entries[i].dim;
    text << "]\n";
    text << "indices = (" << join_ints(rec.indices) << ")\n";
    text << "nu = " << nu << "\n";
    res.text = text.str();
    return res;
  } catch (const error& e) {
    return error_result("analyze", e);
  }
}

CmdResult cmd_verify(const std::string& bundle_file, const std::string& symbol_file,
                     const RunConfig& cfg) {
  CmdResult res;
  res.report = base_report("verify");
  res.report["bundle"] = bundle_file;
  res.report["symbol"] = symbol_file;
  try {
    const GridSpec grid = cfg.grid();
    const ToleranceConfig tol = cfg.tolerances();
    grid.validate();
    tol.validate();
    const CircleFunction phi = load_symbol(symbol_file);
    const FactorBundle bundle = load_bundle(bundle_file);

    const auto rep = verify_bundle(bundle, phi, grid, tol);
    res.report["pass"] = rep.ok;
    res.report["checks"] = checks_json(rep);

    std::ostringstream text;
    for (const auto& c : rep.checks)
      text << (c.ok ? "pass" : "FAIL") << "  " << c.name
           << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";

    try {
      const auto idx = indices(bundle, grid, tol);
      res.report["indices"] = idx.indices;
      res.report["values"] = idx.values;
      json nus = json::array();
      for (const auto& nu : idx.nu) nus.push_back({{"t", nu.t}, {"nu", nu.nu}});
      res.report["nu"] = std::move(nus);
      res.report["monotone"] = idx.monotone;
      res.report["iota_bound_ok"] = idx.iota_bound_ok;
      text << "indices = (" << join_ints(idx.indices) << ")\n";
      text << "monotone = " << (idx.monotone ? "true" : "false") << "\n";
    } catch (const error& e) {
      res.report["indices_error"] = e.what();
      text << "indices unavailable: " << e.what() << "\n";
    }

    text << (rep.ok ? "verification passed" : "verification FAILED") << "\n";
    res.text = text.str();
    res.exit_code = rep.ok ? 0 : 4;
    return res;
  } catch (const error& e) {
    return error_result("verify", e);
  }
}

CmdResult cmd_residual(const std::string& symbol_file, const std::string& bundle_a,
                       const std::string& bundle_b, const RunConfig& cfg) {
  CmdResult res;
  res.report = base_report("residual");
  res.report["symbol"] = symbol_file;
  res.report["bundle_a"] = bundle_a;
  res.report["bundle_b"] = bundle_b;
  try {
    const GridSpec grid = cfg.grid();
    const ToleranceConfig tol = cfg.tolerances();
    grid.validate();
    tol.validate();
    const CircleFunction phi = load_symbol(symbol_file);
    const FactorBundle a = load_bundle(bundle_a);
    const FactorBundle b = load_bundle(bundle_b);

    std::ostringstream text;
    for (const auto& [name, bundle] : {std::pair<const char*, const FactorBundle&>{"a", a},
                                       {"b", b}}) {
      const auto rep = verify_bundle(bundle, phi, grid, tol);
      res.report[std::string("verify_") + name] = rep.ok;
      if (!rep.ok) {
        res.report["refused"] = std::string("bundle ") + name + " does not verify against the symbol";
        text << "bundle " << name << " does not verify against the symbol\n";
        res.text = text.str();
        res.exit_code = 4;
        return res;
      }
    }

    const CircleFunction psi_a = extract_residual(phi, a);
    const CircleFunction psi_b = extract_residual(phi, b);
    const auto eq = residual_equivalence(psi_a, psi_b, grid, tol);
    res.report["equivalent"] = eq.equivalent;
    res.report["max_deviation"] = eq.max_deviation;
    res.report["singular_gap"] = max_pointwise_singular_gap(psi_a, psi_b, grid);
    if (eq.equivalent) {
      res.report["U1"] = matrix_json(eq.u1);
      res.report["U2"] = matrix_json(eq.u2);
      text << "residuals equivalent modulo constant unitaries\n";
      text << "max deviation = " << eq.max_deviation << "\n";
    } else {
      text << "residuals NOT equivalent; best deviation = " << eq.max_deviation << "\n";
    }
    res.text = text.str();
    res.exit_code = eq.equivalent ? 0 : 4;
    return res;
  } catch (const error& e) {
    return error_result("residual", e);
  }
}

CmdResult cmd_refute(const std::string& symbol_file, const std::vector<int>& indices,
                     const RunConfig& cfg) {
  CmdResult res;
  res.report = base_report("refute");
  res.report["symbol"] = symbol_file;
  res.report["candidates"] = indices;
  try {
    const GridSpec grid = cfg.grid();
    const ToleranceConfig tol = cfg.tolerances();
    grid.validate();
    tol.validate();
    const CircleFunction phi = load_symbol(symbol_file);
    const double t0 = hankel_norm(phi, grid, tol);
    res.report["level"] = t0;

    std::ostringstream text;
    if (t0 <= 1e-12) {
      const bool consistent = indices.empty();
      res.report["consistent"] = consistent;
      text << (consistent ? "consistent (Hankel operator vanishes)\n"
                          : "violated: Hankel operator vanishes but candidates are nonempty\n");
      res.text = text.str();
      return res;
    }

    const auto rep = verify_dimension_formula(phi, t0, indices, grid, tol);
    res.report["consistent"] = rep.consistent;
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"kappa", r.kappa},
                      {"measured", r.measured},
                      {"predicted", r.predicted},
                      {"ok", r.ok}});
    res.report["rows"] = std::move(rows);
    if (rep.consistent) {
      text << "consistent\n";
    } else {
      res.report["first_violation"] = rep.first_violation;
      const auto& r = rep.rows[rep.first_violation];
      text << "violated at kappa = " << r.kappa << " (measured " << r.measured << ", predicted "
           << r.predicted << ")\n";
    }
    res.text = text.str();
    return res;
  } catch (const error& e) {
    return error_result("refute", e);
  }
}

CmdResult cmd_dump(const std::string& symbol_file, const RunConfig& cfg) {
  CmdResult res;
  res.report = base_report("dump");
  res.report["symbol"] = symbol_file;
  try {
    const GridSpec grid = cfg.grid();
    const ToleranceConfig tol = cfg.tolerances();
    grid.validate();
    tol.validate();
    const CircleFunction phi = load_symbol(symbol_file);
    int order;
    if (cfg.trunc) {
      order = *cfg.trunc;
    } else if (phi.is_laurent()) {
      order = std::max(1, phi.max_negative_degree());
    } else {
      order = 8;
    }
    const auto h = hankel_matrix(phi, order, grid, tol);
    res.report["order"] = h.order;
    res.report["exact"] = h.exact;
    res.report["matrix"] = matrix_json(h.matrix);
    res.text = res.report.dump(2) + "\n";
    return res;
  } catch (const error& e) {
    return error_result("dump", e);
  }
}

CmdResult cmd_catalog(const std::string& out_dir, const RunConfig&) {
  CmdResult res;
  res.report = base_report("catalog");
  try {
    std::filesystem::create_directories(out_dir);
    const auto dir = std::filesystem::path(out_dir);

    std::vector<std::string> written;
    auto put_symbol = [&](const CircleFunction& f, const std::string& name) {
      save_symbol(f, (dir / name).string());
      written.push_back(name);
    };
    auto put_bundle = [&](const FactorBundle& b, const std::string& name) {
      save_bundle(b, (dir / name).string());
      written.push_back(name);
    };

    put_symbol(diag_z2z6_symbol(), "diag_z2_z6.json");
    put_symbol(CircleFunction::scalar_monomial(-3), "zbar3.json");
    {
      Mat one(1, 1);
      one(0, 0) = 0.5;
      put_symbol(CircleFunction::laurent(1, 1, {{0, Mat::Identity(1, 1)}, {2, one}}),
                 "analytic.json");
    }
    {
      const auto partial = catalog_diag_monomial({1.0, 1.0}, {3, 2},
                                                 CircleFunction::scalar_monomial(-1, 0.5));
      put_symbol(compose(partial), "diag_z3_z2_half.json");
      put_bundle(partial, "bundle_partial_z3_z2_half.json");
    }
    const auto bundles = catalog_z2z6_factorizations();
    for (size_t i = 0; i < bundles.size(); ++i)
      put_bundle(bundles[i], "bundle" + std::to_string(i + 1) + "_z2_z6.json");

    res.report["written"] = written;
    std::ostringstream text;
    text << "wrote " << written.size() << " files to " << out_dir << "\n";
    res.text = text.str();
    return res;
  } catch (const error& e) {
    return error_result("catalog", e);
  } catch (const std::exception& e) {
    return error_result("catalog", error(errc::parse_error, e.what()));
  }
}

} // namespace tfact
