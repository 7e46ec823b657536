#ifndef TFACT_CLI_HPP
#define TFACT_CLI_HPP
//
// Project     : tfact
// Module      : cli
// Description : command implementations behind the tfact executable; each
//               returns a machine-readable report, a text rendering and the
//               process exit code (0 ok / 4 failed checks, 1 parse,
//               2 numeric, 3 ambiguity)
//

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <tfact/types.hpp>

namespace tfact {

inline constexpr int report_schema_version = 1;

enum class OutputFormat { text, json };

struct RunConfig {
  std::optional<int> trunc;      // Hankel truncation override
  int samples = 1024;            // grid size, power of two
  double eq_tol = 1e-9;
  double sv_tol = 1e-6;
  double coeff_tol = 1e-10;
  std::optional<int> kappa_max;  // dimension table cap
  OutputFormat format = OutputFormat::text;

  GridSpec grid() const { return {samples, 0.0}; }
  ToleranceConfig tolerances() const { return {eq_tol, sv_tol, coeff_tol}; }
};

struct CmdResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string text;

  std::string rendered(OutputFormat f) const {
    return f == OutputFormat::json ? report.dump(2) + "\n" : text;
  }
};

// Hankel norm, essential-norm certificate, iota, the D table at
// t0 = ||H_Phi||, recovered monotone indices and nu
CmdResult cmd_analyze(const std::string& symbol_file, const RunConfig& cfg);

// full bundle verification against a target symbol plus the index report;
// exit 0 iff every check passes
CmdResult cmd_verify(const std::string& bundle_file, const std::string& symbol_file,
                     const RunConfig& cfg);

// residual extraction from two bundles of the same symbol and the
// constant-unitary equivalence witnesses
CmdResult cmd_residual(const std::string& symbol_file, const std::string& bundle_a,
                       const std::string& bundle_b, const RunConfig& cfg);

// dimension-formula consistency of a candidate index multiset
CmdResult cmd_refute(const std::string& symbol_file, const std::vector<int>& indices,
                     const RunConfig& cfg);

// Hankel truncation of a symbol as a JSON array (debugging aid)
CmdResult cmd_dump(const std::string& symbol_file, const RunConfig& cfg);

// write the built-in symbols and factorizations into a directory
CmdResult cmd_catalog(const std::string& out_dir, const RunConfig& cfg);

int exit_code_for(const error& e);

} // namespace tfact

#endif
