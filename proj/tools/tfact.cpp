//
// tfact - analyze matrix symbols on the unit circle: Hankel norms,
// maximizing-space dimension tables, thematic factorization verification,
// residual comparison and index recovery/refutation
//

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tfact/cli.hpp>

int main(int argc, char** argv) {
  CLI::App app{"thematic factorization analysis on the unit circle"};
  app.require_subcommand(1);

  tfact::RunConfig cfg;
  int trunc = -1;
  int kappa_max = -1;
  std::string format = "text";
  app.add_option("--samples", cfg.samples, "grid samples (power of two)")
      ->capture_default_str();
  app.add_option("--trunc", trunc, "Hankel truncation order override");
  app.add_option("--tol", cfg.eq_tol, "pointwise equality tolerance")->capture_default_str();
  app.add_option("--sv-tol", cfg.sv_tol, "singular value banding tolerance")
      ->capture_default_str();
  app.add_option("--kappa-max", kappa_max, "dimension table cap");
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string symbol_file, bundle_file, bundle_b, out_dir = "data";
  std::vector<int> candidate_indices;

  auto* analyze = app.add_subcommand("analyze", "norms, iota, D table and recovered indices");
  analyze->add_option("symbol", symbol_file, "symbol JSON file")->required();

  auto* verify = app.add_subcommand("verify", "verify a factor bundle against a symbol");
  verify->add_option("bundle", bundle_file, "bundle JSON file")->required();
  verify->add_option("symbol", symbol_file, "symbol JSON file")->required();

  auto* residual = app.add_subcommand("residual", "compare the residuals of two bundles");
  residual->add_option("symbol", symbol_file, "symbol JSON file")->required();
  residual->add_option("bundle_a", bundle_file, "first bundle")->required();
  residual->add_option("bundle_b", bundle_b, "second bundle")->required();

  auto* refute = app.add_subcommand("refute", "test a candidate index multiset");
  refute->add_option("symbol", symbol_file, "symbol JSON file")->required();
  refute->add_option("indices", candidate_indices, "candidate indices")->required();

  auto* dump = app.add_subcommand("dump", "print a Hankel truncation as JSON");
  dump->add_option("symbol", symbol_file, "symbol JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "write the built-in example files");
  catalog->add_option("--out", out_dir, "output directory")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (trunc >= 0) cfg.trunc = trunc;
  if (kappa_max >= 0) cfg.kappa_max = kappa_max;
  cfg.format = format == "json" ? tfact::OutputFormat::json : tfact::OutputFormat::text;

  tfact::CmdResult res;
  if (*analyze)
    res = tfact::cmd_analyze(symbol_file, cfg);
  else if (*verify)
    res = tfact::cmd_verify(bundle_file, symbol_file, cfg);
  else if (*residual)
    res = tfact::cmd_residual(symbol_file, bundle_file, bundle_b, cfg);
  else if (*refute)
    res = tfact::cmd_refute(symbol_file, candidate_indices, cfg);
  else if (*dump)
    res = tfact::cmd_dump(symbol_file, cfg);
  else if (*catalog)
    res = tfact::cmd_catalog(out_dir, cfg);

  std::cout << res.rendered(cfg.format);
  return res.exit_code;
}
