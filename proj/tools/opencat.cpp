// opencat: trapped / nontrapping spectral sweeps, classical escape check and
// the invariant suite, driven by a JSON config.

#include <iostream>

#include <CLI11.hpp>

#include "opencat/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Open quantum cat maps on the quantized torus"};
  app.require_subcommand(1);

  opencat::CliOptions opts;
  std::string config;
  std::int64_t q_max = 0;
  double radius = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_flag("--debug-flip-dft", opts.debug_flip_dft, "Flip the DFT sign convention (breaks Egorov on purpose)");
  };

  auto* trapped = app.add_subcommand("trapped", "Top eigenvalues of the trapped open map against their limits");
  add_common(trapped);
  auto* nontrap = app.add_subcommand("nontrapping", "Spectral radius decay for a cutoff vanishing near the fixed point");
  add_common(nontrap);
  nontrap->add_flag("--synthetic-h2", opts.synthetic_h2, "Replace spectral radii by h^2 (slope self-test)");
  auto* classical = app.add_subcommand("classical", "Check that periodic orbits leave a ball around the origin");
  add_common(classical);
  auto* q_opt = classical->add_option("--q-max", q_max, "Largest denominator examined (default 60)");
  auto* r_opt = classical->add_option("--radius", radius, "Ball radius in (0, 1/2] (default 1/(4 lambda |Q|^2))");
  auto* verify = app.add_subcommand("verify", "Run the invariant suites at N = 32, 64, 128");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return opencat::exit_code::config;
  }

  if (!config.empty()) opts.config = config;
  if (*q_opt) opts.q_max = q_max;
  if (*r_opt) opts.radius = radius;

  if (*trapped) return opencat::cmd_trapped(opts, std::cout, std::cerr);
  if (*nontrap) return opencat::cmd_nontrapping(opts, std::cout, std::cerr);
  if (*classical) return opencat::cmd_classical(opts, std::cout, std::cerr);
  return opencat::cmd_verify(opts, std::cout, std::cerr);
}
