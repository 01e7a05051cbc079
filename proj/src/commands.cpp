#include "opencat/commands.hpp"

#include <fstream>
#include <functional>

#include "opencat/config.hpp"
#include "opencat/error.hpp"
#include "opencat/hn_space.hpp"
#include "opencat/report_io.hpp"
#include "opencat/verify.hpp"

namespace opencat {

namespace {

struct ConfigFailure {
  std::string what;
};

RunConfig read_config(const CliOptions& opts, bool required) {
  if (!opts.config) {
    if (required) throw ConfigFailure{"--config <path> is required"};
    return {};
  }
  try {
    auto cfg = load_config(*opts.config);
    validate_config(cfg);
    return cfg;
  } catch (const Error& e) {
    throw ConfigFailure{e.what()};
  }
}

BumpSpec resolve_cutoff(const RunConfig& cfg, BumpKind expected, BumpSpec fallback) {
  const auto spec = cfg.cutoff.value_or(fallback);
  if (spec.kind != expected)
    throw ConfigFailure{expected == BumpKind::ProductBump ? "trapped runs need cutoff.kind = product_bump"
                                                          : "nontrapping runs need cutoff.kind = annulus_product"};
  return spec;
}

MetaplecticOptions metaplectic(const CliOptions& opts) {
  MetaplecticOptions m;
  if (opts.debug_flip_dft) m.dft_sign = DftSign::Flipped;
  return m;
}

// Writes through write() to path; binary mode keeps '\n' line endings.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& write) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigFailure{"cannot open " + path + " for writing"};
  write(f);
  if (!f) throw ConfigFailure{"failed writing " + path};
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

template <typename Body>
int guarded(std::ostream& err, int config_code, int numeric_code, Body&& body) {
  try {
    return body();
  } catch (const ConfigFailure& e) {
    err << "config error: " << e.what << '\n';
    return config_code;
  } catch (const Error& e) {
    err << "numeric error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return numeric_code;
  }
}

}  // namespace

int cmd_trapped(const CliOptions& opts, std::ostream&, std::ostream& err) {
  return guarded(err, exit_code::config, exit_code::numeric, [&] {
    const auto cfg = read_config(opts, true);
    const auto cutoff = resolve_cutoff(cfg, BumpKind::ProductBump, BumpSpec{});
    if (!cfg.out_csv) throw ConfigFailure{"out_csv is required"};
    const auto n_list = cfg.n_list.value_or(std::vector<int>{128, 256, 384, 512});
    auto setup = make_setup(cfg, cutoff);
    setup.metaplectic = metaplectic(opts);
    try {
      make_cutoff(setup);
      analyze(setup.map);
    } catch (const Error& e) {
      throw ConfigFailure{e.what()};
    }

    const auto sweep = trapped_sweep(setup, n_list, cfg.k_count);
    print_warnings(sweep.warnings, err);
    write_file(*cfg.out_csv, [&](std::ostream& os) { write_trapped_csv(os, sweep.rows); });
    if (cfg.out_svg) write_file(*cfg.out_svg, [&](std::ostream& os) { write_trapped_svg(os, sweep.rows); });
    if (!sweep.converged) {
      err << "eigensolver did not converge for some N\n";
      return exit_code::numeric;
    }
    return exit_code::ok;
  });
}

int cmd_nontrapping(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, exit_code::config, exit_code::numeric, [&] {
    const auto cfg = read_config(opts, !opts.synthetic_h2);
    const auto cutoff = resolve_cutoff(cfg, BumpKind::AnnulusProduct, {BumpKind::AnnulusProduct, 0.15, 0.24});
    const auto n_list = cfg.n_list.value_or(std::vector<int>{64, 128, 256, 512});

    NontrapSweep sweep;
    if (opts.synthetic_h2) {
      std::vector<double> radii;
      for (int n : n_list) radii.push_back(planck(n).h * planck(n).h);
      sweep.rows = nontrap_rows(n_list, radii, &sweep.warnings);
    } else {
      if (!cfg.out_csv) throw ConfigFailure{"out_csv is required"};
      auto setup = make_setup(cfg, cutoff);
      setup.metaplectic = metaplectic(opts);
      try {
        make_cutoff(setup);
        analyze(setup.map);
      } catch (const Error& e) {
        throw ConfigFailure{e.what()};
      }
      sweep = nontrapping_sweep(setup, n_list);
    }
    print_warnings(sweep.warnings, err);
    if (cfg.out_csv) {
      write_file(*cfg.out_csv, [&](std::ostream& os) { write_nontrap_csv(os, sweep.rows); });
    } else {
      write_nontrap_csv(out, sweep.rows);
    }
    if (cfg.out_svg) write_file(*cfg.out_svg, [&](std::ostream& os) { write_nontrap_svg(os, sweep.rows); });
    if (!sweep.converged) {
      err << "eigensolver did not converge for some N\n";
      return exit_code::numeric;
    }
    return exit_code::ok;
  });
}

int cmd_classical(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, exit_code::config, exit_code::config, [&] {
    const auto cfg = read_config(opts, false);
    const auto map = config_map(cfg);
    double radius = 0.0;
    try {
      radius = opts.radius.value_or(guard_radius(analyze(map)));
    } catch (const Error& e) {
      throw ConfigFailure{e.what()};
    }
    const auto q_max = opts.q_max.value_or(60);
    if (!(radius > 0.0 && radius <= 0.5)) throw ConfigFailure{"--radius must lie in (0, 1/2]"};
    if (q_max < 1) throw ConfigFailure{"--q-max must be >= 1"};

    const auto report = escape_check(map, radius, q_max);
    auto& witness_os = cfg.out_csv ? out : err;
    if (cfg.out_csv) {
      write_file(*cfg.out_csv, [&](std::ostream& os) { write_classical_csv(os, report); });
    } else {
      write_classical_csv(out, report);
    }
    if (report.witness) {
      witness_os << "witness orbit:";
      for (const auto& p : *report.witness) witness_os << " (" << p.x << '/' << p.q << ',' << p.y << '/' << p.q << ')';
      witness_os << '\n';
    }
    return exit_code::ok;
  });
}

int cmd_verify(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, exit_code::failed, exit_code::failed, [&] {
    const auto cfg = read_config(opts, false);
    VerifyOptions vo;
    vo.seed = cfg.seed;
    vo.metaplectic = metaplectic(opts);
    bool all = true;
    for (const auto& c : run_verify(vo)) {
      out << format_check(c) << '\n';
      all = all && c.passed;
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? exit_code::ok : exit_code::failed;
  });
}

}  // namespace opencat
