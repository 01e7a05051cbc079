#include "opencat/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opencat/error.hpp"

namespace opencat {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) config_error("unknown key '" + key + "' in " + where);
}

BumpSpec parse_cutoff(const json& j) {
  if (!j.is_object()) config_error("cutoff must be an object");
  reject_unknown(j, {"kind", "r_inner", "r_outer"}, "cutoff");
  BumpSpec spec;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "product_bump") {
    spec.kind = BumpKind::ProductBump;
  } else if (kind == "annulus_product") {
    spec.kind = BumpKind::AnnulusProduct;
  } else {
    config_error("cutoff.kind must be product_bump or annulus_product, got '" + kind + "'");
  }
  spec.r_inner = j.at("r_inner").get<double>();
  spec.r_outer = j.at("r_outer").get<double>();
  return spec;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  RunConfig cfg;
  try {
    const auto j = json::parse(json_text);
    if (!j.is_object()) config_error("config must be a JSON object");
    reject_unknown(j,
                   {"matrix", "n_list", "cutoff", "quantization", "phase", "k_count", "k_max", "grid", "out_csv",
                    "out_svg", "seed"},
                   "config");
    if (j.contains("matrix")) {
      const auto m = j.at("matrix").get<std::vector<std::int64_t>>();
      if (m.size() != 4) config_error("matrix must have exactly 4 entries");
      cfg.matrix = {m[0], m[1], m[2], m[3]};
    }
    if (j.contains("n_list")) cfg.n_list = j.at("n_list").get<std::vector<int>>();
    if (j.contains("cutoff")) cfg.cutoff = parse_cutoff(j.at("cutoff"));
    if (j.contains("quantization")) {
      const auto q = j.at("quantization").get<std::string>();
      if (q == "weyl") {
        cfg.quantization = Quantization::Weyl;
      } else if (q == "left") {
        cfg.quantization = Quantization::Left;
      } else {
        config_error("quantization must be weyl or left, got '" + q + "'");
      }
    }
    if (j.contains("phase")) {
      const auto p = j.at("phase").get<std::string>();
      if (p == "none") {
        cfg.phase = PhaseMode::None;
      } else if (p == "leading") {
        cfg.phase = PhaseMode::LeadingRealPositive;
      } else {
        config_error("phase must be none or leading, got '" + p + "'");
      }
    }
    if (j.contains("k_count")) cfg.k_count = j.at("k_count").get<int>();
    if (j.contains("k_max")) cfg.k_max = j.at("k_max").get<int>();
    if (j.contains("grid")) cfg.grid = j.at("grid").get<int>();
    if (j.contains("out_csv")) cfg.out_csv = j.at("out_csv").get<std::string>();
    if (j.contains("out_svg")) cfg.out_svg = j.at("out_svg").get<std::string>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    config_error(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const RunConfig& cfg) {
  try {
    config_map(cfg);
  } catch (const Error& e) {
    config_error(std::string("matrix: ") + e.what());
  }
  if (cfg.n_list) {
    if (cfg.n_list->empty()) config_error("n_list must not be empty");
    for (std::size_t i = 0; i < cfg.n_list->size(); ++i) {
      const int n = (*cfg.n_list)[i];
      if (n <= 0 || n % 2 != 0) config_error("n_list entries must be even and positive, got " + std::to_string(n));
      if (i > 0 && n <= (*cfg.n_list)[i - 1]) config_error("n_list must be ascending");
    }
  }
  if (cfg.cutoff) {
    try {
      validate(*cfg.cutoff);
    } catch (const Error& e) {
      config_error(std::string("cutoff: ") + e.what());
    }
  }
  if (cfg.k_count < 1 || cfg.k_count > 8) config_error("k_count must lie in [1, 8]");
  if (cfg.k_max < 0) config_error("k_max must be >= 0");
  if (cfg.grid < 4 * cfg.k_max) config_error("grid must be >= 4 * k_max");
}

CatMap config_map(const RunConfig& cfg) {
  return make_cat_map(cfg.matrix[0], cfg.matrix[1], cfg.matrix[2], cfg.matrix[3]);
}

OpenMapSetup make_setup(const RunConfig& cfg, const BumpSpec& cutoff) {
  OpenMapSetup s;
  s.map = config_map(cfg);
  s.cutoff = cutoff;
  s.quantization = cfg.quantization;
  s.phase = cfg.phase;
  s.quantizer.k_max = cfg.k_max;
  s.quantizer.grid = cfg.grid;
  return s;
}

}  // namespace opencat
