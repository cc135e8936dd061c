#include "veflab/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace vefl {

namespace {
using nlohmann::json;

json config_to_json(const SimConfig& c) {
  return json{{"dim", c.dim},
              {"points", c.points},
              {"period", c.period},
              {"mu", c.mu},
              {"dt", c.dt},
              {"t_end", c.t_end},
              {"output_stride", c.output_stride},
              {"dealias", c.dealias},
              {"nonlinear", c.nonlinear},
              {"init", c.init},
              {"amplitude", c.amplitude},
              {"pseudo_time", c.pseudo_time},
              {"pseudo_dt", c.pseudo_dt},
              {"flow_band_min", c.flow_band_min},
              {"flow_band_max", c.flow_band_max},
              {"epsilon", c.epsilon},
              {"p_osc", c.p_osc},
              {"envelope_power", c.envelope_power},
              {"seed", c.seed},
              {"r0", c.r0},
              {"s", c.s},
              {"r", c.r},
              {"p1", c.p1},
              {"p2", c.p2},
              {"lambda1", c.lambda1}};
}

SimConfig config_from_json(const json& j) {
  SimConfig c;
  c.dim = j.at("dim").get<int>();
  c.points = j.at("points").get<int>();
  c.period = j.at("period").get<double>();
  c.mu = j.at("mu").get<double>();
  c.dt = j.at("dt").get<double>();
  c.t_end = j.at("t_end").get<double>();
  c.output_stride = j.at("output_stride").get<int>();
  c.dealias = j.at("dealias").get<double>();
  c.nonlinear = j.at("nonlinear").get<bool>();
  c.init = j.at("init").get<std::string>();
  c.amplitude = j.at("amplitude").get<double>();
  c.pseudo_time = j.at("pseudo_time").get<double>();
  c.pseudo_dt = j.at("pseudo_dt").get<double>();
  c.flow_band_min = j.at("flow_band_min").get<int>();
  c.flow_band_max = j.at("flow_band_max").get<int>();
  c.epsilon = j.at("epsilon").get<double>();
  c.p_osc = j.at("p_osc").get<double>();
  c.envelope_power = j.at("envelope_power").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.r0 = j.at("r0").get<double>();
  c.s = j.at("s").get<double>();
  c.r = j.at("r").get<double>();
  c.p1 = j.at("p1").get<double>();
  c.p2 = j.at("p2").get<double>();
  c.lambda1 = j.at("lambda1").get<double>();
  return c;
}

}  // namespace

void write_manifest(const RunManifest& m, const std::string& path) {
  json j{{"version", m.version},
         {"status", m.status},
         {"config", config_to_json(m.config)},
         {"outputs", m.outputs},
         {"wall_seconds", m.wall_seconds},
         {"steps_taken", m.steps_taken},
         {"cfl_warned", m.cfl_warned}};
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write manifest file '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open manifest file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("manifest '" + path + "' is not valid JSON: " +
                             e.what());
  }
  RunManifest m;
  try {
    m.version = j.at("version").get<std::string>();
    m.status = j.at("status").get<std::string>();
    m.config = config_from_json(j.at("config"));
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    m.steps_taken = j.at("steps_taken").get<long long>();
    m.cfl_warned = j.at("cfl_warned").get<bool>();
  } catch (const json::exception& e) {
    throw std::runtime_error("manifest '" + path + "' is missing fields: " +
                             e.what());
  }
  return m;
}

}  // namespace vefl
