#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veflab/sim_config.hpp"

namespace vefl {

// JSON run manifest written next to the outputs. It is written with
// status "running" before the first step and finalized afterwards, so
// an interrupted run leaves an honest record behind.
struct RunManifest {
  std::string version = "veflab 0.1.0";
  std::string status = "running";  // running | complete | aborted
  SimConfig config;
  std::vector<std::string> outputs;
  double wall_seconds = 0.0;
  long long steps_taken = 0;
  bool cfl_warned = false;
};

void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

}  // namespace vefl
