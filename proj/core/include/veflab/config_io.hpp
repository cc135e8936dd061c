#pragma once

#include <string>

#include "veflab/sim_config.hpp"

namespace vefl {

// Parse `key = value` lines into a SimConfig. Blank lines are skipped
// and `#` starts a comment. Unknown keys, malformed values, and values
// outside their legal range throw std::invalid_argument with a message
// naming the key and the 1-based line.
SimConfig parse_config(const std::string& text);

// parse_config applied to the contents of a file
SimConfig load_config(const std::string& path);

// Emit every key in a fixed order so a parse/serialize round trip is
// structurally exact (doubles are printed with %.17g).
std::string serialize_config(const SimConfig& cfg);

void save_config(const SimConfig& cfg, const std::string& path);

}  // namespace vefl
