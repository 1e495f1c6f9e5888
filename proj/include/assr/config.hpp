#pragma once

#include "assr/eegsim.hpp"
#include "assr/protocol.hpp"

#include <string>

namespace assr {

/// Protocol + simulator configuration, loadable from a JSON file with the
/// shape {"protocol": {...}, "sim": {...}}. Every field is optional and
/// defaults to the built-in values; unknown fields are rejected by name.
struct RunConfig {
  ProtocolConfig protocol;
  SimConfig sim;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config_json(const std::string& text);

/// The built-in defaults serialized as JSON (a template for --config files).
std::string default_config_json();

}  // namespace assr
