#include "assr/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

namespace assr {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& scope) {
  for (const auto& [key, value] : obj.items())
    if (known.find(key) == known.end())
      throw ValidationError("unknown config field '" + scope + "." + key + "'");
}

template <typename T>
void read_field(const json& obj, const char* name, const std::string& scope,
                T& out) {
  if (!obj.contains(name)) return;
  try {
    out = obj.at(name).get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config field '" + scope + "." + name +
                          "' has the wrong type");
  }
}

void parse_protocol(const json& j, ProtocolConfig& cfg) {
  reject_unknown(j,
                 {"direction_frequencies", "trials_per_block",
                  "inter_stimulus_gap_s", "inter_block_break_s",
                  "stimulus_lengths_s", "stimulus_kinds"},
                 "protocol");
  if (j.contains("direction_frequencies")) {
    const auto& df = j.at("direction_frequencies");
    if (!df.is_object())
      throw ValidationError(
          "config field 'protocol.direction_frequencies' must be an object "
          "with left/center/right");
    reject_unknown(df, {"left", "center", "right"},
                   "protocol.direction_frequencies");
    for (const auto& [key, value] : df.items()) {
      if (!value.is_number())
        throw ValidationError("config field 'protocol.direction_frequencies." +
                              key + "' must be a number");
      cfg.direction_frequencies[static_cast<int>(direction_from_string(key))] =
          value.get<double>();
    }
  }
  read_field(j, "trials_per_block", "protocol", cfg.trials_per_block);
  read_field(j, "inter_stimulus_gap_s", "protocol", cfg.inter_stimulus_gap_s);
  read_field(j, "inter_block_break_s", "protocol", cfg.inter_block_break_s);
  read_field(j, "stimulus_lengths_s", "protocol", cfg.stimulus_lengths_s);
  if (j.contains("stimulus_kinds")) {
    if (!j.at("stimulus_kinds").is_array())
      throw ValidationError(
          "config field 'protocol.stimulus_kinds' must be an array");
    cfg.stimulus_kinds.clear();
    for (const auto& k : j.at("stimulus_kinds")) {
      if (!k.is_string())
        throw ValidationError(
            "config field 'protocol.stimulus_kinds' must contain strings");
      cfg.stimulus_kinds.push_back(stim_kind_from_string(k.get<std::string>()));
    }
  }
}

void parse_sim(const json& j, SimConfig& cfg) {
  reject_unknown(j,
                 {"n_channels", "eeg_rate", "assr_amplitude", "attention_gain",
                  "noise_level", "noise_exponent", "phase_jitter_ignored",
                  "phase_jitter_attended", "channel_phase_lags"},
                 "sim");
  read_field(j, "n_channels", "sim", cfg.n_channels);
  read_field(j, "eeg_rate", "sim", cfg.eeg_rate);
  read_field(j, "assr_amplitude", "sim", cfg.assr_amplitude);
  read_field(j, "attention_gain", "sim", cfg.attention_gain);
  read_field(j, "noise_level", "sim", cfg.noise_level);
  read_field(j, "noise_exponent", "sim", cfg.noise_exponent);
  read_field(j, "phase_jitter_ignored", "sim", cfg.phase_jitter_ignored);
  read_field(j, "phase_jitter_attended", "sim", cfg.phase_jitter_attended);
  read_field(j, "channel_phase_lags", "sim", cfg.channel_phase_lags);
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config root must be an object");
  reject_unknown(j, {"protocol", "sim"}, "config");

  RunConfig cfg;
  if (j.contains("protocol")) parse_protocol(j.at("protocol"), cfg.protocol);
  if (j.contains("sim")) parse_sim(j.at("sim"), cfg.sim);
  cfg.protocol.validate();
  cfg.sim.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  return parse_config_json(text);
}

std::string default_config_json() {
  const RunConfig cfg;
  json j;
  j["protocol"]["direction_frequencies"] = {
      {"left", cfg.protocol.direction_frequencies[0]},
      {"center", cfg.protocol.direction_frequencies[1]},
      {"right", cfg.protocol.direction_frequencies[2]}};
  j["protocol"]["trials_per_block"] = cfg.protocol.trials_per_block;
  j["protocol"]["inter_stimulus_gap_s"] = cfg.protocol.inter_stimulus_gap_s;
  j["protocol"]["inter_block_break_s"] = cfg.protocol.inter_block_break_s;
  j["protocol"]["stimulus_lengths_s"] = cfg.protocol.stimulus_lengths_s;
  auto kinds = nlohmann::json::array();
  for (StimKind k : cfg.protocol.stimulus_kinds) kinds.push_back(to_string(k));
  j["protocol"]["stimulus_kinds"] = kinds;
  j["sim"]["n_channels"] = cfg.sim.n_channels;
  j["sim"]["eeg_rate"] = cfg.sim.eeg_rate;
  j["sim"]["assr_amplitude"] = cfg.sim.assr_amplitude;
  j["sim"]["attention_gain"] = cfg.sim.attention_gain;
  j["sim"]["noise_level"] = cfg.sim.noise_level;
  j["sim"]["noise_exponent"] = cfg.sim.noise_exponent;
  j["sim"]["phase_jitter_ignored"] = cfg.sim.phase_jitter_ignored;
  j["sim"]["phase_jitter_attended"] = cfg.sim.phase_jitter_attended;
  return j.dump(2);
}

}  // namespace assr
