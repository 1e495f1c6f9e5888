// Command-line front end for the ASSR stimulus / synthetic-EEG / PLV /
// classification pipeline. One binary, five subcommands:
//
//   gen-stim   synthesize a stimulus and write a stereo WAV
//   simulate   write labeled synthetic EEG epochs for the condition matrix
//   features   turn one condition directory into a PLV feature CSV
//   evaluate   run a leave-one-out task on a feature CSV
//   report     collect evaluation JSONs into accuracy tables
//
// Exit codes: 0 success, 1 I/O failure, 2 validation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "assr/config.hpp"
#include "assr/epoch_io.hpp"
#include "assr/feature_csv.hpp"
#include "assr/report.hpp"
#include "assr/session.hpp"
#include "assr/stimgen.hpp"
#include "assr/wav.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string condition_dir_name(assr::StimKind kind, double length_s) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s_%04dms", assr::to_string(kind).c_str(),
                static_cast<int>(std::lround(length_s * 1000.0)));
  return buf;
}

bool parse_condition_dir_name(const std::string& name, assr::StimKind& kind,
                              double& length_s) {
  const auto sep = name.rfind('_');
  if (sep == std::string::npos || name.size() < sep + 3 ||
      name.substr(name.size() - 2) != "ms")
    return false;
  try {
    kind = assr::stim_kind_from_string(name.substr(0, sep));
    length_s = std::stod(name.substr(sep + 1, name.size() - sep - 3)) / 1000.0;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw assr::IoError("cannot open for writing: " + path);
  f << text;
  if (!f) throw assr::IoError("write failed: " + path);
}

int run_gen_stim(const std::string& kind_s, double f_m, double length_s,
                 const std::string& dir_s, const std::string& out,
                 double f_c, double f_c1, double f_c2, double rate,
                 double amplitude) {
  assr::StimulusSpec spec;
  spec.kind = assr::stim_kind_from_string(kind_s);
  spec.f_m = f_m;
  spec.duration = length_s;
  spec.f_c = f_c;
  spec.f_c1 = f_c1;
  spec.f_c2 = f_c2;
  spec.audio_rate = rate;
  spec.amplitude = amplitude;

  const assr::Direction direction = assr::direction_from_string(dir_s);
  const assr::MonoWaveform wave = assr::synthesize(spec);
  assr::write_wav(assr::spatialize(wave, direction), out);

  std::cout << "wrote " << out << ": " << kind_s << " f_m=" << f_m << "Hz";
  if (spec.kind == assr::StimKind::Sam || spec.kind == assr::StimKind::Fam)
    std::cout << " f_c=" << spec.f_c << "Hz";
  if (spec.kind == assr::StimKind::AmFm)
    std::cout << " f_c1=" << spec.f_c1 << "Hz f_c2=" << spec.f_c2 << "Hz";
  std::cout << " len=" << length_s << "s dir=" << dir_s
            << " rate=" << rate << "Hz samples=" << wave.samples.size()
            << "\n";
  return 0;
}

int run_simulate(const std::string& config_path, uint64_t seed,
                 const std::string& out_dir) {
  assr::RunConfig cfg;
  if (!config_path.empty()) cfg = assr::load_config(config_path);

  const auto sets = assr::simulate_session(cfg.protocol, cfg.sim, seed);
  for (const auto& set : sets) {
    const fs::path dir = fs::path(out_dir) / condition_dir_name(set.kind, set.length_s);
    assr::write_epoch_set(set, dir.string());
    std::cout << "wrote " << dir.string() << " (" << set.epochs.size()
              << " epochs)\n";
  }
  return 0;
}

int run_features(const std::string& epoch_dir, const std::string& out_csv,
                 bool no_preprocess, double trim_fraction) {
  const assr::EpochSet set = assr::read_epoch_set(epoch_dir);
  assr::FeatureOptions options;
  options.apply_preprocess = !no_preprocess;
  options.plv.trim_fraction = trim_fraction;
  const auto features = assr::extract_features(set, options);
  assr::write_feature_csv(features, out_csv);
  std::cout << "wrote " << out_csv << " (" << features.size() << " rows)\n";
  return 0;
}

int run_evaluate(const std::string& features_csv, const std::string& task,
                 const std::string& out_json, bool uniform_priors) {
  const auto features = assr::read_feature_csv(features_csv);
  assr::NbcOptions nbc;
  nbc.uniform_priors = uniform_priors;

  json j;
  j["task"] = task;
  if (task == "tvnt") {
    const auto datasets = assr::assemble_tvnt(features);
    double sum = 0.0;
    for (const auto& [dir, dataset] : datasets) {
      const assr::CvResult r = assr::loo_cv(dataset, nbc);
      j["per_direction"][assr::to_string(dir)] = json::parse(r.to_json());
      sum += r.accuracy;
    }
    j["mean_accuracy"] = sum / 3.0;
    std::cout << "tvnt mean accuracy: " << j["mean_accuracy"] << "\n";
  } else if (task == "direction") {
    const assr::CvResult r = assr::loo_cv(assr::assemble_direction(features), nbc);
    j.update(json::parse(r.to_json()));
    std::cout << "direction accuracy: " << r.accuracy << "\n";
  } else {
    throw assr::ValidationError("task must be 'tvnt' or 'direction'");
  }
  write_text_file(out_json, j.dump(2) + "\n");
  return 0;
}

// Reads one condition directory's evaluation JSONs, if present.
std::optional<assr::ConditionScores> read_condition_scores(const fs::path& dir,
                                                           assr::StimKind kind,
                                                           double length_s) {
  assr::ConditionScores scores;
  scores.kind = kind;
  scores.length_s = length_s;
  bool any = false;

  const fs::path tvnt = dir / "tvnt.json";
  if (fs::exists(tvnt)) {
    std::ifstream f(tvnt);
    json j;
    try {
      f >> j;
      double sum = 0.0;
      for (const auto& [name, body] : j.at("per_direction").items()) {
        const double acc = body.at("accuracy").get<double>();
        scores.tvnt_accuracy[static_cast<int>(
            assr::direction_from_string(name))] = acc;
        sum += acc;
      }
      scores.tvnt_mean = sum / 3.0;
      any = true;
    } catch (const json::exception& e) {
      throw assr::IoError("malformed " + tvnt.string() + ": " + e.what());
    }
  }
  const fs::path direction = dir / "direction.json";
  if (fs::exists(direction)) {
    std::ifstream f(direction);
    json j;
    try {
      f >> j;
      scores.direction_accuracy = j.at("accuracy").get<double>();
      any = true;
    } catch (const json::exception& e) {
      throw assr::IoError("malformed " + direction.string() + ": " + e.what());
    }
  }
  if (!any) return std::nullopt;
  return scores;
}

uint64_t seed_of_condition_dir(const fs::path& dir, uint64_t fallback) {
  const fs::path manifest = dir / "manifest.json";
  if (!fs::exists(manifest)) return fallback;
  std::ifstream f(manifest);
  json j;
  try {
    f >> j;
    return j.value("seed", fallback);
  } catch (const json::exception&) {
    return fallback;
  }
}

void scan_results_tree(const fs::path& root, uint64_t seed_fallback,
                       assr::EvaluationReport& report) {
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    assr::StimKind kind;
    double length_s = 0.0;
    if (parse_condition_dir_name(name, kind, length_s)) {
      const auto scores = read_condition_scores(entry.path(), kind, length_s);
      if (scores.has_value())
        report.add(seed_of_condition_dir(entry.path(), seed_fallback), *scores);
    } else if (name.rfind("seed_", 0) == 0) {
      uint64_t seed = seed_fallback;
      try {
        seed = std::stoull(name.substr(5));
      } catch (const std::exception&) {
      }
      scan_results_tree(entry.path(), seed, report);
    }
  }
}

int run_report(const std::string& results_dir, const std::string& format,
               const std::string& out_path) {
  if (!fs::is_directory(results_dir))
    throw assr::IoError("results directory not found: " + results_dir);
  assr::EvaluationReport report;
  scan_results_tree(results_dir, 0, report);

  std::string text;
  if (format == "text") {
    text = report.empty()
               ? "No evaluation results found.\n\n" + assr::reference::render_tables()
               : report.render_text();
  } else if (format == "csv") {
    text = report.render_csv();
  } else {
    throw assr::ValidationError("format must be 'text' or 'csv'");
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ASSR stimulus synthesis, synthetic-EEG simulation, PLV "
               "feature extraction and NBC evaluation"};
  app.require_subcommand(1);

  // gen-stim
  std::string gs_kind, gs_dir, gs_out = "stimulus.wav";
  double gs_fm = 40.0, gs_len = 3.0, gs_fc = 440.0, gs_fc1 = 440.0,
         gs_fc2 = 880.0, gs_rate = 44100.0, gs_amp = 1.0;
  auto* gen = app.add_subcommand("gen-stim", "Synthesize a stimulus WAV");
  gen->add_option("--kind", gs_kind, "sam|fam|clicks|amfm")->required();
  gen->add_option("--fm", gs_fm, "modulation / click frequency in Hz")->required();
  gen->add_option("--len", gs_len, "duration in seconds")->required();
  gen->add_option("--dir", gs_dir, "left|center|right")->required();
  gen->add_option("--out", gs_out, "output WAV path");
  gen->add_option("--fc", gs_fc, "carrier Hz (sam/fam)");
  gen->add_option("--fc1", gs_fc1, "first carrier Hz (amfm)");
  gen->add_option("--fc2", gs_fc2, "second carrier Hz (amfm)");
  gen->add_option("--rate", gs_rate, "audio sample rate");
  gen->add_option("--amp", gs_amp, "peak amplitude in (0, 1]");

  // simulate
  std::string sim_config, sim_out = "epochs";
  uint64_t sim_seed = 1;
  auto* sim_cmd = app.add_subcommand("simulate", "Write synthetic EEG epoch sets");
  sim_cmd->add_option("--config", sim_config, "JSON config path (defaults built in)");
  sim_cmd->add_option("--seed", sim_seed, "session seed");
  sim_cmd->add_option("--out", sim_out, "output directory");

  // features
  std::string ft_epochs, ft_out = "features.csv";
  bool ft_no_preprocess = false;
  double ft_trim = 0.1;
  auto* feat = app.add_subcommand("features", "Extract PLV feature vectors");
  feat->add_option("--epochs", ft_epochs, "condition directory")->required();
  feat->add_option("--out", ft_out, "output CSV path");
  feat->add_flag("--no-preprocess", ft_no_preprocess,
                 "skip the 5-100 Hz / 48-52 Hz acquisition filters");
  feat->add_option("--trim", ft_trim, "edge trim fraction per side");

  // evaluate
  std::string ev_features, ev_task, ev_out = "result.json";
  bool ev_uniform = false;
  auto* eval = app.add_subcommand("evaluate", "Leave-one-out NBC evaluation");
  eval->add_option("--features", ev_features, "feature CSV path")->required();
  eval->add_option("--task", ev_task, "tvnt|direction")->required();
  eval->add_option("--out", ev_out, "output JSON path");
  eval->add_flag("--uniform-priors", ev_uniform, "use uniform class priors");

  // report
  std::string rp_results, rp_format = "text", rp_out;
  auto* rep = app.add_subcommand("report", "Render accuracy tables");
  rep->add_option("--results", rp_results, "directory of evaluation outputs")
      ->required();
  rep->add_option("--format", rp_format, "text|csv");
  rep->add_option("--out", rp_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return run_gen_stim(gs_kind, gs_fm, gs_len, gs_dir, gs_out, gs_fc,
                          gs_fc1, gs_fc2, gs_rate, gs_amp);
    if (sim_cmd->parsed()) return run_simulate(sim_config, sim_seed, sim_out);
    if (feat->parsed())
      return run_features(ft_epochs, ft_out, ft_no_preprocess, ft_trim);
    if (eval->parsed())
      return run_evaluate(ev_features, ev_task, ev_out, ev_uniform);
    if (rep->parsed()) return run_report(rp_results, rp_format, rp_out);
  } catch (const assr::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const assr::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
