#include "assr/epoch_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace assr {

namespace {

constexpr uint32_t kMagic = 0x31525341;  // "ASR1" little-endian
constexpr uint32_t kVersion = 1;

void put_u32(std::ofstream& f, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  f.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t read_u32(std::ifstream& f, const std::string& path) {
  unsigned char b[4];
  f.read(reinterpret_cast<char*>(b), 4);
  if (!f) throw IoError("truncated epoch file: " + path);
  return b[0] | (b[1] << 8) | (b[2] << 16) | (uint32_t(b[3]) << 24);
}

uint32_t float_bits(float v) {
  uint32_t u;
  std::memcpy(&u, &v, 4);
  return u;
}

float bits_float(uint32_t u) {
  float v;
  std::memcpy(&v, &u, 4);
  return v;
}

std::string epoch_file_name(size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "epoch_%03zu.bin", index);
  return buf;
}

}  // namespace

void write_epoch(const Epoch& epoch, const std::string& path) {
  if (epoch.eeg_rate <= 0.0 || epoch.eeg_rate != std::floor(epoch.eeg_rate))
    throw ValidationError("epoch files require a positive integral eeg_rate");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  put_u32(f, kMagic);
  put_u32(f, kVersion);
  put_u32(f, static_cast<uint32_t>(epoch.n_channels));
  put_u32(f, static_cast<uint32_t>(epoch.n_samples));
  put_u32(f, static_cast<uint32_t>(epoch.eeg_rate));
  put_u32(f, static_cast<uint32_t>(std::llround(epoch.f_m * 1000.0)));
  put_u32(f, static_cast<uint32_t>(epoch.direction));
  put_u32(f, epoch.attended ? 1u : 0u);
  for (double v : epoch.data)
    put_u32(f, float_bits(static_cast<float>(v)));
  if (!f) throw IoError("write failed: " + path);
}

Epoch read_epoch(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open for reading: " + path);
  if (read_u32(f, path) != kMagic)
    throw IoError("bad magic (not an epoch file): " + path);
  if (read_u32(f, path) != kVersion)
    throw IoError("unsupported epoch file version: " + path);
  Epoch e;
  e.n_channels = static_cast<int>(read_u32(f, path));
  e.n_samples = static_cast<int>(read_u32(f, path));
  e.eeg_rate = static_cast<double>(read_u32(f, path));
  e.f_m = static_cast<double>(read_u32(f, path)) / 1000.0;
  const uint32_t dir = read_u32(f, path);
  if (dir > 2) throw IoError("bad direction code in " + path);
  e.direction = static_cast<Direction>(dir);
  e.attended = read_u32(f, path) != 0;
  if (e.n_channels < 1 || e.n_samples < 1 ||
      static_cast<uint64_t>(e.n_channels) * e.n_samples > (1u << 30))
    throw IoError("implausible epoch dimensions in " + path);
  e.data.resize(static_cast<size_t>(e.n_channels) * e.n_samples);
  for (auto& v : e.data) v = static_cast<double>(bits_float(read_u32(f, path)));
  return e;
}

void write_epoch_set(const EpochSet& set, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory: " + dir);

  nlohmann::json manifest;
  manifest["format_version"] = 1;
  manifest["kind"] = to_string(set.kind);
  manifest["length_s"] = set.length_s;
  manifest["seed"] = set.seed;
  if (!set.epochs.empty()) {
    manifest["eeg_rate"] = set.epochs.front().eeg_rate;
    manifest["n_channels"] = set.epochs.front().n_channels;
  }
  manifest["epochs"] = nlohmann::json::array();
  for (size_t i = 0; i < set.epochs.size(); ++i) {
    const Epoch& e = set.epochs[i];
    const std::string name = epoch_file_name(i);
    write_epoch(e, (fs::path(dir) / name).string());
    nlohmann::json entry;
    entry["file"] = name;
    entry["trial"] = e.trial_index;
    entry["direction"] = to_string(e.direction);
    entry["f_m"] = e.f_m;
    entry["attended"] = e.attended;
    if (i < set.onsets_s.size()) entry["onset_s"] = set.onsets_s[i];
    manifest["epochs"].push_back(std::move(entry));
  }

  std::ofstream mf(fs::path(dir) / "manifest.json");
  if (!mf) throw IoError("cannot write manifest in: " + dir);
  mf << manifest.dump(2) << "\n";
}

EpochSet read_epoch_set(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path mpath = fs::path(dir) / "manifest.json";
  std::ifstream mf(mpath);
  if (!mf)
    throw ValidationError("missing manifest.json in: " + dir +
                          " (not an epoch-set directory?)");
  nlohmann::json manifest;
  try {
    mf >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed manifest.json in " + dir + ": " + e.what());
  }

  EpochSet set;
  try {
    set.kind = stim_kind_from_string(manifest.at("kind").get<std::string>());
    set.length_s = manifest.at("length_s").get<double>();
    set.seed = manifest.value("seed", 0ull);
    for (const auto& entry : manifest.at("epochs")) {
      const std::string file = entry.at("file").get<std::string>();
      Epoch e = read_epoch((fs::path(dir) / file).string());
      e.trial_index = entry.at("trial").get<int>();
      e.kind = set.kind;
      e.length_s = set.length_s;
      const Direction dir_label =
          direction_from_string(entry.at("direction").get<std::string>());
      if (dir_label != e.direction || entry.at("attended").get<bool>() != e.attended)
        throw IoError("manifest labels disagree with epoch header: " + file);
      if (entry.contains("onset_s"))
        set.onsets_s.push_back(entry["onset_s"].get<double>());
      set.epochs.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("manifest.json missing field in " + dir + ": " + e.what());
  }
  return set;
}

}  // namespace assr
