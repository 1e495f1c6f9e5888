#include "assr/feature_csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace assr {

namespace {

constexpr int kChannels = 16;
constexpr int kPairs = kChannels * (kChannels - 1) / 2;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, int row, const char* what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("feature CSV row " + std::to_string(row) +
                          ": bad " + std::string(what) + " value '" + s + "'");
  }
}

}  // namespace

void write_feature_csv(const std::vector<FeatureVector>& features,
                       const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);

  for (int a = 1; a <= kChannels; ++a)
    for (int b = a + 1; b <= kChannels; ++b) {
      char buf[24];
      std::snprintf(buf, sizeof(buf), "pair_%02d_%02d", a, b);
      f << buf << ',';
    }
  f << "f_m,direction,attended,kind,length,trial\n";

  for (const FeatureVector& fv : features) {
    if (static_cast<int>(fv.values.size()) != kPairs)
      throw ValidationError("feature CSV requires " + std::to_string(kPairs) +
                            " PLV values per row (16 channels), got " +
                            std::to_string(fv.values.size()));
    for (double v : fv.values) f << format_double(v) << ',';
    f << format_double(fv.f_m) << ',' << to_string(fv.direction) << ','
      << (fv.attended ? 1 : 0) << ',' << to_string(fv.kind) << ','
      << format_double(fv.length_s) << ',' << fv.trial_index << "\n";
  }
  if (!f) throw IoError("write failed: " + path);
}

std::vector<FeatureVector> read_feature_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open for reading: " + path);

  std::string line;
  if (!std::getline(f, line))
    throw ValidationError("feature CSV is empty: " + path);
  const auto header = split_csv_line(line);
  if (header.size() != kPairs + 6 || header[0] != "pair_01_02" ||
      header[kPairs - 1] != "pair_15_16" || header[kPairs] != "f_m")
    throw ValidationError("feature CSV header mismatch in " + path);

  std::vector<FeatureVector> out;
  int row = 1;
  while (std::getline(f, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != kPairs + 6)
      throw ValidationError("feature CSV row " + std::to_string(row) + ": expected " +
                            std::to_string(kPairs + 6) + " fields, got " +
                            std::to_string(fields.size()));
    FeatureVector fv;
    fv.values.resize(kPairs);
    for (int i = 0; i < kPairs; ++i)
      fv.values[i] = parse_double(fields[i], row, "PLV");
    fv.f_m = parse_double(fields[kPairs], row, "f_m");
    try {
      fv.direction = direction_from_string(fields[kPairs + 1]);
      fv.kind = stim_kind_from_string(fields[kPairs + 3]);
    } catch (const ValidationError& e) {
      throw ValidationError("feature CSV row " + std::to_string(row) + ": " +
                            e.what());
    }
    const std::string& att = fields[kPairs + 2];
    if (att != "0" && att != "1")
      throw ValidationError("feature CSV row " + std::to_string(row) +
                            ": attended must be 0 or 1");
    fv.attended = att == "1";
    fv.length_s = parse_double(fields[kPairs + 4], row, "length");
    fv.trial_index =
        static_cast<int>(parse_double(fields[kPairs + 5], row, "trial"));
    out.push_back(std::move(fv));
  }
  return out;
}

}  // namespace assr
