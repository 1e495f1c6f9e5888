#include "assr/wav.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace assr {

namespace {

void put_u16(std::vector<uint8_t>& b, uint16_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
}

void put_u32(std::vector<uint8_t>& b, uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xff);
}

uint16_t get_u16(const uint8_t* p) { return p[0] | (p[1] << 8); }
uint32_t get_u32(const uint8_t* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (uint32_t(p[3]) << 24);
}

int16_t to_pcm(double s) {
  if (!std::isfinite(s) || s < -1.0 || s > 1.0)
    throw ValidationError("sample out of range [-1, 1] for PCM conversion");
  return static_cast<int16_t>(std::lround(s * 32767.0));
}

}  // namespace

void write_wav(const StereoWaveform& stereo, const std::string& path) {
  if (stereo.left.samples.size() != stereo.right.samples.size())
    throw ValidationError("stereo channels must have equal length");
  if (stereo.left.rate != stereo.right.rate)
    throw ValidationError("stereo channels must have equal rate");
  const double rate = stereo.left.rate;
  if (rate <= 0.0 || rate != std::floor(rate))
    throw ValidationError("WAV output requires a positive integral sample rate");

  const uint32_t n = static_cast<uint32_t>(stereo.left.samples.size());
  const uint32_t sample_rate = static_cast<uint32_t>(rate);
  const uint16_t channels = 2, bits = 16;
  const uint32_t block_align = channels * bits / 8;
  const uint32_t data_bytes = n * block_align;

  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32(out, 16);               // fmt chunk size
  put_u16(out, 1);                // PCM
  put_u16(out, channels);
  put_u32(out, sample_rate);
  put_u32(out, sample_rate * block_align);  // byte rate
  put_u16(out, static_cast<uint16_t>(block_align));
  put_u16(out, bits);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);
  for (uint32_t i = 0; i < n; ++i) {
    put_u16(out, static_cast<uint16_t>(to_pcm(stereo.left.samples[i])));
    put_u16(out, static_cast<uint16_t>(to_pcm(stereo.right.samples[i])));
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed: " + path);
}

StereoWaveform read_wav(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::vector<uint8_t> buf((std::istreambuf_iterator<char>(f)),
                           std::istreambuf_iterator<char>());
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw IoError("not a RIFF/WAVE file: " + path);

  uint32_t sample_rate = 0;
  uint16_t channels = 0, bits = 0, format = 0;
  size_t data_off = 0, data_len = 0;
  size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const uint32_t chunk_len = get_u32(buf.data() + pos + 4);
    const uint8_t* body = buf.data() + pos + 8;
    if (pos + 8 + chunk_len > buf.size())
      throw IoError("truncated WAV chunk: " + path);
    if (std::memcmp(buf.data() + pos, "fmt ", 4) == 0 && chunk_len >= 16) {
      format = get_u16(body);
      channels = get_u16(body + 2);
      sample_rate = get_u32(body + 4);
      bits = get_u16(body + 14);
    } else if (std::memcmp(buf.data() + pos, "data", 4) == 0) {
      data_off = pos + 8;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);
  }
  if (format != 1 || channels != 2 || bits != 16 || data_off == 0)
    throw IoError("unsupported WAV layout (need PCM16 stereo): " + path);

  const size_t n = data_len / 4;
  StereoWaveform s;
  s.left.rate = s.right.rate = static_cast<double>(sample_rate);
  s.left.samples.resize(n);
  s.right.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const auto l = static_cast<int16_t>(get_u16(buf.data() + data_off + 4 * i));
    const auto r = static_cast<int16_t>(get_u16(buf.data() + data_off + 4 * i + 2));
    s.left.samples[i] = l / 32767.0;
    s.right.samples[i] = r / 32767.0;
  }
  return s;
}

}  // namespace assr
