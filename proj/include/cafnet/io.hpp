#pragma once
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cafnet/error.hpp"

namespace cafnet {

// Little-endian byte buffer builder. The build targets are little-endian,
// but going through explicit serialisation keeps the formats well-defined.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { raw(&v, 2); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void i16(std::int16_t v) { raw(&v, 2); }
  void f32(float v) { raw(&v, 4); }
  void f32_array(const float* p, std::size_t n) { raw(p, 4 * n); }
  void i16_array(const std::int16_t* p, std::size_t n) { raw(p, 2 * n); }
  void bytes(const void* p, std::size_t n) { raw(p, n); }
  void str(const std::string& s) { raw(s.data(), s.size()); }

  const std::vector<char>& data() const { return buf_; }

 private:
  void raw(const void* p, std::size_t n) {
    const char* c = static_cast<const char*>(p);
    buf_.insert(buf_.end(), c, c + n);
  }
  std::vector<char> buf_;
};

class ByteReader {
 public:
  ByteReader(const char* data, std::size_t size) : p_(data), end_(data + size) {}
  explicit ByteReader(const std::vector<char>& v) : ByteReader(v.data(), v.size()) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(*take(1)); }
  std::uint16_t u16() { return read<std::uint16_t>(); }
  std::uint32_t u32() { return read<std::uint32_t>(); }
  std::uint64_t u64() { return read<std::uint64_t>(); }
  std::int16_t i16() { return read<std::int16_t>(); }
  float f32() { return read<float>(); }
  void f32_array(float* out, std::size_t n) { std::memcpy(out, take(4 * n), 4 * n); }
  void i16_array(std::int16_t* out, std::size_t n) { std::memcpy(out, take(2 * n), 2 * n); }
  std::string str(std::size_t n) {
    const char* p = take(n);
    return std::string(p, n);
  }
  void skip(std::size_t n) { take(n); }
  std::size_t remaining() const { return static_cast<std::size_t>(end_ - p_); }

 private:
  template <class T>
  T read() {
    T v;
    std::memcpy(&v, take(sizeof(T)), sizeof(T));
    return v;
  }
  const char* take(std::size_t n) {
    if (remaining() < n) throw IoError("unexpected end of file");
    const char* p = p_;
    p_ += n;
    return p;
  }
  const char* p_;
  const char* end_;
};

inline std::vector<char> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<char> buf((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path);
  return buf;
}

// Temp file + rename; readers never observe partial contents.
inline void atomic_write_file(const std::string& path, const std::vector<char>& data) {
  namespace fs = std::filesystem;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out.good()) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("rename failed: " + path);
  }
}

inline void atomic_write_file(const std::string& path, const std::string& text) {
  atomic_write_file(path, std::vector<char>(text.begin(), text.end()));
}

}  // namespace cafnet
