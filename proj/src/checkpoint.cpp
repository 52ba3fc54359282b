#include "percolab/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace percolab {

namespace {

constexpr char kMagic[8] = {'P', 'E', 'R', 'C', 'O', 'C', 'P', '1'};
constexpr uint32_t kVersion = 1;

constexpr uint64_t kFnvOffset = 0xCBF29CE484222325ull;
constexpr uint64_t kFnvPrime = 0x00000100000001B3ull;

void fnv_update(uint64_t& hash, const void* data, size_t size) {
  const unsigned char* bytes = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= kFnvPrime;
  }
}

struct Writer {
  std::ofstream out;
  uint64_t hash = kFnvOffset;

  explicit Writer(const std::string& path) : out(path, std::ios::binary) {
    if (!out) throw std::runtime_error("checkpoint: cannot open for writing: " + path);
  }

  void raw(const void* data, size_t size) {
    fnv_update(hash, data, size);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  }

  void u32(uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    raw(b, 4);
  }

  void u64(uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    raw(b, 8);
  }

  void f64(double v) { u64(std::bit_cast<uint64_t>(v)); }

  void grid(const std::vector<uint64_t>& values) {
    if constexpr (std::endian::native == std::endian::little) {
      raw(values.data(), values.size() * sizeof(uint64_t));
    } else {
      for (uint64_t v : values) u64(v);
    }
  }
};

struct Reader {
  std::ifstream in;
  uint64_t hash = kFnvOffset;
  std::string path;

  explicit Reader(const std::string& p) : in(p, std::ios::binary), path(p) {
    if (!in) throw std::runtime_error("checkpoint: cannot open: " + p);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("checkpoint: " + what + ": " + path);
  }

  void raw(void* data, size_t size) {
    in.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
    if (static_cast<size_t>(in.gcount()) != size) fail("truncated file");
    fnv_update(hash, data, size);
  }

  uint32_t u32() {
    unsigned char b[4];
    raw(b, 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
  }

  uint64_t u64() {
    unsigned char b[8];
    raw(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
  }

  double f64() { return std::bit_cast<double>(u64()); }

  void grid(std::vector<uint64_t>& values, size_t count) {
    values.resize(count);
    if constexpr (std::endian::native == std::endian::little) {
      raw(values.data(), count * sizeof(uint64_t));
    } else {
      for (size_t i = 0; i < count; ++i) values[i] = u64();
    }
  }
};

}  // namespace

void save_checkpoint(const std::string& path, const BatchedCounts& counts) {
  validate(counts.spec);
  Writer w(path);
  w.raw(kMagic, sizeof(kMagic));
  w.u32(kVersion);
  w.u32(static_cast<uint32_t>(counts.spec.width));
  w.u32(static_cast<uint32_t>(counts.spec.height));
  w.u32(static_cast<uint32_t>(counts.spec.anchor1_col));
  w.u32(static_cast<uint32_t>(counts.spec.anchor2_col));
  w.u32(static_cast<uint32_t>(counts.mode));
  w.u32(0);  // reserved
  w.f64(counts.spec.p);
  w.u64(counts.master_seed);
  w.u32(static_cast<uint32_t>(counts.batches.size()));
  w.u32(0);  // reserved
  for (const EventCounts& b : counts.batches) {
    if (b.spec != counts.spec || b.mode != counts.mode) {
      throw std::invalid_argument("checkpoint: batch spec mismatch");
    }
    w.u64(b.n_samples);
    w.u64(b.pair_connected);
    w.grid(b.to_boundary);
    w.grid(b.to_anchor1);
    w.grid(b.to_anchor2);
    w.grid(b.to_both_anchors);
    w.grid(b.to_interval);
    w.grid(b.to_complement);
  }
  const uint64_t checksum = w.hash;
  w.u64(checksum);
  w.out.flush();
  if (!w.out) throw std::runtime_error("checkpoint: write failed: " + path);
}

BatchedCounts load_checkpoint(const std::string& path) {
  Reader r(path);
  char magic[8];
  r.raw(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) r.fail("bad magic");
  if (r.u32() != kVersion) r.fail("unsupported format version");

  BatchedCounts out;
  out.spec.width = static_cast<int>(r.u32());
  out.spec.height = static_cast<int>(r.u32());
  out.spec.anchor1_col = static_cast<int>(r.u32());
  out.spec.anchor2_col = static_cast<int>(r.u32());
  const uint32_t mode = r.u32();
  if (mode > 1) r.fail("bad boundary mode");
  out.mode = static_cast<BoundaryMode>(mode);
  r.u32();  // reserved
  out.spec.p = r.f64();
  out.master_seed = r.u64();
  const uint32_t n_batches = r.u32();
  r.u32();  // reserved
  try {
    validate(out.spec);
  } catch (const std::invalid_argument& e) {
    r.fail(std::string("invalid lattice spec (") + e.what() + ")");
  }

  const size_t n = static_cast<size_t>(out.spec.site_count());
  out.batches.resize(n_batches);
  for (EventCounts& b : out.batches) {
    b.spec = out.spec;
    b.mode = out.mode;
    b.n_samples = r.u64();
    b.pair_connected = r.u64();
    r.grid(b.to_boundary, n);
    r.grid(b.to_anchor1, n);
    r.grid(b.to_anchor2, n);
    r.grid(b.to_both_anchors, n);
    r.grid(b.to_interval, n);
    r.grid(b.to_complement, n);
  }
  const uint64_t expected = r.hash;
  if (r.u64() != expected) r.fail("checksum mismatch");
  if (r.in.peek() != std::ifstream::traits_type::eof()) r.fail("trailing bytes");
  return out;
}

}  // namespace percolab
