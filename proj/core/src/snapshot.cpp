#include "eulerlax/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "eulerlax/errors.hpp"

namespace eulerlax {
namespace {

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out_.insert(out_.end(), b, b + n);
  }
  void u32(std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void f64(double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int s = 0; s < 64; s += 8) out_.push_back(static_cast<std::uint8_t>(bits >> s));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& in) : in_(in) {}

  void need(std::size_t n) const {
    if (pos_ + n > in_.size()) throw FormatError("EULF: truncated file");
  }
  void magic() {
    need(8);
    if (std::memcmp(in_.data(), kSnapshotMagic, 8) != 0) throw FormatError("EULF: bad magic");
    pos_ += 8;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int s = 0; s < 4; ++s) v |= static_cast<std::uint32_t>(in_[pos_++]) << (8 * s);
    return v;
  }
  double f64() {
    need(8);
    std::uint64_t bits = 0;
    for (int s = 0; s < 8; ++s) bits |= static_cast<std::uint64_t>(in_[pos_++]) << (8 * s);
    return std::bit_cast<double>(bits);
  }
  void finish() const {
    if (pos_ != in_.size()) throw FormatError("EULF: trailing bytes");
  }

 private:
  const std::vector<std::uint8_t>& in_;
  std::size_t pos_ = 0;
};

int as_count(std::uint32_t v) {
  if (v > (1u << 20)) throw FormatError("EULF: implausible grid size " + std::to_string(v));
  return static_cast<int>(v);
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void dump(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

std::vector<std::uint8_t> encode_snapshot(const ScalarField2D& f) {
  const Grid2D& g = f.grid();
  Writer w;
  w.bytes(kSnapshotMagic, 8);
  w.u32(2);
  w.u32(static_cast<std::uint32_t>(g.nx));
  w.u32(static_cast<std::uint32_t>(g.ny));
  w.f64(g.lx);
  w.f64(g.ly);
  for (double v : f.values()) w.f64(v);
  return w.take();
}

std::vector<std::uint8_t> encode_snapshot(const std::vector<ScalarField3D>& components) {
  if (components.empty()) throw InvalidArgument("EULF 3D snapshot needs at least one component");
  const Grid3D& g = components.front().grid();
  Writer w;
  w.bytes(kSnapshotMagic, 8);
  w.u32(3);
  w.u32(static_cast<std::uint32_t>(g.nx));
  w.u32(static_cast<std::uint32_t>(g.ny));
  w.u32(static_cast<std::uint32_t>(g.nz));
  w.f64(g.lx);
  w.f64(g.ly);
  w.f64(g.lz);
  w.u32(static_cast<std::uint32_t>(components.size()));
  for (const auto& comp : components) {
    if (!(comp.grid() == g)) throw GridMismatch("encode_snapshot");
    for (double v : comp.values()) w.f64(v);
  }
  return w.take();
}

ScalarField2D decode_snapshot_2d(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  r.magic();
  if (const auto ndim = r.u32(); ndim != 2) {
    throw FormatError("EULF: expected ndim 2, found " + std::to_string(ndim));
  }
  const int nx = as_count(r.u32());
  const int ny = as_count(r.u32());
  const double lx = r.f64();
  const double ly = r.f64();
  const Grid2D grid(nx, ny, lx, ly);
  std::vector<double> values(grid.size());
  for (double& v : values) v = r.f64();
  r.finish();
  return ScalarField2D(grid, std::move(values));
}

std::vector<ScalarField3D> decode_snapshot_3d(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  r.magic();
  if (const auto ndim = r.u32(); ndim != 3) {
    throw FormatError("EULF: expected ndim 3, found " + std::to_string(ndim));
  }
  const int nx = as_count(r.u32());
  const int ny = as_count(r.u32());
  const int nz = as_count(r.u32());
  const double lx = r.f64();
  const double ly = r.f64();
  const double lz = r.f64();
  const Grid3D grid(nx, ny, nz, lx, ly, lz);
  const auto ncomp = r.u32();
  if (ncomp == 0 || ncomp > 16) throw FormatError("EULF: bad component count");
  std::vector<ScalarField3D> comps;
  for (std::uint32_t c = 0; c < ncomp; ++c) {
    std::vector<double> values(grid.size());
    for (double& v : values) v = r.f64();
    comps.emplace_back(grid, std::move(values));
  }
  r.finish();
  return comps;
}

void write_snapshot(const std::filesystem::path& path, const ScalarField2D& f) {
  dump(path, encode_snapshot(f));
}

void write_snapshot(const std::filesystem::path& path, const VectorField3D& v) {
  dump(path, encode_snapshot(std::vector<ScalarField3D>{v[0], v[1], v[2]}));
}

ScalarField2D read_snapshot_2d(const std::filesystem::path& path) {
  return decode_snapshot_2d(slurp(path));
}

std::vector<ScalarField3D> read_snapshot_3d(const std::filesystem::path& path) {
  return decode_snapshot_3d(slurp(path));
}

}  // namespace eulerlax
