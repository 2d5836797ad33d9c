#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "eulerlax/field2d.hpp"
#include "eulerlax/field3d.hpp"

namespace eulerlax {

// EULF binary snapshots, all little-endian:
//   "EULF0001" | u32 ndim | u32 nx | u32 ny | [u32 nz] |
//   f64 lx | f64 ly | [f64 lz] | [u32 ncomp] | f64 samples...
// 2D files carry a single row-major component and no component count.
inline constexpr char kSnapshotMagic[9] = "EULF0001";

std::vector<std::uint8_t> encode_snapshot(const ScalarField2D& f);
std::vector<std::uint8_t> encode_snapshot(const std::vector<ScalarField3D>& components);

ScalarField2D decode_snapshot_2d(const std::vector<std::uint8_t>& bytes);
std::vector<ScalarField3D> decode_snapshot_3d(const std::vector<std::uint8_t>& bytes);

void write_snapshot(const std::filesystem::path& path, const ScalarField2D& f);
void write_snapshot(const std::filesystem::path& path, const VectorField3D& v);
ScalarField2D read_snapshot_2d(const std::filesystem::path& path);
std::vector<ScalarField3D> read_snapshot_3d(const std::filesystem::path& path);

}  // namespace eulerlax
