#pragma once

#include <cstddef>
#include <filesystem>

#include "hanoi/search.hpp"

namespace hanoi {

// Distance-map file layout (little-endian, 32-byte header + p^n bytes):
//   0..3   magic "HGDM"
//   4      version (1)
//   5      pegs
//   6      disks
//   7      mask kind: 0 none, 1 frozen suffix, 2 fixed prefix, 3 banned
//   8..23  mask payload, zero padded
//          kind 1: count, peg
//          kind 2: length, then that many peg indices
//          kind 3: letter bitmask
//   24..31 source code
// Masks combining several components have no kind code and are rejected.

inline constexpr std::size_t kDistanceMapHeaderSize = 32;

// Writes atomically (temp file + rename); returns bytes written.
std::size_t save_distance_map(const DistanceMap& dmap,
                              const std::filesystem::path& path);

DistanceMap load_distance_map(const std::filesystem::path& path);

}  // namespace hanoi
