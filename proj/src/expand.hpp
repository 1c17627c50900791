#pragma once

// Internal digit-level expansion shared by the traversal loops. Not part of
// the public API.

#include <cstdint>

#include "hanoi/graph.hpp"
#include "hanoi/state.hpp"

namespace hanoi::detail {

struct ShapeView {
  int pegs = 0;
  int disks = 0;
  std::uint64_t pow[kMaxDisks + 1] = {};

  explicit ShapeView(const PuzzleShape& s) : pegs(s.pegs()), disks(s.disks()) {
    pow[0] = 1;
    for (int k = 1; k <= disks; ++k)
      pow[k] = pow[k - 1] * static_cast<std::uint64_t>(pegs);
  }
};

// Mask compiled against a shape: moves are restricted to disks whose 0-based
// index lies in [lo_disk, hi_disk) and to unbanned target pegs; game-rule
// legality takes care of the rest (nothing may land on a frozen suffix).
struct MaskView {
  int lo_disk = 0;
  int hi_disk = 0;
  std::uint8_t banned = 0;
  int frozen_peg = -1;   // -1 = no frozen suffix
  int frozen_count = 0;
  int prefix_len = 0;
  std::uint8_t prefix_digit[kMaxDisks] = {};  // digit at index hi_disk + j

  MaskView(const ShapeView& shape, const SubgraphMask& mask)
      : hi_disk(shape.disks) {
    if (mask.frozen_suffix) {
      frozen_count = mask.frozen_suffix->count;
      frozen_peg = mask.frozen_suffix->peg;
      if (frozen_count < 1 || frozen_count > shape.disks)
        throw std::invalid_argument("frozen suffix count out of range");
      if (frozen_peg < 0 || frozen_peg >= shape.pegs)
        throw std::invalid_argument("frozen suffix peg out of range");
      lo_disk = frozen_count;
    }
    if (mask.fixed_prefix) {
      const std::string& w = *mask.fixed_prefix;
      prefix_len = static_cast<int>(w.size());
      if (prefix_len < 1 || prefix_len > shape.disks)
        throw std::invalid_argument("fixed prefix length out of range");
      hi_disk = shape.disks - prefix_len;
      for (int j = 0; j < prefix_len; ++j) {
        const char c = w[static_cast<std::size_t>(j)];
        if (c < 'A' || c >= 'A' + shape.pegs)
          throw InvalidLetter(std::string("prefix letter '") + c +
                              "' out of range");
        // w[0] is the largest disk = highest digit.
        prefix_digit[prefix_len - 1 - j] = static_cast<std::uint8_t>(c - 'A');
      }
    }
    banned = mask.banned_letters.bits();
    banned &= static_cast<std::uint8_t>((1u << shape.pegs) - 1);
  }

  bool admits(std::uint64_t code, const ShapeView& shape) const {
    std::uint64_t tmp = code;
    for (int k = 0; k < shape.disks; ++k) {
      const int peg = static_cast<int>(tmp % shape.pegs);
      if (banned & (1u << peg)) return false;
      if (k < frozen_count && peg != frozen_peg) return false;
      if (k >= hi_disk && peg != prefix_digit[k - hi_disk]) return false;
      tmp /= static_cast<std::uint64_t>(shape.pegs);
    }
    return true;
  }
};

// Calls fn(next_code, disk_index0, from_peg, to_peg) for every mask-respecting
// move out of `code`, in ascending (from_peg, to_peg) order. `code` itself is
// assumed to satisfy the mask.
template <class Fn>
inline void for_each_neighbor(std::uint64_t code, const ShapeView& shape,
                              const MaskView& mask, Fn&& fn) {
  const int p = shape.pegs;
  const int n = shape.disks;
  int top[kMaxPegs];
  for (int f = 0; f < p; ++f) top[f] = n;
  std::uint64_t tmp = code;
  for (int k = 0; k < n; ++k) {
    const int peg = static_cast<int>(tmp % p);
    if (top[peg] == n) top[peg] = k;
    tmp /= static_cast<std::uint64_t>(p);
  }
  for (int f = 0; f < p; ++f) {
    const int d = top[f];
    if (d < mask.lo_disk || d >= mask.hi_disk) continue;
    const std::uint64_t weight = shape.pow[d];
    const std::uint64_t base = code - static_cast<std::uint64_t>(f) * weight;
    for (int t = 0; t < p; ++t) {
      if (t == f || d >= top[t]) continue;
      if (mask.banned & (1u << t)) continue;
      fn(base + static_cast<std::uint64_t>(t) * weight, d, f, t);
    }
  }
}

}  // namespace hanoi::detail
