#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hanoi/graph.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

// Worker count for BFS layer expansion. Results are identical for any value;
// 1 (the default) keeps everything on the calling thread.
void set_search_threads(int threads);
int search_threads();

// Exact single-source distances over a masked graph, one byte per state.
// 255 is the unreached/outside-mask sentinel; BFS fails loudly before any
// real distance could collide with it.
class DistanceMap {
 public:
  static constexpr std::uint8_t kUnreached = 0xFF;

  DistanceMap(PuzzleShape shape, SubgraphMask mask, State source,
              std::vector<std::uint8_t> dist);

  const PuzzleShape& shape() const { return shape_; }
  const SubgraphMask& mask() const { return mask_; }
  const State& source() const { return source_; }

  int at(const State& s) const { return dist_[s.code()]; }
  std::uint8_t at_code(std::uint64_t code) const { return dist_[code]; }
  bool reached(const State& s) const { return dist_[s.code()] != kUnreached; }
  int max_distance() const;
  const std::vector<std::uint8_t>& distances() const { return dist_; }

  friend bool operator==(const DistanceMap&, const DistanceMap&) = default;

 private:
  PuzzleShape shape_;
  SubgraphMask mask_;
  State source_;
  std::vector<std::uint8_t> dist_;
};

DistanceMap bfs_distance_map(const State& source, const SubgraphMask& mask = {},
                             std::uint64_t state_cap = kDefaultStateCap);

// Same BFS with an extra set of deleted vertices (the verify module's
// deletion tests). Deleted states stay at the unreached sentinel.
DistanceMap bfs_distance_map_avoiding(const State& source,
                                      const SubgraphMask& mask,
                                      const std::vector<State>& deleted,
                                      std::uint64_t state_cap = kDefaultStateCap);

// Exact point-to-point distance by bidirectional layer-synchronous BFS;
// memory is proportional to the visited frontiers, not to p^n.
// Throws Unreachable when the mask separates u from v.
int distance(const State& u, const State& v, const SubgraphMask& mask = {},
             std::uint64_t state_cap = kDefaultStateCap);

enum class Multiplicity : std::uint8_t { none = 0, one = 1, many = 2 };

// Saturating count of shortest source->v paths per state (0, 1, many).
class PathMultiplicity {
 public:
  PathMultiplicity(PuzzleShape shape, State source,
                   std::vector<std::uint8_t> counts);

  Multiplicity at(const State& s) const {
    return static_cast<Multiplicity>(counts_[s.code()]);
  }
  Multiplicity at_code(std::uint64_t code) const {
    return static_cast<Multiplicity>(counts_[code]);
  }
  const State& source() const { return source_; }

 private:
  PuzzleShape shape_;
  State source_;
  std::vector<std::uint8_t> counts_;
};

PathMultiplicity path_multiplicity(const DistanceMap& dmap);
PathMultiplicity path_multiplicity(const State& source,
                                   const SubgraphMask& mask = {},
                                   std::uint64_t state_cap = kDefaultStateCap);

// The unique shortest path source -> v as a state sequence (inclusive).
// Throws Unreached / NotUnique when the precondition fails.
std::vector<State> reconstruct_unique_path(const DistanceMap& dmap,
                                           const PathMultiplicity& mult,
                                           const State& v);

// First s in `via` (caller order) with d(a,s) + d(s,b) = d(a,b), or nullopt.
std::optional<State> passes_through(const State& a, const State& b,
                                    const std::vector<State>& via,
                                    const SubgraphMask& mask = {},
                                    std::uint64_t state_cap = kDefaultStateCap);

}  // namespace hanoi
