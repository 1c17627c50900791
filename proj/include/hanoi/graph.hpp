#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/state.hpp"

namespace hanoi {

struct FrozenSuffix {
  int count = 0;  // the smallest `count` disks are pinned
  int peg = 0;    // on this peg
  friend bool operator==(const FrozenSuffix&, const FrozenSuffix&) = default;
};

// Restriction of the full graph. Masks only ever remove vertices and edges:
//   frozen_suffix(i, X)  - the i smallest disks stay on X (bridge-only view);
//   fixed_prefix(W)      - the |W| largest disks stay put (one R_i class);
//   banned_letters       - pegs no disk may occupy or move to.
// Components combine; an over-constrained combination simply admits nothing.
struct SubgraphMask {
  std::optional<FrozenSuffix> frozen_suffix;
  std::optional<std::string> fixed_prefix;  // letters, leftmost = largest disk
  LetterSet banned_letters;

  bool empty() const {
    return !frozen_suffix && !fixed_prefix && banned_letters.empty();
  }
  // True when the state satisfies every component of the mask.
  bool admits(const State& s) const;

  friend bool operator==(const SubgraphMask&, const SubgraphMask&) = default;
};

// Mask-respecting neighbors of `s`, in deterministic (from_peg, to_peg)
// order. Throws MaskViolation when `s` itself violates the mask.
std::vector<State> neighbors(const State& s, const SubgraphMask& mask = {});

// G(p,n) / R_i: vertices are the p^{n-i} prefix words, two classes adjacent
// iff some bridge of the full graph joins them. Class index = the word's own
// state code in shape (p, n-i).
struct QuotientGraph {
  PuzzleShape class_shape;
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted
  std::size_t edge_count = 0;

  std::string class_label(std::uint32_t cls) const {
    return State(class_shape, cls).label();
  }
};

QuotientGraph quotient_graph(PuzzleShape shape, int level,
                             std::uint64_t state_cap = kDefaultStateCap);

// Border S_i of the nested A-prefixed copies inside G(p,m): states labelled
// A^{m-i} W where W has length i, avoids A and misses at least one other
// letter. Members are sorted by code.
struct BorderSet {
  PuzzleShape ambient;
  int level = 0;
  std::vector<State> members;
};

BorderSet border_set(PuzzleShape ambient, int level);

// Count of |S_i| by inclusion-exclusion over the choice of missing letter.
std::uint64_t border_set_size(int pegs, int level);

// Canonical bijection behind the reduced-subgraph isomorphism: words of
// length n-i avoiding letter X correspond to states of G(p-1, n-i) with the
// remaining letters' order preserved.
class ReducedIsoMap {
 public:
  ReducedIsoMap(PuzzleShape shape, int level, int removed_letter);

  PuzzleShape word_shape() const { return word_shape_; }     // (p, n-i)
  PuzzleShape reduced_shape() const { return reduced_shape_; }  // (p-1, n-i)
  int removed_letter() const { return removed_; }

  bool avoids_removed(std::uint64_t word_code) const;
  std::uint64_t to_reduced(std::uint64_t word_code) const;
  std::uint64_t to_word(std::uint64_t reduced_code) const;

 private:
  PuzzleShape word_shape_;
  PuzzleShape reduced_shape_;
  int removed_;
};

ReducedIsoMap reduced_subgraph_iso_map(PuzzleShape shape, int level,
                                       int removed_letter);

inline constexpr std::uint64_t kDotRenderCap = 4096;

struct DotOptions {
  std::optional<int> highlight_classes;  // color by R_i class for this i
  bool mark_bridges = false;             // style bridges vs local edges
  SubgraphMask restrict_to;              // emit only this subgraph
};

// Undirected DOT text; node ids are labels, one edge per unordered pair.
std::string export_dot(PuzzleShape shape, const DotOptions& options = {});

}  // namespace hanoi
