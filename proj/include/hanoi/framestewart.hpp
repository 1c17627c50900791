#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hanoi/state.hpp"

namespace hanoi {

// Frame-Stewart numbers F(p, n) with every minimizing split i, filled by one
// uniform recursion: F(p,0)=0, F(p,1)=1, two pegs cannot move a 2-stack, and
// F(p,n) = min_i { 2 F(p,i) + F(p-1,n-i) } otherwise.
class FsTable {
 public:
  // value(2, n) for n >= 2 returns this sentinel instead of a count.
  static constexpr std::int64_t kUnsolvable =
      std::int64_t{1} << 60;

  FsTable(int max_pegs, int max_disks);

  int max_pegs() const { return max_pegs_; }
  int max_disks() const { return max_disks_; }

  std::int64_t value(int pegs, int disks) const;
  // Argmin splits, ascending; empty for n < 2 where the recursion is void.
  const std::vector<int>& splits(int pegs, int disks) const;

 private:
  int max_pegs_;
  int max_disks_;
  std::vector<std::vector<std::int64_t>> values_;          // [pegs][disks]
  std::vector<std::vector<std::vector<int>>> split_sets_;  // [pegs][disks]
};

struct MoveSequence {
  int pegs = 0;
  int disks = 0;
  int from_peg = 0;
  int to_peg = 0;
  std::vector<Move> moves;

  std::size_t size() const { return moves.size(); }
  // Line-oriented text: "disk FROM TO" with 1-based disks and peg letters.
  std::string to_text() const;
};

// The recursive Frame-Stewart move sequence between perfect states. Split
// ties break to the smallest i; the spare peg is the lowest-index free one.
MoveSequence fs_moves(int pegs, int disks, int from_peg, int to_peg);

// Replays `seq` from `start` with full legality checking; throws IllegalMove
// tagged with the failing step index.
State validate_moves(const State& start, const MoveSequence& seq);

// The structured shortest-path candidate A^n -> A^{n-i}X^i -> B^{n-i}X^i ->
// B^n: local edges, then bridges avoiding letter X, then local edges. Length
// is F(p,i) + F(p-1,n-i) + F(p,i).
std::vector<State> canonical_structured_path(int pegs, int disks, int split,
                                             int via_peg);

}  // namespace hanoi
