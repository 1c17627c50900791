#include "hanoi/framestewart.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hanoi {

namespace {

constexpr std::int64_t kNoSolution = std::numeric_limits<std::int64_t>::max() / 4;

constexpr int kTableMaxPegs = 16;
constexpr int kTableMaxDisks = 62;  // keeps 2 F(3,n) inside int64

}  // namespace

FsTable::FsTable(int max_pegs, int max_disks)
    : max_pegs_(max_pegs), max_disks_(max_disks) {
  if (max_pegs < 3 || max_pegs > kTableMaxPegs)
    throw std::invalid_argument("table peg bound must be in [3, 16]");
  if (max_disks < 1 || max_disks > kTableMaxDisks)
    throw std::invalid_argument("table disk bound must be in [1, 62]");

  values_.assign(max_pegs + 1, std::vector<std::int64_t>(max_disks + 1, 0));
  split_sets_.assign(max_pegs + 1,
                     std::vector<std::vector<int>>(max_disks + 1));

  // Two pegs move at most one disk; the sentinel keeps such splits out of
  // every argmin below.
  for (int n = 0; n <= max_disks; ++n)
    values_[2][n] = n <= 1 ? n : kNoSolution;

  for (int p = 3; p <= max_pegs; ++p) {
    values_[p][0] = 0;
    if (max_disks >= 1) values_[p][1] = 1;
    for (int n = 2; n <= max_disks; ++n) {
      std::int64_t best = kNoSolution;
      for (int i = 1; i <= n - 1; ++i) {
        const std::int64_t tail = values_[p - 1][n - i];
        if (tail >= kNoSolution) continue;
        const std::int64_t candidate = 2 * values_[p][i] + tail;
        if (candidate < best) {
          best = candidate;
          split_sets_[p][n].clear();
        }
        if (candidate == best) split_sets_[p][n].push_back(i);
      }
      values_[p][n] = best;
    }
  }
}

std::int64_t FsTable::value(int pegs, int disks) const {
  if (pegs < 3 || pegs > max_pegs_ || disks < 0 || disks > max_disks_)
    throw std::invalid_argument("F(" + std::to_string(pegs) + ", " +
                                std::to_string(disks) + ") outside the table");
  return values_[pegs][disks];
}

const std::vector<int>& FsTable::splits(int pegs, int disks) const {
  if (pegs < 3 || pegs > max_pegs_ || disks < 0 || disks > max_disks_)
    throw std::invalid_argument("splits outside the table");
  return split_sets_[pegs][disks];
}

std::string MoveSequence::to_text() const {
  std::ostringstream out;
  for (const Move& m : moves)
    out << m.disk << ' ' << peg_letter(m.from_peg) << ' '
        << peg_letter(m.to_peg) << '\n';
  return out.str();
}

namespace {

int lowest_spare(std::uint8_t avail, int from, int to) {
  const std::uint8_t spare =
      avail & static_cast<std::uint8_t>(~((1u << from) | (1u << to)));
  return std::countr_zero(spare);
}

// Moves the `count` disks starting at 1-based index disk_offset+1 from `from`
// to `to`, using only the pegs in `avail` (which contains from and to).
void transfer(int count, int disk_offset, int from, int to, std::uint8_t avail,
              const FsTable& table, std::vector<Move>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(Move{disk_offset + 1, from, to});
    return;
  }
  const int pegs_avail = std::popcount(avail);
  if (pegs_avail < 3)
    throw NoSparePeg("cannot move " + std::to_string(count) +
                     " disks with " + std::to_string(pegs_avail) + " pegs");
  const int split = table.splits(pegs_avail, count).front();
  const int spare = lowest_spare(avail, from, to);
  transfer(split, disk_offset, from, spare, avail, table, out);
  transfer(count - split, disk_offset + split, from, to,
           avail & static_cast<std::uint8_t>(~(1u << spare)), table, out);
  transfer(split, disk_offset, spare, to, avail, table, out);
}

std::uint8_t all_pegs(int pegs) {
  return static_cast<std::uint8_t>((1u << pegs) - 1);
}

}  // namespace

MoveSequence fs_moves(int pegs, int disks, int from_peg, int to_peg) {
  if (pegs < 3) throw NoSparePeg("need at least 3 pegs");
  if (pegs > kMaxPegs)
    throw std::invalid_argument("peg count above " + std::to_string(kMaxPegs));
  if (disks < 0 || disks > kTableMaxDisks)
    throw std::invalid_argument("disk count out of range");
  if (from_peg == to_peg || from_peg < 0 || from_peg >= pegs || to_peg < 0 ||
      to_peg >= pegs)
    throw std::invalid_argument("bad from/to pegs");

  MoveSequence seq{pegs, disks, from_peg, to_peg, {}};
  if (disks > 0) {
    FsTable table(pegs, disks);
    transfer(disks, 0, from_peg, to_peg, all_pegs(pegs), table, seq.moves);
  }
  return seq;
}

State validate_moves(const State& start, const MoveSequence& seq) {
  State current = start;
  for (std::size_t step = 0; step < seq.moves.size(); ++step) {
    try {
      current = apply_move(current, seq.moves[step]);
    } catch (const IllegalMove& e) {
      throw IllegalMove("step " + std::to_string(step) + ": " + e.what());
    }
  }
  return current;
}

std::vector<State> canonical_structured_path(int pegs, int disks, int split,
                                             int via_peg) {
  if (split < 1 || split > disks - 1)
    throw InvalidSplit("split must be in [1, n-1], got " +
                       std::to_string(split));
  if (via_peg < 2 || via_peg >= pegs)
    throw InvalidSplit("via peg must be a letter other than A and B");
  PuzzleShape shape(pegs, disks);
  FsTable table(pegs, disks);

  std::vector<Move> moves;
  // Local edges into the special vertex, bridges across the X-free copies,
  // local edges out to the target.
  transfer(split, 0, 0, via_peg, all_pegs(pegs), table, moves);
  transfer(disks - split, split, 0, 1,
           all_pegs(pegs) & static_cast<std::uint8_t>(~(1u << via_peg)), table,
           moves);
  transfer(split, 0, via_peg, 1, all_pegs(pegs), table, moves);

  std::vector<State> path;
  path.reserve(moves.size() + 1);
  path.push_back(perfect_state(shape, 0));
  for (const Move& m : moves) path.push_back(apply_move(path.back(), m));
  return path;
}

}  // namespace hanoi
