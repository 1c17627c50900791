#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/errors.hpp"

namespace hanoi {

inline constexpr int kMinPegs = 3;
inline constexpr int kMaxPegs = 8;   // letters A..H
inline constexpr int kMaxDisks = 21; // 8^21 still fits in 64 bits
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 28;

inline char peg_letter(int peg) { return static_cast<char>('A' + peg); }

// Small set of pegs/letters (bitmask over A..H).
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr LetterSet(std::initializer_list<int> pegs) {
    for (int p : pegs) bits_ |= mask(p);
  }
  // Parses "AB" style strings. Throws InvalidLetter outside A..H.
  static LetterSet parse(std::string_view letters);
  static constexpr LetterSet from_bits(std::uint8_t b) {
    LetterSet s;
    s.bits_ = b;
    return s;
  }

  constexpr void add(int peg) { bits_ |= mask(peg); }
  constexpr bool contains(int peg) const { return (bits_ & mask(peg)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const;
  constexpr std::uint8_t bits() const { return bits_; }
  std::string to_string() const;  // "AB"

  friend constexpr bool operator==(LetterSet, LetterSet) = default;

 private:
  static constexpr std::uint8_t mask(int peg) {
    return static_cast<std::uint8_t>(1u << peg);
  }
  std::uint8_t bits_ = 0;
};

// Geometry of one game: p pegs and n disks. States live in [0, p^n).
class PuzzleShape {
 public:
  PuzzleShape(int pegs, int disks);

  int pegs() const { return pegs_; }
  int disks() const { return disks_; }
  std::uint64_t pow(int exponent) const;       // pegs^exponent
  std::uint64_t state_count() const { return pow(disks_); }

  // Throws CapExceeded unless p^n <= cap. Called by every operation that
  // walks or allocates the full state space.
  void require_within(std::uint64_t state_cap) const;

  friend bool operator==(const PuzzleShape&, const PuzzleShape&) = default;

 private:
  int pegs_;
  int disks_;
};

struct SpecialForm {
  int suffix_len = 0;  // i in A^{n-i} X^i
  int peg = 0;         // X
  friend bool operator==(const SpecialForm&, const SpecialForm&) = default;
};

// One position of the game, packed as a mixed-radix number: digit k in base p
// is the peg of disk k, where disk 0 is the smallest. Labels follow the
// opposite convention: the leftmost letter is the peg of the largest disk.
class State {
 public:
  State(PuzzleShape shape, std::uint64_t code);
  static State from_label(std::string_view label, int pegs);

  const PuzzleShape& shape() const { return shape_; }
  std::uint64_t code() const { return code_; }

  int peg_of_disk(int disk) const;  // disk 1-based, 1 = smallest
  std::string label() const;

  // Smallest disk currently on `peg`, or nullopt if the peg is empty.
  std::optional<int> top_disk(int peg) const;

  // The peg when every disk sits on it, otherwise nullopt.
  std::optional<int> perfect_peg() const;

  // Matches labels of the form A^{n-i} X^i with X outside `excluded`
  // (A^n itself never matches). `excluded` must contain A.
  std::optional<SpecialForm> special_form(LetterSet excluded = {0, 1}) const;

  friend bool operator==(const State&, const State&) = default;

 private:
  PuzzleShape shape_;
  std::uint64_t code_;
};

// All-disks-on-one-peg state X^n.
State perfect_state(PuzzleShape shape, int peg);

struct Move {
  int disk = 0;  // 1-based, 1 = smallest
  int from_peg = 0;
  int to_peg = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

// All legal moves of `s`, ordered by (from_peg, to_peg) ascending.
std::vector<Move> legal_moves(const State& s);

// Applies `m` with full legality checking; throws IllegalMove naming the
// violated rule (same peg / not topmost / larger onto smaller).
State apply_move(const State& s, const Move& m);

}  // namespace hanoi
