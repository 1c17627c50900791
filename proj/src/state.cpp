#include "hanoi/state.hpp"

#include <bit>
#include <stdexcept>

namespace hanoi {

LetterSet LetterSet::parse(std::string_view letters) {
  LetterSet s;
  for (char c : letters) {
    if (c < 'A' || c > 'A' + kMaxPegs - 1)
      throw InvalidLetter(std::string("letter out of range A..H: '") + c + "'");
    s.add(c - 'A');
  }
  return s;
}

int LetterSet::count() const { return std::popcount(bits_); }

std::string LetterSet::to_string() const {
  std::string out;
  for (int p = 0; p < kMaxPegs; ++p)
    if (contains(p)) out.push_back(peg_letter(p));
  return out;
}

PuzzleShape::PuzzleShape(int pegs, int disks) : pegs_(pegs), disks_(disks) {
  if (pegs < kMinPegs || pegs > kMaxPegs)
    throw std::invalid_argument("peg count must be in [3, 8], got " +
                                std::to_string(pegs));
  if (disks < 1 || disks > kMaxDisks)
    throw std::invalid_argument("disk count must be in [1, 21], got " +
                                std::to_string(disks));
}

std::uint64_t PuzzleShape::pow(int exponent) const {
  std::uint64_t r = 1;
  for (int k = 0; k < exponent; ++k) r *= static_cast<std::uint64_t>(pegs_);
  return r;
}

void PuzzleShape::require_within(std::uint64_t state_cap) const {
  if (state_count() > state_cap)
    throw CapExceeded("state space " + std::to_string(pegs_) + "^" +
                      std::to_string(disks_) + " = " +
                      std::to_string(state_count()) + " exceeds cap " +
                      std::to_string(state_cap));
}

State::State(PuzzleShape shape, std::uint64_t code)
    : shape_(shape), code_(code) {
  if (code >= shape.state_count())
    throw std::invalid_argument("state code " + std::to_string(code) +
                                " out of range for " +
                                std::to_string(shape.pegs()) + "^" +
                                std::to_string(shape.disks()));
}

State State::from_label(std::string_view label, int pegs) {
  if (label.empty()) throw EmptyLabel("empty state label");
  if (label.size() > kMaxDisks)
    throw InvalidLabel("label longer than " + std::to_string(kMaxDisks) +
                       " letters");
  PuzzleShape shape(pegs, static_cast<int>(label.size()));
  std::uint64_t code = 0;
  for (char c : label) {
    if (c < 'A' || c >= 'A' + pegs)
      throw InvalidLetter(std::string("letter '") + c + "' not among first " +
                          std::to_string(pegs) + " alphabet letters");
    code = code * static_cast<std::uint64_t>(pegs) +
           static_cast<std::uint64_t>(c - 'A');
  }
  // The leftmost letter is the largest disk, i.e. the highest digit.
  return State(shape, code);
}

int State::peg_of_disk(int disk) const {
  if (disk < 1 || disk > shape_.disks())
    throw std::invalid_argument("disk index out of range: " +
                                std::to_string(disk));
  return static_cast<int>(code_ / shape_.pow(disk - 1) %
                          static_cast<std::uint64_t>(shape_.pegs()));
}

std::string State::label() const {
  const int n = shape_.disks();
  std::string out(static_cast<std::size_t>(n), 'A');
  std::uint64_t tmp = code_;
  for (int k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(n - 1 - k)] =
        peg_letter(static_cast<int>(tmp % shape_.pegs()));
    tmp /= static_cast<std::uint64_t>(shape_.pegs());
  }
  return out;
}

std::optional<int> State::top_disk(int peg) const {
  if (peg < 0 || peg >= shape_.pegs())
    throw std::invalid_argument("peg index out of range: " +
                                std::to_string(peg));
  std::uint64_t tmp = code_;
  for (int k = 0; k < shape_.disks(); ++k) {
    if (static_cast<int>(tmp % shape_.pegs()) == peg) return k + 1;
    tmp /= static_cast<std::uint64_t>(shape_.pegs());
  }
  return std::nullopt;
}

std::optional<int> State::perfect_peg() const {
  const int peg = static_cast<int>(code_ % shape_.pegs());
  std::uint64_t tmp = code_;
  for (int k = 0; k < shape_.disks(); ++k) {
    if (static_cast<int>(tmp % shape_.pegs()) != peg) return std::nullopt;
    tmp /= static_cast<std::uint64_t>(shape_.pegs());
  }
  return peg;
}

std::optional<SpecialForm> State::special_form(LetterSet excluded) const {
  const int p = shape_.pegs();
  const int n = shape_.disks();
  std::uint64_t tmp = code_;
  const int x = static_cast<int>(tmp % p);
  if (x == 0) return std::nullopt;  // suffix letter would be A
  if (excluded.contains(x)) return std::nullopt;
  int run = 0;
  while (run < n && static_cast<int>(tmp % p) == x) {
    ++run;
    tmp /= static_cast<std::uint64_t>(p);
  }
  // Everything above the X-run must be on peg A.
  for (int k = run; k < n; ++k) {
    if (tmp % p != 0) return std::nullopt;
    tmp /= static_cast<std::uint64_t>(p);
  }
  return SpecialForm{run, x};
}

State perfect_state(PuzzleShape shape, int peg) {
  if (peg < 0 || peg >= shape.pegs())
    throw std::invalid_argument("peg index out of range: " +
                                std::to_string(peg));
  std::uint64_t code = 0;
  for (int k = 0; k < shape.disks(); ++k)
    code = code * shape.pegs() + static_cast<std::uint64_t>(peg);
  return State(shape, code);
}

std::vector<Move> legal_moves(const State& s) {
  const int p = s.shape().pegs();
  const int n = s.shape().disks();
  int top[kMaxPegs];
  for (int f = 0; f < p; ++f) top[f] = n;  // n = empty sentinel (disk index)
  std::uint64_t tmp = s.code();
  for (int k = 0; k < n; ++k) {
    const int peg = static_cast<int>(tmp % p);
    if (top[peg] == n) top[peg] = k;
    tmp /= static_cast<std::uint64_t>(p);
  }
  std::vector<Move> moves;
  moves.reserve(static_cast<std::size_t>(p * (p - 1) / 2));
  for (int f = 0; f < p; ++f) {
    if (top[f] == n) continue;
    for (int t = 0; t < p; ++t) {
      if (t == f) continue;
      if (top[f] < top[t]) moves.push_back(Move{top[f] + 1, f, t});
    }
  }
  return moves;
}

State apply_move(const State& s, const Move& m) {
  const int p = s.shape().pegs();
  const int n = s.shape().disks();
  if (m.from_peg == m.to_peg)
    throw IllegalMove("move to the same peg");
  if (m.from_peg < 0 || m.from_peg >= p || m.to_peg < 0 || m.to_peg >= p)
    throw IllegalMove("peg index out of range");
  if (m.disk < 1 || m.disk > n)
    throw IllegalMove("disk index out of range");
  if (s.peg_of_disk(m.disk) != m.from_peg)
    throw IllegalMove("disk " + std::to_string(m.disk) + " is not on peg " +
                      std::string(1, peg_letter(m.from_peg)));
  auto from_top = s.top_disk(m.from_peg);
  if (*from_top != m.disk)
    throw IllegalMove("disk " + std::to_string(m.disk) +
                      " is not topmost on its peg");
  auto to_top = s.top_disk(m.to_peg);
  if (to_top && *to_top < m.disk)
    throw IllegalMove("cannot put a larger disk onto a smaller one");
  const std::uint64_t weight = s.shape().pow(m.disk - 1);
  const std::uint64_t code = s.code() -
                             static_cast<std::uint64_t>(m.from_peg) * weight +
                             static_cast<std::uint64_t>(m.to_peg) * weight;
  return State(s.shape(), code);
}

}  // namespace hanoi
