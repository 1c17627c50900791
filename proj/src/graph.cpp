#include "hanoi/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "expand.hpp"

namespace hanoi {

bool SubgraphMask::admits(const State& s) const {
  detail::ShapeView shape(s.shape());
  detail::MaskView view(shape, *this);
  return view.admits(s.code(), shape);
}

std::vector<State> neighbors(const State& s, const SubgraphMask& mask) {
  detail::ShapeView shape(s.shape());
  detail::MaskView view(shape, mask);
  if (!view.admits(s.code(), shape))
    throw MaskViolation("state " + s.label() + " violates the mask");
  std::vector<State> out;
  detail::for_each_neighbor(s.code(), shape, view,
                            [&](std::uint64_t next, int, int, int) {
                              out.emplace_back(s.shape(), next);
                            });
  return out;
}

QuotientGraph quotient_graph(PuzzleShape shape, int level,
                             std::uint64_t state_cap) {
  const int n = shape.disks();
  if (level < 1 || level > n - 1)
    throw std::invalid_argument("quotient level must be in [1, n-1]");
  shape.require_within(state_cap);

  detail::ShapeView sv(shape);
  detail::MaskView view(sv, SubgraphMask{});
  view.lo_disk = level;  // bridges are exactly the moves of disks above i

  const std::uint64_t class_size = shape.pow(level);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint64_t code = 0; code < shape.state_count(); ++code) {
    detail::for_each_neighbor(
        code, sv, view, [&](std::uint64_t next, int, int, int) {
          if (next > code)
            pairs.emplace_back(static_cast<std::uint32_t>(code / class_size),
                               static_cast<std::uint32_t>(next / class_size));
        });
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  QuotientGraph q{PuzzleShape(shape.pegs(), n - level), {}, pairs.size()};
  q.adjacency.resize(shape.pow(n - level));
  for (auto [u, v] : pairs) {
    q.adjacency[u].push_back(v);
    q.adjacency[v].push_back(u);
  }
  for (auto& row : q.adjacency) std::sort(row.begin(), row.end());
  return q;
}

BorderSet border_set(PuzzleShape ambient, int level) {
  const int p = ambient.pegs();
  const int m = ambient.disks();
  if (level < 1 || level > m - 1)
    throw std::invalid_argument("border level must be in [1, m-1]");

  // Words of length `level` over the non-A letters that miss at least one
  // non-A letter; the A^{m-level} prefix contributes zero digits.
  BorderSet out{ambient, level, {}};
  std::uint8_t word[kMaxDisks] = {};
  for (int k = 0; k < level; ++k) word[k] = 1;
  for (;;) {
    std::uint8_t used = 0;
    std::uint64_t code = 0;
    for (int k = level - 1; k >= 0; --k) {
      used |= static_cast<std::uint8_t>(1u << word[k]);
      code = code * static_cast<std::uint64_t>(p) + word[k];
    }
    if (std::popcount(used) <= p - 2) out.members.emplace_back(ambient, code);
    int k = level - 1;  // odometer over letters B..<last>
    while (k >= 0 && word[k] == p - 1) word[k--] = 1;
    if (k < 0) break;
    ++word[k];
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const State& a, const State& b) { return a.code() < b.code(); });
  return out;
}

std::uint64_t border_set_size(int pegs, int level) {
  // Inclusion-exclusion over which non-A letters the word misses.
  auto choose = [](int a, int b) {
    std::uint64_t r = 1;
    for (int j = 1; j <= b; ++j) r = r * (a - j + 1) / j;
    return r;
  };
  auto ipow = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  std::int64_t total = 0;
  for (int j = 1; j <= pegs - 1; ++j) {
    const std::int64_t term = static_cast<std::int64_t>(
        choose(pegs - 1, j) * ipow(static_cast<std::uint64_t>(pegs - 1 - j),
                                   level));
    total += (j % 2 == 1) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

ReducedIsoMap::ReducedIsoMap(PuzzleShape shape, int level, int removed_letter)
    : word_shape_(shape.pegs(), shape.disks() - level),
      reduced_shape_(shape.pegs() - 1, shape.disks() - level),
      removed_(removed_letter) {
  if (shape.pegs() < 4)
    throw std::invalid_argument("letter removal needs at least 4 pegs");
  if (level < 1 || level > shape.disks() - 1)
    throw std::invalid_argument("level must be in [1, n-1]");
  if (removed_letter < 0 || removed_letter >= shape.pegs())
    throw std::invalid_argument("removed letter out of range");
}

bool ReducedIsoMap::avoids_removed(std::uint64_t word_code) const {
  std::uint64_t tmp = word_code;
  for (int k = 0; k < word_shape_.disks(); ++k) {
    if (static_cast<int>(tmp % word_shape_.pegs()) == removed_)
      return false;
    tmp /= static_cast<std::uint64_t>(word_shape_.pegs());
  }
  return true;
}

std::uint64_t ReducedIsoMap::to_reduced(std::uint64_t word_code) const {
  std::uint64_t out = 0;
  std::uint64_t weight = 1;
  std::uint64_t tmp = word_code;
  for (int k = 0; k < word_shape_.disks(); ++k) {
    const int peg = static_cast<int>(tmp % word_shape_.pegs());
    if (peg == removed_)
      throw std::invalid_argument("word uses the removed letter");
    out += weight * static_cast<std::uint64_t>(peg < removed_ ? peg : peg - 1);
    weight *= static_cast<std::uint64_t>(reduced_shape_.pegs());
    tmp /= static_cast<std::uint64_t>(word_shape_.pegs());
  }
  return out;
}

std::uint64_t ReducedIsoMap::to_word(std::uint64_t reduced_code) const {
  std::uint64_t out = 0;
  std::uint64_t weight = 1;
  std::uint64_t tmp = reduced_code;
  for (int k = 0; k < reduced_shape_.disks(); ++k) {
    const int peg = static_cast<int>(tmp % reduced_shape_.pegs());
    out += weight * static_cast<std::uint64_t>(peg < removed_ ? peg : peg + 1);
    weight *= static_cast<std::uint64_t>(word_shape_.pegs());
    tmp /= static_cast<std::uint64_t>(reduced_shape_.pegs());
  }
  return out;
}

ReducedIsoMap reduced_subgraph_iso_map(PuzzleShape shape, int level,
                                       int removed_letter) {
  return ReducedIsoMap(shape, level, removed_letter);
}

namespace {

constexpr const char* kPalette[] = {
    "#a6cee3", "#fdbf6f", "#b2df8a", "#fb9a99", "#cab2d6", "#ffff99",
    "#1f78b4", "#ff7f00", "#33a02c", "#e31a1c", "#6a3d9a", "#b15928",
};

}  // namespace

std::string export_dot(PuzzleShape shape, const DotOptions& options) {
  if (shape.state_count() > kDotRenderCap)
    throw CapExceeded("DOT export capped at " + std::to_string(kDotRenderCap) +
                      " vertices, got " + std::to_string(shape.state_count()));
  const int n = shape.disks();
  if (options.highlight_classes &&
      (*options.highlight_classes < 1 || *options.highlight_classes > n - 1))
    throw std::invalid_argument("class level must be in [1, n-1]");

  detail::ShapeView sv(shape);
  detail::MaskView view(sv, options.restrict_to);
  const int bridge_level = options.highlight_classes.value_or(1);
  const std::uint64_t class_size =
      options.highlight_classes ? shape.pow(*options.highlight_classes) : 0;

  std::ostringstream dot;
  dot << "graph hanoi {\n";
  dot << "  node [shape=circle style=filled fillcolor=white];\n";
  for (std::uint64_t code = 0; code < shape.state_count(); ++code) {
    if (!view.admits(code, sv)) continue;
    State s(shape, code);
    dot << "  \"" << s.label() << "\"";
    if (options.highlight_classes) {
      const std::uint64_t cls = code / class_size;
      const std::string prefix =
          State(PuzzleShape(shape.pegs(), n - *options.highlight_classes), cls)
              .label();
      dot << " [class=\"" << prefix << "\" fillcolor=\""
          << kPalette[cls % std::size(kPalette)] << "\"]";
    }
    dot << ";\n";
  }
  for (std::uint64_t code = 0; code < shape.state_count(); ++code) {
    if (!view.admits(code, sv)) continue;
    detail::for_each_neighbor(
        code, sv, view, [&](std::uint64_t next, int disk, int, int) {
          if (next < code) return;  // one line per unordered pair
          dot << "  \"" << State(shape, code).label() << "\" -- \""
              << State(shape, next).label() << "\"";
          if (options.mark_bridges) {
            const bool bridge = disk >= bridge_level;
            dot << " [bridge=" << (bridge ? "true" : "false");
            if (bridge) dot << " style=bold";
            dot << "]";
          }
          dot << ";\n";
        });
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace hanoi
