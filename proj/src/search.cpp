#include "hanoi/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "expand.hpp"

namespace hanoi {

namespace {

std::atomic<int> g_search_threads{1};

// Frontiers below this size are not worth fanning out.
constexpr std::size_t kParallelFrontier = 8192;

struct BfsScratch {
  detail::ShapeView shape;
  detail::MaskView mask;
  BfsScratch(const PuzzleShape& s, const SubgraphMask& m)
      : shape(s), mask(shape, m) {}
};

void expand_layer_serial(const std::vector<std::uint64_t>& frontier,
                         std::vector<std::uint64_t>& next,
                         std::vector<std::uint8_t>& dist,
                         const std::vector<std::uint8_t>* blocked,
                         std::uint8_t next_d, const BfsScratch& bs) {
  for (std::uint64_t code : frontier) {
    detail::for_each_neighbor(
        code, bs.shape, bs.mask, [&](std::uint64_t nb, int, int, int) {
          if (blocked && (*blocked)[nb]) return;
          if (dist[nb] == DistanceMap::kUnreached) {
            dist[nb] = next_d;
            next.push_back(nb);
          }
        });
  }
}

void expand_layer_parallel(const std::vector<std::uint64_t>& frontier,
                           std::vector<std::uint64_t>& next,
                           std::vector<std::uint8_t>& dist,
                           const std::vector<std::uint8_t>* blocked,
                           std::uint8_t next_d, const BfsScratch& bs,
                           int threads) {
  std::vector<std::vector<std::uint64_t>> local(
      static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  const std::size_t chunk =
      (frontier.size() + static_cast<std::size_t>(threads) - 1) /
      static_cast<std::size_t>(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(frontier.size(), lo + chunk);
      auto& mine = local[static_cast<std::size_t>(w)];
      for (std::size_t idx = lo; idx < hi; ++idx) {
        detail::for_each_neighbor(
            frontier[idx], bs.shape, bs.mask,
            [&](std::uint64_t nb, int, int, int) {
              if (blocked && (*blocked)[nb]) return;
              std::atomic_ref<std::uint8_t> cell(dist[nb]);
              std::uint8_t expected = DistanceMap::kUnreached;
              if (cell.load(std::memory_order_relaxed) == expected &&
                  cell.compare_exchange_strong(expected, next_d,
                                               std::memory_order_relaxed))
                mine.push_back(nb);
            });
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& mine : local) next.insert(next.end(), mine.begin(), mine.end());
}

std::vector<std::uint8_t> run_bfs(const State& source, const SubgraphMask& mask,
                                  std::uint64_t state_cap,
                                  const std::vector<std::uint8_t>* blocked) {
  const PuzzleShape shape = source.shape();
  shape.require_within(state_cap);
  BfsScratch bs(shape, mask);
  if (!bs.mask.admits(source.code(), bs.shape))
    throw MaskViolation("BFS source " + source.label() +
                        " violates the mask");
  if (blocked && (*blocked)[source.code()])
    throw std::invalid_argument("BFS source is in the deleted set");

  std::vector<std::uint8_t> dist(shape.state_count(),
                                 DistanceMap::kUnreached);
  std::vector<std::uint64_t> frontier{source.code()};
  std::vector<std::uint64_t> next;
  dist[source.code()] = 0;
  const int threads = search_threads();
  std::uint8_t d = 0;
  while (!frontier.empty()) {
    if (d + 1 >= DistanceMap::kUnreached)
      throw Error("BFS distance exceeds the 8-bit range");
    next.clear();
    if (threads > 1 && frontier.size() >= kParallelFrontier)
      expand_layer_parallel(frontier, next, dist, blocked, d + 1, bs, threads);
    else
      expand_layer_serial(frontier, next, dist, blocked, d + 1, bs);
    frontier.swap(next);
    ++d;
  }
  return dist;
}

}  // namespace

void set_search_threads(int threads) {
  g_search_threads.store(std::max(1, threads), std::memory_order_relaxed);
}

int search_threads() {
  return g_search_threads.load(std::memory_order_relaxed);
}

DistanceMap::DistanceMap(PuzzleShape shape, SubgraphMask mask, State source,
                         std::vector<std::uint8_t> dist)
    : shape_(shape),
      mask_(std::move(mask)),
      source_(std::move(source)),
      dist_(std::move(dist)) {
  if (source_.shape() != shape_)
    throw std::invalid_argument("distance map source shape mismatch");
  if (dist_.size() != shape_.state_count())
    throw std::invalid_argument("distance map payload size mismatch");
  if (dist_[source_.code()] != 0)
    throw std::invalid_argument("distance map source distance is not zero");
}

int DistanceMap::max_distance() const {
  std::uint8_t best = 0;
  for (std::uint8_t d : dist_)
    if (d != kUnreached && d > best) best = d;
  return best;
}

DistanceMap bfs_distance_map(const State& source, const SubgraphMask& mask,
                             std::uint64_t state_cap) {
  return DistanceMap(source.shape(), mask, source,
                     run_bfs(source, mask, state_cap, nullptr));
}

DistanceMap bfs_distance_map_avoiding(const State& source,
                                      const SubgraphMask& mask,
                                      const std::vector<State>& deleted,
                                      std::uint64_t state_cap) {
  const PuzzleShape shape = source.shape();
  shape.require_within(state_cap);
  std::vector<std::uint8_t> blocked(shape.state_count(), 0);
  for (const State& s : deleted) {
    if (s.shape() != shape)
      throw std::invalid_argument("deleted state shape mismatch");
    blocked[s.code()] = 1;
  }
  return DistanceMap(shape, mask, source,
                     run_bfs(source, mask, state_cap, &blocked));
}

int distance(const State& u, const State& v, const SubgraphMask& mask,
             std::uint64_t state_cap) {
  if (u.shape() != v.shape())
    throw std::invalid_argument("distance endpoints have different shapes");
  const PuzzleShape shape = u.shape();
  shape.require_within(state_cap);
  BfsScratch bs(shape, mask);
  if (!bs.mask.admits(u.code(), bs.shape))
    throw MaskViolation("state " + u.label() + " violates the mask");
  if (!bs.mask.admits(v.code(), bs.shape))
    throw MaskViolation("state " + v.label() + " violates the mask");
  if (u == v) return 0;

  // Layer-synchronous bidirectional BFS: any visited intersection is only
  // possible once r_f + r_b reaches the true distance, so the first meet
  // after a completed layer is exact.
  std::unordered_map<std::uint64_t, int> seen[2];
  std::vector<std::uint64_t> frontier[2], next;
  seen[0].emplace(u.code(), 0);
  seen[1].emplace(v.code(), 0);
  frontier[0].push_back(u.code());
  frontier[1].push_back(v.code());
  int radius[2] = {0, 0};
  for (;;) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    const int other = 1 - side;
    const int next_r = radius[side] + 1;
    int best_meet = -1;
    next.clear();
    for (std::uint64_t code : frontier[side]) {
      detail::for_each_neighbor(
          code, bs.shape, bs.mask, [&](std::uint64_t nb, int, int, int) {
            if (seen[side].emplace(nb, next_r).second) {
              next.push_back(nb);
              auto hit = seen[other].find(nb);
              if (hit != seen[other].end()) {
                const int total = next_r + hit->second;
                if (best_meet < 0 || total < best_meet) best_meet = total;
              }
            }
          });
    }
    if (best_meet >= 0) return best_meet;
    if (next.empty())
      throw Unreachable("no path between " + u.label() + " and " + v.label() +
                        " under the mask");
    frontier[side].swap(next);
    radius[side] = next_r;
  }
}

PathMultiplicity::PathMultiplicity(PuzzleShape shape, State source,
                                   std::vector<std::uint8_t> counts)
    : shape_(shape), source_(std::move(source)), counts_(std::move(counts)) {
  if (counts_.size() != shape_.state_count())
    throw std::invalid_argument("multiplicity payload size mismatch");
}

PathMultiplicity path_multiplicity(const DistanceMap& dmap) {
  const PuzzleShape shape = dmap.shape();
  const std::uint64_t n_states = shape.state_count();
  if (n_states > (std::uint64_t{1} << 32))
    throw CapExceeded("path multiplicity limited to 2^32 states");
  const auto& dist = dmap.distances();
  BfsScratch bs(shape, dmap.mask());

  // Counting sort the reached states by distance so predecessors are final
  // before their successors are pulled.
  const int max_d = dmap.max_distance();
  std::vector<std::uint64_t> layer_begin(static_cast<std::size_t>(max_d) + 2,
                                         0);
  std::uint64_t reached = 0;
  for (std::uint64_t c = 0; c < n_states; ++c)
    if (dist[c] != DistanceMap::kUnreached) {
      ++layer_begin[dist[c] + 1];
      ++reached;
    }
  for (std::size_t d = 1; d < layer_begin.size(); ++d)
    layer_begin[d] += layer_begin[d - 1];
  std::vector<std::uint32_t> order(reached);
  {
    std::vector<std::uint64_t> fill = layer_begin;
    for (std::uint64_t c = 0; c < n_states; ++c)
      if (dist[c] != DistanceMap::kUnreached)
        order[fill[dist[c]]++] = static_cast<std::uint32_t>(c);
  }

  std::vector<std::uint8_t> counts(n_states, 0);
  counts[dmap.source().code()] = 1;
  for (std::uint32_t code : order) {
    const std::uint8_t d = dist[code];
    if (d == 0) continue;
    int sum = 0;
    detail::for_each_neighbor(code, bs.shape, bs.mask,
                              [&](std::uint64_t nb, int, int, int) {
                                if (dist[nb] == d - 1) sum += counts[nb];
                              });
    counts[code] = static_cast<std::uint8_t>(std::min(sum, 2));
  }
  return PathMultiplicity(shape, dmap.source(), std::move(counts));
}

PathMultiplicity path_multiplicity(const State& source,
                                   const SubgraphMask& mask,
                                   std::uint64_t state_cap) {
  return path_multiplicity(bfs_distance_map(source, mask, state_cap));
}

std::vector<State> reconstruct_unique_path(const DistanceMap& dmap,
                                           const PathMultiplicity& mult,
                                           const State& v) {
  if (dmap.at(v) == DistanceMap::kUnreached)
    throw Unreached("state " + v.label() + " is unreached from " +
                    dmap.source().label());
  if (mult.at(v) != Multiplicity::one)
    throw NotUnique("state " + v.label() +
                    " does not have a unique shortest path");
  const auto& dist = dmap.distances();
  BfsScratch bs(dmap.shape(), dmap.mask());

  std::vector<State> path;
  std::uint64_t cur = v.code();
  path.emplace_back(dmap.shape(), cur);
  while (dist[cur] != 0) {
    const std::uint8_t d = dist[cur];
    std::uint64_t pred = 0;
    int found = 0;
    detail::for_each_neighbor(cur, bs.shape, bs.mask,
                              [&](std::uint64_t nb, int, int, int) {
                                if (dist[nb] == d - 1) {
                                  pred = nb;
                                  ++found;
                                }
                              });
    if (found != 1)
      throw Error("unique path reconstruction found " + std::to_string(found) +
                  " predecessors");
    path.emplace_back(dmap.shape(), pred);
    cur = pred;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<State> passes_through(const State& a, const State& b,
                                    const std::vector<State>& via,
                                    const SubgraphMask& mask,
                                    std::uint64_t state_cap) {
  const DistanceMap from_a = bfs_distance_map(a, mask, state_cap);
  const DistanceMap from_b = bfs_distance_map(b, mask, state_cap);
  const int total = from_a.at(b);
  if (total == DistanceMap::kUnreached) return std::nullopt;
  for (const State& s : via) {
    if (s.shape() != a.shape())
      throw std::invalid_argument("witness state shape mismatch");
    const int da = from_a.at(s);
    const int db = from_b.at(s);
    if (da != DistanceMap::kUnreached && db != DistanceMap::kUnreached &&
        da + db == total)
      return s;
  }
  return std::nullopt;
}

}  // namespace hanoi
