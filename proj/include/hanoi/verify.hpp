#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hanoi/search.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

struct Witness {
  std::vector<std::string> labels;
  // Ordered key/value details so serialized reports are reproducible.
  std::vector<std::pair<std::string, std::int64_t>> details;
};

struct CheckParams {
  int pegs = 0;
  int disks = 0;
  std::optional<int> level;
  std::string extra;
};

// One machine check of a statement from the write-up. A failed check always
// carries at least one concrete counterexample in `witnesses`.
struct VerificationReport {
  std::string check_name;
  CheckParams params;
  bool pass = false;
  std::vector<Witness> witnesses;
  std::int64_t elapsed_ms = 0;
  std::string notes;
  // Informational checks never gate an exit status.
  bool informational = false;
};

// Shares empty-mask BFS maps between checks that would otherwise recompute
// them (the perfect-distance, special-witness and decomposition families all
// want maps from A^n and B^n).
class MapCache {
 public:
  std::shared_ptr<const DistanceMap> get(const State& source,
                                         std::uint64_t state_cap);

 private:
  std::map<std::tuple<int, int, std::uint64_t>,
           std::shared_ptr<const DistanceMap>>
      maps_;
};

// Quotient edge set == edge set of the one-level-down graph, identity on
// prefix words.
VerificationReport check_quotient_iso(int pegs, int disks, int level,
                                      std::uint64_t state_cap = kDefaultStateCap);

// Quotient restricted to classes avoiding `removed_letter` == graph on one
// peg fewer, under the order-preserving letter bijection.
VerificationReport check_reduced_iso(int pegs, int disks, int level,
                                     int removed_letter,
                                     std::uint64_t state_cap = kDefaultStateCap);

// Masked-vs-unmasked distance equality inside prefix classes. `sample`
// limits how many classes are checked (nullopt = heuristic cap, 0 = all).
VerificationReport check_isometry(int pegs, int disks, int level,
                                  std::optional<int> sample = std::nullopt,
                                  std::uint64_t state_cap = kDefaultStateCap);

// Perfect-to-word distance equalities and strict improvements over every
// qualifying word up to length max_level.
VerificationReport check_facts(int pegs, int max_level,
                               std::uint64_t state_cap = kDefaultStateCap);

// Some shortest A^n -> B^n path passes a vertex A^{n-i}X^i (X outside
// `excluded`); witnesses list every such vertex.
VerificationReport check_special_on_shortest(int pegs, int disks,
                                             LetterSet excluded = {0, 1},
                                             std::uint64_t state_cap = kDefaultStateCap,
                                             MapCache* cache = nullptr);

// Deleting S_{level-1} must strictly lengthen (or cut) every path from the
// top perfect state to each member of S_level, in the ambient (level+1)-disk
// graph.
VerificationReport check_border_induction(int pegs, int level,
                                          std::uint64_t state_cap = kDefaultStateCap);

// Unique-shortest-path census over S_{m-2} and S_{m-1} from A^m; asserted
// against the known ground truth for pegs=4, m=7, informational otherwise.
VerificationReport border_uniqueness_census(int pegs = 4, int ambient_disks = 7,
                                            std::uint64_t state_cap = kDefaultStateCap,
                                            MapCache* cache = nullptr);

// Every member of S_{m-1} admits a special vertex splitting the distance
// from A^m exactly.
VerificationReport check_border_special(int pegs = 4, int ambient_disks = 7,
                                        LetterSet excluded = {0},
                                        std::uint64_t state_cap = kDefaultStateCap,
                                        MapCache* cache = nullptr);

// BFS distance between perfect states equals the Frame-Stewart value.
VerificationReport check_perfect_distance(int pegs, int disks,
                                          std::uint64_t state_cap = kDefaultStateCap,
                                          MapCache* cache = nullptr);

// Structured three-segment paths are adjacency-valid and, minimized over the
// split, meet the BFS distance exactly.
VerificationReport check_decomposition(int pegs, int disks,
                                       std::uint64_t state_cap = kDefaultStateCap,
                                       MapCache* cache = nullptr);

// Exploratory: does the shortest-path DAG from A^n to B^n contain a path
// avoiding every special vertex? Reported, never asserted.
VerificationReport find_no_special_path(int pegs, int disks,
                                        LetterSet excluded = {0, 1},
                                        std::uint64_t state_cap = kDefaultStateCap,
                                        MapCache* cache = nullptr);

}  // namespace hanoi
