#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctc/strength_graph.hpp"
#include "ctc/tournament.hpp"
#include "ctc/value_functions.hpp"

namespace ctc {

enum class Algorithm {
  Greedy,       // DAG, player popularity
  Binary,       // any graph, popularity in {0,1}
  WinCountDp,   // DAG, win-count family
  Approx,       // any graph, k popularity levels
  BruteForce,   // exhaustive enumeration
};

std::string_view to_string(Algorithm a);

struct SolveResult {
  Seeding seeding;
  Value value = 0;
  Algorithm algorithm = Algorithm::BruteForce;
  std::string provenance;  // human-readable tag, e.g. guarantee of an approximation
  bool optimal = false;
  std::optional<bool> meets_target;
};

inline constexpr std::size_t kDefaultBruteForceLimit = 10;

// Greedy chain of the popularity algorithm, in strength ranks (0 = weakest).
// `chain[j]` is the j-th picked player's rank; the last one is n-1.
struct GreedyPlan {
  std::vector<std::size_t> chain;
  Value closed_form = 0;
};

GreedyPlan plan_dag_popularity_greedy(const StrengthGraph& g, const PlayerPopularity& p);
SolveResult solve_dag_popularity_greedy(const StrengthGraph& g, const PlayerPopularity& p);

// Partition used by the {0,1}-popularity algorithm.
struct BinaryPartition {
  std::vector<Player> popular;      // p = 1
  std::vector<Player> dominators;   // unpopular, beat every popular player
  std::vector<Player> rest;         // unpopular, beaten by some popular player
};

BinaryPartition partition_binary_popularity(const StrengthGraph& g, const PlayerPopularity& p);
SolveResult solve_binary_popularity(const StrengthGraph& g, const PlayerPopularity& p);

// Optimal value table for the win-count DP. Cell (i, k) holds the best
// value using the i weakest players and k matches (k < i).
class WinCountTable {
 public:
  WinCountTable(const StrengthGraph& g, const WinCount& spec);

  std::size_t size() const noexcept { return n_; }
  Value best(std::size_t players, std::size_t matches) const;
  std::size_t best_wins(std::size_t players, std::size_t matches) const;
  const std::vector<Player>& strength_order() const noexcept { return order_; }

  // Seeding realizing best(players, matches), drawn from the `players`
  // weakest. Contains matches + 1 players.
  std::vector<Player> reconstruct(std::size_t players, std::size_t matches) const;

 private:
  std::size_t index(std::size_t players, std::size_t matches) const;

  std::size_t n_ = 0;
  std::vector<Player> order_;
  std::vector<Value> value_;
  std::vector<std::size_t> argmax_;
};

SolveResult solve_dag_wincount_dp(const StrengthGraph& g, const WinCount& spec);

SolveResult approx_popularity(const StrengthGraph& g, const PlayerPopularity& p);

struct BruteForceOptions {
  std::size_t limit = kDefaultBruteForceLimit;
  unsigned threads = 0;  // 0: hardware concurrency
};

SolveResult exact_bruteforce(const Instance& inst, const BruteForceOptions& opts = {});

struct CaterpillarSolution {
  Caterpillar caterpillar;
  Value weight = 0;
};

CaterpillarSolution solve_caterpillar_maxweight(const StrengthGraph& g, const PairBased& weights,
                                                std::size_t limit = kDefaultBruteForceLimit);

enum class AlgoChoice { Auto, Greedy, Binary, Dp, Approx, Brute };

struct SolveOptions {
  AlgoChoice algo = AlgoChoice::Auto;
  std::size_t limit = kDefaultBruteForceLimit;
};

// Routes the instance to the strongest applicable algorithm.
SolveResult dispatch(const Instance& inst, const SolveOptions& opts = {});

}  // namespace ctc
