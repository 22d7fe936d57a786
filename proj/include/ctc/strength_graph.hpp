#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ctc {

using Player = std::size_t;
using Edge = std::pair<Player, Player>;  // (winner, loser)

// Complete antisymmetric "beats" relation over players 0..n-1, stored as a
// dense n*n byte matrix. Immutable once built.
class StrengthGraph {
 public:
  // Validates that `edges` orients every unordered pair exactly once.
  static StrengthGraph build(std::size_t n, std::span<const Edge> edges);

  // `first_beats(i, j)` is queried once for every i < j and decides the
  // orientation of that pair. Always yields a valid graph.
  static StrengthGraph from_rule(std::size_t n,
                                 const std::function<bool(Player, Player)>& first_beats);

  // `order[r]` beats every `order[s]` with s < r (weakest first).
  static StrengthGraph transitive(std::span<const Player> order);

  std::size_t size() const noexcept { return n_; }

  bool beats(Player a, Player b) const noexcept { return beats_[a * n_ + b] != 0; }

  std::size_t out_degree(Player p) const noexcept { return out_degree_[p]; }

  // All (winner, loser) pairs, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const StrengthGraph&, const StrengthGraph&) = default;

 private:
  explicit StrengthGraph(std::size_t n);
  void set_beats(Player a, Player b);

  std::size_t n_ = 0;
  std::vector<std::uint8_t> beats_;
  std::vector<std::size_t> out_degree_;
};

// Unique strength order weakest -> strongest when the graph is acyclic.
std::optional<std::vector<Player>> is_dag(const StrengthGraph& g);

// Sequence of all players where each entry beats the next one.
struct HamPath {
  std::vector<Player> order;
};

HamPath hamiltonian_path(const StrengthGraph& g);

bool is_valid_ham_path(const StrengthGraph& g, std::span<const Player> path);

struct InducedSubgraph {
  StrengthGraph graph;
  std::vector<Player> to_parent;  // local id -> parent id, ascending
};

// Subset is treated as a set: duplicates are collapsed, local ids follow
// ascending parent id.
InducedSubgraph induced_subgraph(const StrengthGraph& g, std::span<const Player> subset);

}  // namespace ctc
