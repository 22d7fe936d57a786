#include "ctc/strength_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ctc/error.hpp"

namespace ctc {

namespace {

std::string pair_name(Player a, Player b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

StrengthGraph::StrengthGraph(std::size_t n)
    : n_(n), beats_(n * n, 0), out_degree_(n, 0) {}

void StrengthGraph::set_beats(Player a, Player b) {
  beats_[a * n_ + b] = 1;
  ++out_degree_[a];
}

StrengthGraph StrengthGraph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidPlayer, "graph needs at least one player");
  }
  StrengthGraph g(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::InvalidPlayer, "edge " + pair_name(a, b) +
                                                " references a player outside 0.." +
                                                std::to_string(n - 1));
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "edge " + pair_name(a, b));
    }
    if (g.beats(a, b) || g.beats(b, a)) {
      throw Error(ErrorCode::DuplicateEdge,
                  "pair {" + std::to_string(std::min(a, b)) + "," +
                      std::to_string(std::max(a, b)) + "} oriented more than once");
    }
    g.set_beats(a, b);
  }
  for (Player i = 0; i < n; ++i) {
    for (Player j = i + 1; j < n; ++j) {
      if (!g.beats(i, j) && !g.beats(j, i)) {
        throw Error(ErrorCode::MissingEdge,
                    "pair {" + std::to_string(i) + "," + std::to_string(j) + "} has no edge");
      }
    }
  }
  return g;
}

StrengthGraph StrengthGraph::from_rule(std::size_t n,
                                       const std::function<bool(Player, Player)>& first_beats) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidPlayer, "graph needs at least one player");
  }
  StrengthGraph g(n);
  for (Player i = 0; i < n; ++i) {
    for (Player j = i + 1; j < n; ++j) {
      if (first_beats(i, j)) {
        g.set_beats(i, j);
      } else {
        g.set_beats(j, i);
      }
    }
  }
  return g;
}

StrengthGraph StrengthGraph::transitive(std::span<const Player> order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> rank(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (order[r] >= n || rank[order[r]] != n) {
      throw Error(ErrorCode::InvalidPlayer, "strength order is not a permutation");
    }
    rank[order[r]] = r;
  }
  return from_rule(n, [&](Player i, Player j) { return rank[i] > rank[j]; });
}

std::vector<Edge> StrengthGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_ * (n_ - 1) / 2);
  for (Player a = 0; a < n_; ++a) {
    for (Player b = 0; b < n_; ++b) {
      if (beats(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<std::vector<Player>> is_dag(const StrengthGraph& g) {
  const std::size_t n = g.size();
  // Acyclic iff the out-degrees are exactly 0..n-1; the player with
  // out-degree r sits at position r.
  std::vector<Player> order(n, n);
  for (Player p = 0; p < n; ++p) {
    const std::size_t d = g.out_degree(p);
    if (order[d] != n) return std::nullopt;
    order[d] = p;
  }
  return order;
}

HamPath hamiltonian_path(const StrengthGraph& g) {
  HamPath path;
  path.order.reserve(g.size());
  for (Player v = 0; v < g.size(); ++v) {
    auto it = std::find_if(path.order.begin(), path.order.end(),
                           [&](Player u) { return g.beats(v, u); });
    path.order.insert(it, v);
  }
  return path;
}

bool is_valid_ham_path(const StrengthGraph& g, std::span<const Player> path) {
  if (path.size() != g.size()) return false;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.size() || seen[path[i]]) return false;
    seen[path[i]] = true;
    if (i + 1 < path.size() && path[i + 1] < g.size() && !g.beats(path[i], path[i + 1])) {
      return false;
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const StrengthGraph& g, std::span<const Player> subset) {
  if (subset.empty()) {
    throw Error(ErrorCode::EmptySubset, "induced subgraph of an empty player set");
  }
  std::vector<Player> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.back() >= g.size()) {
    throw Error(ErrorCode::InvalidPlayer,
                "player " + std::to_string(members.back()) + " not in graph");
  }
  auto sub = StrengthGraph::from_rule(
      members.size(), [&](Player i, Player j) { return g.beats(members[i], members[j]); });
  return {std::move(sub), std::move(members)};
}

}  // namespace ctc
