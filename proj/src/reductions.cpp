#include "ctc/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ctc/error.hpp"

namespace ctc {

namespace {

constexpr char kAxisNames[3] = {'x', 'y', 'z'};

bool is_3dm(ReductionKind kind) {
  return kind == ReductionKind::ThreeDmPopularity || kind == ReductionKind::ThreeDmPair;
}

// Shared layout of both matching reductions: one hub player, then set
// players, then element players.
struct MatchingLayout {
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t size() const { return 1 + m + 3 * n; }
  static constexpr Player hub() { return 0; }
  Player set_player(std::size_t s) const { return 1 + s; }
  Player element_player(std::size_t element) const { return 1 + m + element; }
  bool is_set(Player p) const { return p >= 1 && p <= m; }
  bool is_element(Player p) const { return p > m; }
};

std::vector<std::string> matching_names(const ThreeDMInstance& tdm, const MatchingLayout& L,
                                        const char* hub) {
  std::vector<std::string> names{hub};
  for (std::size_t s = 0; s < L.m; ++s) names.push_back("S" + std::to_string(s + 1));
  for (std::size_t axis = 0; axis < 3; ++axis) {
    for (std::size_t c = 0; c < tdm.n; ++c) {
      names.push_back(std::string(1, kAxisNames[axis]) + std::to_string(c));
    }
  }
  return names;
}

bool contains(const ThreeDMInstance& tdm, std::size_t s, std::size_t element) {
  const auto& t = tdm.triples[s];
  return element_id(tdm, element / tdm.n, t[element / tdm.n]) == element;
}

std::vector<std::string> matching_warnings(const ThreeDMInstance& tdm) {
  std::vector<std::string> w;
  if (tdm.n == 0) w.push_back("degenerate_source: empty universe (n = 0)");
  if (tdm.triples.empty()) w.push_back("degenerate_source: empty triple family");
  return w;
}

void require_exact_cover(const ThreeDMInstance& tdm, const std::vector<std::size_t>& chosen) {
  for (std::size_t s : chosen) {
    if (s >= tdm.triples.size()) {
      throw Error(ErrorCode::InvalidSolution, "triple index " + std::to_string(s) + " out of range");
    }
  }
  if (!is_exact_cover(tdm, chosen)) {
    throw Error(ErrorCode::InvalidSolution, "chosen triples are not an exact cover");
  }
}

std::size_t multiplicity(const IndependentSetInstance& is, const IsReductionOptions& opts) {
  return opts.multiplicity.value_or(is.vertices * is.vertices);
}

StrengthGraph independent_set_graph(const IndependentSetInstance& is, std::size_t copies) {
  const std::size_t nv = is.vertices;
  const std::size_t total = nv + is.edges.size() * copies;
  return StrengthGraph::from_rule(total, [&](Player a, Player b) {
    // a < b. Vertex vs edge player: the vertex wins iff incident.
    if (a < nv && b >= nv) {
      const auto& [u, v] = is.edges[(b - nv) / copies];
      return a == u || a == v;
    }
    return true;
  });
}

std::vector<std::string> independent_set_names(const IndependentSetInstance& is,
                                               std::size_t copies) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < is.vertices; ++v) names.push_back("v" + std::to_string(v));
  for (const auto& [u, v] : is.edges) {
    for (std::size_t l = 0; l < copies; ++l) {
      names.push_back("e" + std::to_string(u) + "-" + std::to_string(v) + "#" + std::to_string(l));
    }
  }
  return names;
}

std::vector<std::string> independent_set_warnings(const IndependentSetInstance& is,
                                                  const IsReductionOptions& opts) {
  std::vector<std::string> w;
  const auto deg = degrees(is);
  std::string isolated;
  for (std::size_t v = 0; v < is.vertices; ++v) {
    if (deg[v] == 0) isolated += (isolated.empty() ? "" : ",") + std::to_string(v);
  }
  if (!isolated.empty()) w.push_back("degenerate_source: isolated vertices " + isolated);
  if (opts.multiplicity && *opts.multiplicity != is.vertices * is.vertices) {
    w.push_back("scaled_multiplicity: " + std::to_string(*opts.multiplicity) +
                " edge copies instead of " + std::to_string(is.vertices * is.vertices) +
                "; the reduction is not guaranteed to be valid");
  }
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------

void validate(const ThreeDMInstance& tdm) {
  for (std::size_t s = 0; s < tdm.triples.size(); ++s) {
    for (std::size_t axis = 0; axis < 3; ++axis) {
      if (tdm.triples[s][axis] >= tdm.n) {
        throw Error(ErrorCode::InvalidTriples,
                    "triple " + std::to_string(s) + " coordinate " + kAxisNames[axis] + "=" +
                        std::to_string(tdm.triples[s][axis]) + " outside 0.." +
                        (tdm.n ? std::to_string(tdm.n - 1) : std::string("(empty)")));
      }
    }
  }
}

std::size_t covered_elements(const ThreeDMInstance& tdm, const std::vector<std::size_t>& chosen) {
  std::vector<bool> hit(3 * tdm.n, false);
  std::size_t count = 0;
  for (std::size_t s : chosen) {
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const std::size_t e = element_id(tdm, axis, tdm.triples.at(s)[axis]);
      if (!hit[e]) {
        hit[e] = true;
        ++count;
      }
    }
  }
  return count;
}

bool is_exact_cover(const ThreeDMInstance& tdm, const std::vector<std::size_t>& chosen) {
  std::set<std::size_t> distinct(chosen.begin(), chosen.end());
  return distinct.size() == chosen.size() && chosen.size() == tdm.n &&
         covered_elements(tdm, chosen) == 3 * tdm.n;
}

void validate(const IndependentSetInstance& is) {
  if (is.vertices == 0) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : is.edges) {
    if (u >= is.vertices || v >= is.vertices) {
      throw Error(ErrorCode::InvalidGraph, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                               "} references a missing vertex");
    }
    if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::InvalidGraph,
                  "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
}

std::vector<std::size_t> degrees(const IndependentSetInstance& is) {
  std::vector<std::size_t> deg(is.vertices, 0);
  for (const auto& [u, v] : is.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool is_independent_set(const IndependentSetInstance& is, const std::vector<std::size_t>& set) {
  std::vector<bool> in(is.vertices, false);
  for (std::size_t v : set) {
    if (v >= is.vertices || in[v]) return false;
    in[v] = true;
  }
  return std::none_of(is.edges.begin(), is.edges.end(),
                      [&](const auto& e) { return in[e.first] && in[e.second]; });
}

// ---------------------------------------------------------------------------

ReducedInstance reduce_3dm_to_ternary_popularity(const ThreeDMInstance& tdm) {
  validate(tdm);
  const MatchingLayout L{tdm.triples.size(), tdm.n};
  auto graph = StrengthGraph::from_rule(L.size(), [&](Player a, Player b) {
    if (a == MatchingLayout::hub()) return L.is_set(b);  // h beats sets, loses to elements
    if (L.is_set(a) && L.is_element(b)) return contains(tdm, a - 1, b - 1 - L.m);
    return true;
  });
  PlayerPopularity pop;
  pop.popularity.assign(L.size(), 0);
  pop.popularity[MatchingLayout::hub()] = 2;
  for (std::size_t s = 0; s < L.m; ++s) pop.popularity[L.set_player(s)] = 1;
  const auto target = static_cast<Value>(2 * L.m + 2 * L.n + 1);
  return {Instance{std::move(graph), std::move(pop), target}, matching_warnings(tdm),
          matching_names(tdm, L, "h")};
}

ReducedInstance reduce_3dm_to_pairbased_dag(const ThreeDMInstance& tdm) {
  validate(tdm);
  const MatchingLayout L{tdm.triples.size(), tdm.n};
  auto graph = StrengthGraph::from_rule(L.size(), [](Player, Player) { return true; });
  PairBased pair;
  pair.n = L.size();
  pair.f.assign(L.size() * L.size(), 0);
  for (std::size_t s = 0; s < L.m; ++s) {
    const Player a = L.set_player(s);
    pair.f[MatchingLayout::hub() * pair.n + a] = 1;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const Player b = L.element_player(element_id(tdm, axis, tdm.triples[s][axis]));
      pair.f[a * pair.n + b] = 1;
    }
  }
  const auto target = static_cast<Value>(L.m + 2 * L.n + 1);
  return {Instance{std::move(graph), std::move(pair), target}, matching_warnings(tdm),
          matching_names(tdm, L, "c")};
}

ReducedInstance reduce_is_to_binary_wincount(const IndependentSetInstance& is,
                                             const IsReductionOptions& opts) {
  validate(is);
  const std::size_t copies = multiplicity(is, opts);
  auto graph = independent_set_graph(is, copies);
  const std::size_t total = graph.size();
  const auto deg = degrees(is);
  BinaryThreshold spec;
  spec.lambda.assign(total, static_cast<Value>(total));  // unreachable for edge players
  for (std::size_t v = 0; v < is.vertices; ++v) {
    spec.lambda[v] = checked_mul(static_cast<Value>(deg[v]), static_cast<Value>(copies));
  }
  return {Instance{std::move(graph), std::move(spec), static_cast<Value>(is.k)},
          independent_set_warnings(is, opts), independent_set_names(is, copies)};
}

ReducedInstance reduce_is_to_linear_threshold(const IndependentSetInstance& is,
                                              const IsReductionOptions& opts) {
  validate(is);
  const std::size_t copies = multiplicity(is, opts);
  auto graph = independent_set_graph(is, copies);
  const std::size_t total = graph.size();
  const auto deg = degrees(is);
  const auto n = static_cast<Value>(is.vertices);
  auto warnings = independent_set_warnings(is, opts);

  LinearAfterThreshold spec;
  spec.lambda.assign(total, static_cast<Value>(total));
  std::string underflow;
  for (std::size_t v = 0; v < is.vertices; ++v) {
    if (deg[v] == 0) continue;  // isolated: keeps the unreachable threshold
    const Value raw =
        checked_mul(static_cast<Value>(deg[v]), static_cast<Value>(copies)) - 2 * n;
    if (raw < 1) underflow += (underflow.empty() ? "" : ",") + std::to_string(v);
    spec.lambda[v] = std::max<Value>(raw, 1);
  }
  if (!underflow.empty()) {
    warnings.push_back("threshold_underflow: d(v)*M - 2n < 1 for vertices " + underflow +
                       "; clamped to 1, the instance is too small for the hardness bound");
  }
  const Value target = checked_mul(2 * n, static_cast<Value>(is.k));
  return {Instance{std::move(graph), std::move(spec), target}, std::move(warnings),
          independent_set_names(is, copies)};
}

ReducedInstance reduce(ReductionKind kind, const ThreeDMInstance& tdm) {
  switch (kind) {
    case ReductionKind::ThreeDmPopularity: return reduce_3dm_to_ternary_popularity(tdm);
    case ReductionKind::ThreeDmPair: return reduce_3dm_to_pairbased_dag(tdm);
    default: throw Error(ErrorCode::BadParams, "reduction expects an independent-set source");
  }
}

ReducedInstance reduce(ReductionKind kind, const IndependentSetInstance& is,
                       const IsReductionOptions& opts) {
  switch (kind) {
    case ReductionKind::IsBinary: return reduce_is_to_binary_wincount(is, opts);
    case ReductionKind::IsLinear: return reduce_is_to_linear_threshold(is, opts);
    default: throw Error(ErrorCode::BadParams, "reduction expects a 3-D-matching source");
  }
}

// ---------------------------------------------------------------------------

Seeding witness_seeding(ReductionKind kind, const ThreeDMInstance& tdm,
                        const std::vector<std::size_t>& chosen) {
  if (!is_3dm(kind)) throw Error(ErrorCode::BadParams, "witness expects a 3-D-matching reduction");
  validate(tdm);
  require_exact_cover(tdm, chosen);
  const ReducedInstance reduced = reduce(kind, tdm);
  const StrengthGraph& g = reduced.instance.graph;
  const MatchingLayout L{tdm.triples.size(), tdm.n};

  // Hub first, then a Hamiltonian path through the chosen set players.
  std::vector<Player> chosen_players;
  for (std::size_t s : chosen) chosen_players.push_back(L.set_player(s));
  std::sort(chosen_players.begin(), chosen_players.end());

  Caterpillar c;
  c.backbone.push_back(MatchingLayout::hub());
  c.leaves.emplace_back();
  if (!chosen_players.empty()) {
    const auto sub = induced_subgraph(g, chosen_players);
    for (Player local : hamiltonian_path(sub.graph).order) {
      const Player a = sub.to_parent[local];
      c.backbone.push_back(a);
      std::vector<Player> elements;
      for (std::size_t axis = 0; axis < 3; ++axis) {
        elements.push_back(L.element_player(element_id(tdm, axis, tdm.triples[a - 1][axis])));
      }
      c.leaves.push_back(std::move(elements));
    }
  }
  for (std::size_t s = 0; s < L.m; ++s) {
    const Player a = L.set_player(s);
    if (!std::binary_search(chosen_players.begin(), chosen_players.end(), a)) {
      c.leaves.front().push_back(a);
    }
  }
  return caterpillar_to_seeding(g, c);
}

Seeding witness_seeding(ReductionKind kind, const IndependentSetInstance& is,
                        const std::vector<std::size_t>& set, const IsReductionOptions& opts) {
  if (is_3dm(kind)) throw Error(ErrorCode::BadParams, "witness expects an independent-set reduction");
  validate(is);
  if (!is_independent_set(is, set)) {
    throw Error(ErrorCode::InvalidSolution, "vertex set is not independent");
  }
  if (set.size() < is.k) {
    throw Error(ErrorCode::InvalidSolution, "independent set has " + std::to_string(set.size()) +
                                                " vertices, k = " + std::to_string(is.k));
  }
  const std::size_t copies = multiplicity(is, opts);
  const StrengthGraph g = independent_set_graph(is, copies);
  const std::size_t nv = is.vertices;

  std::vector<Player> chain;  // champion first
  if (!set.empty()) {
    const auto sub = induced_subgraph(g, set);
    for (Player local : hamiltonian_path(sub.graph).order) chain.push_back(sub.to_parent[local]);
  }

  // Weakest chain member opens; each vertex player then beats every copy of
  // its incident edges before the next chain member takes over.
  Seeding s;
  std::vector<bool> placed(g.size(), false);
  auto place = [&](Player p) {
    s.order.push_back(p);
    placed[p] = true;
  };
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    place(*it);
    for (std::size_t e = 0; e < is.edges.size(); ++e) {
      if (is.edges[e].first != *it && is.edges[e].second != *it) continue;
      for (std::size_t l = 0; l < copies; ++l) place(nv + e * copies + l);
    }
  }
  for (Player p = 0; p < g.size(); ++p) {
    if (!placed[p]) place(p);
  }
  return s;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<std::size_t>> oracle_3dm(const ThreeDMInstance& tdm) {
  validate(tdm);
  const std::size_t m = tdm.triples.size();
  if (m > kOracleLimit) {
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " triples exceeds the oracle limit of " +
                                         std::to_string(kOracleLimit));
  }
  if (tdm.n > m) return std::nullopt;
  // Combinations of size n in lexicographic order.
  std::vector<std::size_t> pick(tdm.n);
  for (std::size_t i = 0; i < tdm.n; ++i) pick[i] = i;
  while (true) {
    if (is_exact_cover(tdm, pick)) return pick;
    std::size_t i = tdm.n;
    while (i > 0 && pick[i - 1] == m - tdm.n + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < tdm.n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<std::size_t> oracle_is(const IndependentSetInstance& is) {
  validate(is);
  const std::size_t nv = is.vertices;
  if (nv > kOracleLimit) {
    throw Error(ErrorCode::TooLarge, std::to_string(nv) + " vertices exceeds the oracle limit of " +
                                         std::to_string(kOracleLimit));
  }
  std::vector<std::uint32_t> adj(nv, 0);
  for (const auto& [u, v] : is.edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::vector<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < best.size()) continue;
    bool independent = true;
    for (std::size_t v = 0; v < nv && independent; ++v) {
      if ((mask >> v & 1u) && (adj[v] & mask)) independent = false;
    }
    if (!independent) continue;
    std::vector<std::size_t> set;
    for (std::size_t v = 0; v < nv; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    if (set.size() > best.size() || set < best) best = std::move(set);
  }
  return best;
}

}  // namespace ctc
