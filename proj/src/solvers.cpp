#include "ctc/solvers.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>
#include <type_traits>

#include "ctc/error.hpp"

namespace ctc {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Binary: return "binary";
    case Algorithm::WinCountDp: return "dp";
    case Algorithm::Approx: return "approx";
    case Algorithm::BruteForce: return "brute";
  }
  return "unknown";
}

namespace {

std::vector<Player> require_dag(const StrengthGraph& g) {
  auto order = is_dag(g);
  if (!order) throw Error(ErrorCode::NotADag, "strength graph contains a directed cycle");
  return *std::move(order);
}

Seeding seeding_from_ham_path(const HamPath& path) {
  // Each later entry of the reversed path beats the standing champ.
  return Seeding{{path.order.rbegin(), path.order.rend()}};
}

SolveResult finish(const StrengthGraph& g, const ValueSpec& spec, Seeding seeding,
                   Algorithm algo, bool optimal, std::string provenance = {}) {
  SolveResult r;
  r.value = evaluate(spec, simulate(g, seeding));
  r.seeding = std::move(seeding);
  r.algorithm = algo;
  r.optimal = optimal;
  r.provenance = provenance.empty() ? std::string(to_string(algo)) : std::move(provenance);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// DAG, player popularity: greedy chain of most popular remaining players.

GreedyPlan plan_dag_popularity_greedy(const StrengthGraph& g, const PlayerPopularity& p) {
  validate_spec(p, g.size());
  const auto order = require_dag(g);
  const std::size_t n = g.size();

  GreedyPlan plan;
  std::size_t start = 0;  // first rank not yet covered
  while (start < n) {
    // Ties go to the stronger player.
    std::size_t pick = start;
    for (std::size_t r = start; r < n; ++r) {
      if (p.popularity[order[r]] >= p.popularity[order[pick]]) pick = r;
    }
    const bool first = plan.chain.empty();
    const auto wins = static_cast<Value>(first ? pick : pick - start + 1);
    plan.closed_form =
        checked_add(plan.closed_form, checked_mul(wins, p.popularity[order[pick]]));
    plan.chain.push_back(pick);
    start = pick + 1;
  }
  return plan;
}

SolveResult solve_dag_popularity_greedy(const StrengthGraph& g, const PlayerPopularity& p) {
  const GreedyPlan plan = plan_dag_popularity_greedy(g, p);
  const auto order = require_dag(g);

  Caterpillar c;
  std::size_t start = 0;
  std::vector<std::vector<Player>> leaves;
  for (std::size_t pick : plan.chain) {
    std::vector<Player> group;
    for (std::size_t r = start; r < pick; ++r) group.push_back(order[r]);
    leaves.push_back(std::move(group));
    start = pick + 1;
  }
  for (std::size_t j = plan.chain.size(); j-- > 0;) {
    c.backbone.push_back(order[plan.chain[j]]);
    c.leaves.push_back(std::move(leaves[j]));
  }
  return finish(g, p, caterpillar_to_seeding(g, c), Algorithm::Greedy, true);
}

// ---------------------------------------------------------------------------
// Popularity in {0,1}, any strength graph.

BinaryPartition partition_binary_popularity(const StrengthGraph& g, const PlayerPopularity& p) {
  validate_spec(p, g.size());
  BinaryPartition part;
  for (Player i = 0; i < g.size(); ++i) {
    const Value v = p.popularity[i];
    if (v != 0 && v != 1) {
      throw Error(ErrorCode::NonBinaryPopularity,
                  "popularity[" + std::to_string(i) + "] = " + std::to_string(v));
    }
    if (v == 1) part.popular.push_back(i);
  }
  for (Player i = 0; i < g.size(); ++i) {
    if (p.popularity[i] == 1) continue;
    const bool dominates = std::all_of(part.popular.begin(), part.popular.end(),
                                       [&](Player q) { return g.beats(i, q); });
    (dominates ? part.dominators : part.rest).push_back(i);
  }
  return part;
}

SolveResult solve_binary_popularity(const StrengthGraph& g, const PlayerPopularity& p) {
  const BinaryPartition part = partition_binary_popularity(g, p);
  if (part.popular.empty()) {
    return finish(g, p, seeding_from_ham_path(hamiltonian_path(g)), Algorithm::Binary, true);
  }

  auto path_over = [&](const std::vector<Player>& members) {
    std::vector<Player> out;
    if (members.empty()) return out;
    const auto sub = induced_subgraph(g, members);
    for (Player local : hamiltonian_path(sub.graph).order) out.push_back(sub.to_parent[local]);
    return out;
  };

  Caterpillar c;
  c.backbone = path_over(part.dominators);
  const std::size_t popular_start = c.backbone.size();
  for (Player q : path_over(part.popular)) c.backbone.push_back(q);
  c.leaves.assign(c.backbone.size(), {});
  for (Player u : part.rest) {
    for (std::size_t j = popular_start; j < c.backbone.size(); ++j) {
      if (g.beats(c.backbone[j], u)) {
        c.leaves[j].push_back(u);
        break;
      }
    }
  }
  return finish(g, p, caterpillar_to_seeding(g, c), Algorithm::Binary, true);
}

// ---------------------------------------------------------------------------
// DAG, win-count values: A(i,k) = max_l F_i(l) + A(i-1, k-l).

WinCountTable::WinCountTable(const StrengthGraph& g, const WinCount& spec)
    : n_(g.size()), order_(require_dag(g)) {
  validate_spec(spec, n_);
  value_.assign(n_ * n_, 0);
  argmax_.assign(n_ * n_, 0);
  std::vector<Value> prefix(n_, 0);
  for (std::size_t i = 2; i <= n_; ++i) {
    const auto& f = spec.f[order_[i - 1]];
    prefix[0] = 0;
    for (std::size_t l = 1; l < i; ++l) prefix[l] = checked_add(prefix[l - 1], f[l - 1]);
    for (std::size_t k = 1; k < i; ++k) {
      Value best = -1;
      std::size_t best_l = 0;
      // The rest must be playable by i-1 players: k - l <= i - 2.
      const std::size_t lo = k + 2 > i ? k + 2 - i : 0;
      for (std::size_t l = lo; l <= k; ++l) {
        const Value cand = checked_add(prefix[l], value_[index(i - 1, k - l)]);
        if (cand > best) {
          best = cand;
          best_l = l;
        }
      }
      value_[index(i, k)] = best;
      argmax_[index(i, k)] = best_l;
    }
  }
}

std::size_t WinCountTable::index(std::size_t players, std::size_t matches) const {
  return (players - 1) * n_ + matches;
}

Value WinCountTable::best(std::size_t players, std::size_t matches) const {
  if (players < 1 || players > n_ || matches >= players) {
    throw Error(ErrorCode::OutOfRange, "cell (" + std::to_string(players) + "," +
                                           std::to_string(matches) + ") is undefined");
  }
  return value_[index(players, matches)];
}

std::size_t WinCountTable::best_wins(std::size_t players, std::size_t matches) const {
  best(players, matches);
  return argmax_[index(players, matches)];
}

std::vector<Player> WinCountTable::reconstruct(std::size_t players, std::size_t matches) const {
  best(players, matches);
  if (matches == 0) return {order_[0]};
  const std::size_t wins = argmax_[index(players, matches)];
  if (wins == 0) return reconstruct(players - 1, matches);

  std::vector<Player> seq = reconstruct(players - 1, matches - wins);
  std::vector<bool> used(n_, false);
  for (Player q : seq) used[q] = true;
  // Strongest of the prefix beats the sub-tournament champion, then
  // wins - 1 players that have not played yet.
  seq.push_back(order_[players - 1]);
  std::size_t needed = wins - 1;
  for (std::size_t r = 0; r + 1 < players && needed > 0; ++r) {
    if (!used[order_[r]]) {
      seq.push_back(order_[r]);
      --needed;
    }
  }
  return seq;
}

SolveResult solve_dag_wincount_dp(const StrengthGraph& g, const WinCount& spec) {
  const WinCountTable table(g, spec);
  const std::size_t n = g.size();
  return finish(g, spec, Seeding{table.reconstruct(n, n - 1)}, Algorithm::WinCountDp, true);
}

// ---------------------------------------------------------------------------
// k popularity levels: best of the per-level {0,1} runs.

SolveResult approx_popularity(const StrengthGraph& g, const PlayerPopularity& p) {
  validate_spec(p, g.size());
  const std::vector<Value> levels = popularity_levels(p);
  if (levels.size() == 1) {
    // Every match is worth the same, so any seeding is optimal.
    return finish(g, p, seeding_from_ham_path(hamiltonian_path(g)), Algorithm::Approx, true,
                  "approx: single popularity level, exact");
  }

  const bool has_zero = levels.back() == 0;
  const std::size_t runs = has_zero ? levels.size() - 1 : levels.size();
  std::optional<SolveResult> best;
  for (std::size_t i = 0; i < runs; ++i) {
    PlayerPopularity indicator;
    indicator.popularity.reserve(g.size());
    for (Value v : p.popularity) indicator.popularity.push_back(v == levels[i] ? 1 : 0);
    SolveResult cand = solve_binary_popularity(g, indicator);
    cand.value = evaluate(p, simulate(g, cand.seeding));
    if (!best || cand.value > best->value) best = std::move(cand);
  }

  best->algorithm = Algorithm::Approx;
  // A single non-zero level is the {0,1} problem rescaled.
  best->optimal = has_zero && levels.size() == 2;
  if (best->optimal) {
    best->provenance = "approx: two levels including zero, exact";
  } else if (has_zero) {
    best->provenance = "approx: 1/(k-1) guarantee, k=" + std::to_string(levels.size());
  } else {
    best->provenance = "approx: 1/k guarantee (no zero level), k=" + std::to_string(levels.size());
  }
  return *std::move(best);
}

// ---------------------------------------------------------------------------
// Exhaustive search in lexicographic order with incremental scoring.

namespace {

// Value of `winner` taking its kth win over `loser`.
template <class Spec>
Value match_gain(const Spec& s, Player winner, [[maybe_unused]] Player loser,
                 [[maybe_unused]] std::size_t kth) {
  if constexpr (std::is_same_v<Spec, PlayerPopularity>) {
    return s.popularity[winner];
  } else if constexpr (std::is_same_v<Spec, WinCount>) {
    return s.f[winner][kth - 1];
  } else if constexpr (std::is_same_v<Spec, BinaryThreshold>) {
    return static_cast<Value>(kth) == s.lambda[winner] ? 1 : 0;
  } else if constexpr (std::is_same_v<Spec, LinearAfterThreshold>) {
    return static_cast<Value>(kth) >= s.lambda[winner] ? 1 : 0;
  } else {
    return s.at(winner, loser);
  }
}

struct BlockBest {
  bool found = false;
  Value value = 0;
  std::vector<Player> seeding;
};

template <class Spec>
class Enumerator {
 public:
  Enumerator(const StrengthGraph& g, const Spec& spec, Value base)
      : g_(g), spec_(spec), base_(base), n_(g.size()), wins_(n_, 0), used_(n_, false) {
    current_.reserve(n_);
  }

  BlockBest run_block(Player first) {
    best_ = {};
    current_.assign(1, first);
    used_[first] = true;
    descend(first, base_);
    used_[first] = false;
    return best_;
  }

 private:
  void descend(Player champ, Value value) {
    if (current_.size() == n_) {
      if (!best_.found || value > best_.value) {
        best_.found = true;
        best_.value = value;
        best_.seeding = current_;
      }
      return;
    }
    for (Player p = 0; p < n_; ++p) {
      if (used_[p]) continue;
      const Player winner = g_.beats(p, champ) ? p : champ;
      const Player loser = winner == p ? champ : p;
      const std::size_t kth = ++wins_[winner];
      const Value next = checked_add(value, match_gain(spec_, winner, loser, kth));
      used_[p] = true;
      current_.push_back(p);
      descend(winner, next);
      current_.pop_back();
      used_[p] = false;
      --wins_[winner];
    }
  }

  const StrengthGraph& g_;
  const Spec& spec_;
  Value base_;
  std::size_t n_;
  std::vector<std::size_t> wins_;
  std::vector<bool> used_;
  std::vector<Player> current_;
  BlockBest best_;
};

}  // namespace

SolveResult exact_bruteforce(const Instance& inst, const BruteForceOptions& opts) {
  validate_instance(inst);
  const std::size_t n = inst.graph.size();
  if (n > opts.limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " players exceeds the brute-force limit of " +
                                         std::to_string(opts.limit));
  }

  Value base = 0;
  if (const auto* b = std::get_if<BinaryThreshold>(&inst.value)) {
    base = static_cast<Value>(std::count(b->lambda.begin(), b->lambda.end(), Value{0}));
  }

  // Blocks keyed by the initial champ; each is scanned in lexicographic order
  // and the merge keeps the lowest block on ties, which reproduces the
  // sequential scan.
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::vector<BlockBest> blocks(n);
  auto work = [&](unsigned w) {
    std::visit(
        [&](const auto& spec) {
          Enumerator enumerator(inst.graph, spec, base);
          for (Player first = w; first < n; first += workers) blocks[first] = enumerator.run_block(first);
        },
        inst.value);
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work, w));
    for (auto& j : jobs) j.get();
  }

  const BlockBest* best = nullptr;
  for (const auto& b : blocks) {
    if (b.found && (!best || b.value > best->value)) best = &b;
  }
  SolveResult r;
  r.seeding.order = best->seeding;
  r.value = best->value;
  r.algorithm = Algorithm::BruteForce;
  r.provenance = "brute: exhaustive over " + std::to_string(n) + "! seedings";
  r.optimal = true;
  return r;
}

CaterpillarSolution solve_caterpillar_maxweight(const StrengthGraph& g, const PairBased& weights,
                                                std::size_t limit) {
  require_dag(g);
  Instance inst{g, weights, std::nullopt};
  const SolveResult r = exact_bruteforce(inst, {.limit = limit});
  return {seeding_to_caterpillar(g, r.seeding), r.value};
}

// ---------------------------------------------------------------------------

namespace {

const PlayerPopularity& need_popularity(const Instance& inst, std::string_view algo) {
  const auto* p = std::get_if<PlayerPopularity>(&inst.value);
  if (!p) {
    throw Error(ErrorCode::BadParams,
                std::string(algo) + " requires popularity values, got " +
                    std::string(to_string(family_of(inst.value))));
  }
  return *p;
}

SolveResult run_dp(const Instance& inst) {
  if (family_of(inst.value) == Family::Pair) {
    throw Error(ErrorCode::BadParams, "dp requires a win-count family, got pair");
  }
  const WinCountExpansion expanded = expand_to_wincount(inst.value);
  const WinCountTable table(inst.graph, expanded.table);
  const std::size_t n = inst.graph.size();
  return finish(inst.graph, inst.value, Seeding{table.reconstruct(n, n - 1)},
                Algorithm::WinCountDp, true);
}

bool is_zero_one(const PlayerPopularity& p) {
  return std::all_of(p.popularity.begin(), p.popularity.end(),
                     [](Value v) { return v == 0 || v == 1; });
}

SolveResult route_auto(const Instance& inst, const SolveOptions& opts) {
  const ProblemClass pc = classify(inst.value, inst.graph);
  const std::size_t n = inst.graph.size();
  const bool small = n <= opts.limit;
  switch (pc.family) {
    case Family::Popularity: {
      const auto& p = std::get<PlayerPopularity>(inst.value);
      if (pc.dag) return solve_dag_popularity_greedy(inst.graph, p);
      if (is_zero_one(p)) return solve_binary_popularity(inst.graph, p);
      if (*pc.popularity_levels == 1 || !small) return approx_popularity(inst.graph, p);
      return exact_bruteforce(inst, {.limit = opts.limit});
    }
    case Family::WinCount:
    case Family::BinaryThreshold:
    case Family::LinearThreshold:
      if (pc.dag) return run_dp(inst);
      break;
    case Family::Pair:
      break;
  }
  if (small) return exact_bruteforce(inst, {.limit = opts.limit});
  throw Error(ErrorCode::NoAlgorithm,
              std::string(to_string(pc.family)) + (pc.dag ? " on a DAG" : " on a cyclic graph") +
                  " is NP-hard and " + std::to_string(n) + " players exceeds the brute-force limit of " +
                  std::to_string(opts.limit));
}

}  // namespace

SolveResult dispatch(const Instance& inst, const SolveOptions& opts) {
  validate_instance(inst);
  SolveResult r;
  switch (opts.algo) {
    case AlgoChoice::Auto: r = route_auto(inst, opts); break;
    case AlgoChoice::Greedy:
      r = solve_dag_popularity_greedy(inst.graph, need_popularity(inst, "greedy"));
      break;
    case AlgoChoice::Binary:
      r = solve_binary_popularity(inst.graph, need_popularity(inst, "binary"));
      break;
    case AlgoChoice::Dp: r = run_dp(inst); break;
    case AlgoChoice::Approx:
      r = approx_popularity(inst.graph, need_popularity(inst, "approx"));
      break;
    case AlgoChoice::Brute: r = exact_bruteforce(inst, {.limit = opts.limit}); break;
  }
  if (inst.target) r.meets_target = r.value >= *inst.target;
  return r;
}

}  // namespace ctc
