#pragma once

// Test-only reference implementations. They deliberately share nothing with
// the library beyond StrengthGraph::beats and the value payload structs:
// tournaments are replayed here and every family's formula is recomputed
// from scratch.

#include <algorithm>
#include <numeric>
#include <variant>
#include <vector>

#include "ctc/strength_graph.hpp"
#include "ctc/value_functions.hpp"

namespace oracle {

struct Outcome {
  std::vector<std::size_t> wins;
  std::vector<std::vector<std::size_t>> beat;
  std::size_t champion = 0;
};

inline Outcome play(const ctc::StrengthGraph& g, const std::vector<std::size_t>& order) {
  Outcome o;
  o.wins.assign(order.size(), 0);
  o.beat.assign(order.size(), {});
  std::size_t champ = order[0];
  for (std::size_t r = 1; r < order.size(); ++r) {
    const std::size_t c = order[r];
    const bool upset = g.beats(c, champ);
    const std::size_t w = upset ? c : champ;
    const std::size_t l = upset ? champ : c;
    o.wins[w] += 1;
    o.beat[w].push_back(l);
    champ = w;
  }
  o.champion = champ;
  return o;
}

inline ctc::Value score(const ctc::ValueSpec& spec, const Outcome& o) {
  const std::size_t n = o.wins.size();
  ctc::Value total = 0;
  if (auto* p = std::get_if<ctc::PlayerPopularity>(&spec)) {
    for (std::size_t i = 0; i < n; ++i) total += p->popularity[i] * static_cast<ctc::Value>(o.wins[i]);
  } else if (auto* w = std::get_if<ctc::WinCount>(&spec)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 1; k <= o.wins[i]; ++k) total += w->f[i][k - 1];
    }
  } else if (auto* b = std::get_if<ctc::BinaryThreshold>(&spec)) {
    for (std::size_t i = 0; i < n; ++i) total += static_cast<ctc::Value>(o.wins[i]) >= b->lambda[i];
  } else if (auto* l = std::get_if<ctc::LinearAfterThreshold>(&spec)) {
    for (std::size_t i = 0; i < n; ++i) {
      total += std::max<ctc::Value>(0, static_cast<ctc::Value>(o.wins[i]) - l->lambda[i] + 1);
    }
  } else {
    const auto& pb = std::get<ctc::PairBased>(spec);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : o.beat[i]) total += pb.f[i * pb.n + j];
    }
  }
  return total;
}

// Best value over all n! seedings via std::next_permutation.
inline ctc::Value best_value(const ctc::StrengthGraph& g, const ctc::ValueSpec& spec) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  ctc::Value best = -1;
  do {
    best = std::max(best, score(spec, play(g, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace oracle
