#pragma once

#include <vector>

#include "ctc/reductions.hpp"
#include "ctc/strength_graph.hpp"
#include "ctc/value_functions.hpp"

namespace fixtures {

// Player i beats every j < i.
inline ctc::StrengthGraph transitive(std::size_t n) {
  return ctc::StrengthGraph::from_rule(n, [](ctc::Player, ctc::Player) { return false; });
}

// 0 -> 1 -> 2 -> 0
inline ctc::StrengthGraph three_cycle() {
  const std::vector<ctc::Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  return ctc::StrengthGraph::build(3, edges);
}

// Challenge order on the transitive 7-player graph.
inline std::vector<ctc::Player> ladder7_seeding() { return {2, 3, 1, 4, 6, 0, 5}; }

// r = 0, a_i = i, b_i = 3 + i (i = 1..3). r beats every a_i, a_i beats b_i,
// b_i beats r and every a_j with j != i; pairs inside the a and b groups go
// to the lower id.
inline ctc::Instance hub7_instance() {
  auto graph = ctc::StrengthGraph::from_rule(7, [](ctc::Player x, ctc::Player y) {
    if (x == 0) return y <= 3;                   // r beats a, loses to b
    if (x <= 3 && y >= 4) return y == x + 3;     // a_i beats only b_i
    return true;                                 // same group: lower id
  });
  ctc::PlayerPopularity p{{2, 1, 1, 1, 0, 0, 0}};
  return {std::move(graph), std::move(p), std::nullopt};
}

// X = {u, v}, Y = {w, y}, Z = {x, z};
// S1 = {u, w, x}, S2 = {v, w, z}, S3 = {v, y, z}.
inline ctc::ThreeDMInstance small_3dm() { return {2, {{0, 0, 0}, {1, 0, 1}, {1, 1, 1}}}; }

inline ctc::IndependentSetInstance triangle(std::size_t k) { return {3, {{0, 1}, {1, 2}, {0, 2}}, k}; }

}  // namespace fixtures
