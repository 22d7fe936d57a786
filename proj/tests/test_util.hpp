#pragma once

#include <doctest.h>

#include <numeric>
#include <span>

#include "ctc/error.hpp"
#include "ctc/random.hpp"
#include "ctc/strength_graph.hpp"

namespace testutil {

template <class Fn>
ctc::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const ctc::Error& e) {
    return e.code();
  }
  FAIL("expected a ctc::Error");
  return ctc::ErrorCode::BadParams;
}

inline ctc::StrengthGraph random_tournament(ctc::Rng& rng, std::size_t n) {
  return ctc::StrengthGraph::from_rule(n, [&](ctc::Player, ctc::Player) { return rng.coin(); });
}

inline ctc::StrengthGraph random_dag(ctc::Rng& rng, std::size_t n) {
  std::vector<ctc::Player> order(n);
  std::iota(order.begin(), order.end(), ctc::Player{0});
  rng.shuffle(std::span<ctc::Player>(order));
  return ctc::StrengthGraph::transitive(order);
}

inline std::vector<ctc::Player> random_permutation(ctc::Rng& rng, std::size_t n) {
  std::vector<ctc::Player> order(n);
  std::iota(order.begin(), order.end(), ctc::Player{0});
  rng.shuffle(std::span<ctc::Player>(order));
  return order;
}

}  // namespace testutil
