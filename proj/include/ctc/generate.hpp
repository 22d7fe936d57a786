#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctc/value_functions.hpp"

namespace ctc {

enum class GraphClass { Tournament, Dag };

struct GenParams {
  // Popularity draws pick uniformly from `levels` when non-empty,
  // otherwise from 0..max_value.
  std::vector<Value> levels;
  Value max_value = 9;
  std::optional<Value> target;
};

// Draw order: graph (one coin per pair i < j in row order, or a shuffled
// strength order for DAGs), then the value payload player by player.
Instance gen_random(std::uint64_t seed, GraphClass cls, std::size_t n, Family family,
                    const GenParams& params = {});

}  // namespace ctc
