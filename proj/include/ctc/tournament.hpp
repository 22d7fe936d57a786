#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ctc/strength_graph.hpp"

namespace ctc {

// Challenge order: order[0] is the initial champ, order[r] challenges in
// round r.
struct Seeding {
  std::vector<Player> order;

  friend bool operator==(const Seeding&, const Seeding&) = default;
};

// Throws InvalidSeeding unless `s` is a permutation of 0..n-1.
void validate_seeding(const Seeding& s, std::size_t n);

struct Match {
  std::size_t round = 0;  // 1..n-1
  Player challenger = 0;
  Player champ_before = 0;
  Player winner = 0;

  Player loser() const noexcept { return winner == challenger ? champ_before : challenger; }

  friend bool operator==(const Match&, const Match&) = default;
};

struct TournamentTrace {
  std::vector<Match> matches;
  std::vector<std::size_t> wins;                // w_i
  std::vector<std::vector<Player>> beaten_by;   // players i beat, in match order
  Player champion = 0;

  std::size_t size() const noexcept { return wins.size(); }
};

TournamentTrace simulate(const StrengthGraph& g, const Seeding& s);

// Arborescence form of a seeding. backbone[0] is the champion;
// leaves[j] are the players attached to backbone[j], in challenge order.
struct Caterpillar {
  std::vector<Player> backbone;
  std::vector<std::vector<Player>> leaves;

  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

// Backbone = players with at least one win (champion first); every other
// player is a leaf of the player it lost to.
Caterpillar seeding_to_caterpillar(const StrengthGraph& g, const Seeding& s);

// Emits (b_k, leaves(b_k), b_{k-1}, leaves(b_{k-1}), ..., b_1, leaves(b_1)).
// Throws InvalidCaterpillar naming the first violated edge or partition fault.
Seeding caterpillar_to_seeding(const StrengthGraph& g, const Caterpillar& c);

void validate_caterpillar(const StrengthGraph& g, const Caterpillar& c);

// Canonical means every backbone player wins at least once, i.e. the tail
// has a leaf (or the caterpillar is a single player).
bool is_canonical(const Caterpillar& c);

}  // namespace ctc
