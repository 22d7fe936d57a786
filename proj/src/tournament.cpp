#include "ctc/tournament.hpp"

#include <algorithm>
#include <string>

#include "ctc/error.hpp"

namespace ctc {

void validate_seeding(const Seeding& s, std::size_t n) {
  if (s.order.size() != n) {
    throw Error(ErrorCode::InvalidSeeding,
                "not a permutation: expected " + std::to_string(n) + " players, got " +
                    std::to_string(s.order.size()));
  }
  std::vector<bool> seen(n, false);
  for (Player p : s.order) {
    if (p >= n) {
      throw Error(ErrorCode::InvalidSeeding,
                  "not a permutation: player " + std::to_string(p) + " out of range");
    }
    if (seen[p]) {
      throw Error(ErrorCode::InvalidSeeding,
                  "not a permutation: player " + std::to_string(p) + " repeated");
    }
    seen[p] = true;
  }
}

TournamentTrace simulate(const StrengthGraph& g, const Seeding& s) {
  const std::size_t n = g.size();
  validate_seeding(s, n);
  TournamentTrace trace;
  trace.wins.assign(n, 0);
  trace.beaten_by.assign(n, {});
  trace.matches.reserve(n - 1);
  Player champ = s.order.front();
  for (std::size_t r = 1; r < n; ++r) {
    const Player challenger = s.order[r];
    const Player winner = g.beats(challenger, champ) ? challenger : champ;
    const Player loser = winner == challenger ? champ : challenger;
    trace.matches.push_back({r, challenger, champ, winner});
    ++trace.wins[winner];
    trace.beaten_by[winner].push_back(loser);
    champ = winner;
  }
  trace.champion = champ;
  return trace;
}

Caterpillar seeding_to_caterpillar(const StrengthGraph& g, const Seeding& s) {
  const TournamentTrace trace = simulate(g, s);
  const std::size_t n = g.size();

  // Champions with at least one win, in the order they took the title.
  std::vector<Player> reigning;
  for (const Match& m : trace.matches) {
    if (reigning.empty() || reigning.back() != m.winner) reigning.push_back(m.winner);
  }
  if (reigning.empty()) reigning.push_back(s.order.front());  // n == 1

  Caterpillar c;
  c.backbone.assign(reigning.rbegin(), reigning.rend());
  c.leaves.assign(c.backbone.size(), {});
  std::vector<std::size_t> slot(n, n);
  for (std::size_t j = 0; j < c.backbone.size(); ++j) slot[c.backbone[j]] = j;

  for (const Match& m : trace.matches) {
    const Player loser = m.loser();
    if (trace.wins[loser] == 0) c.leaves[slot[m.winner]].push_back(loser);
  }
  return c;
}

void validate_caterpillar(const StrengthGraph& g, const Caterpillar& c) {
  const std::size_t n = g.size();
  if (c.backbone.empty()) {
    throw Error(ErrorCode::InvalidCaterpillar, "empty backbone");
  }
  if (c.leaves.size() != c.backbone.size()) {
    throw Error(ErrorCode::InvalidCaterpillar, "leaf lists do not match backbone length");
  }
  std::vector<bool> seen(n, false);
  auto claim = [&](Player p) {
    if (p >= n) {
      throw Error(ErrorCode::InvalidCaterpillar,
                  "player " + std::to_string(p) + " out of range");
    }
    if (seen[p]) {
      throw Error(ErrorCode::InvalidCaterpillar,
                  "player " + std::to_string(p) + " appears twice");
    }
    seen[p] = true;
  };
  for (std::size_t j = 0; j < c.backbone.size(); ++j) {
    const Player b = c.backbone[j];
    claim(b);
    if (j + 1 < c.backbone.size() && c.backbone[j + 1] < n && !g.beats(b, c.backbone[j + 1])) {
      throw Error(ErrorCode::InvalidCaterpillar,
                  "backbone edge (" + std::to_string(b) + "," +
                      std::to_string(c.backbone[j + 1]) + ") not in strength graph");
    }
    for (Player leaf : c.leaves[j]) {
      claim(leaf);
      if (!g.beats(b, leaf)) {
        throw Error(ErrorCode::InvalidCaterpillar,
                    "leaf edge (" + std::to_string(b) + "," + std::to_string(leaf) +
                        ") not in strength graph");
      }
    }
  }
  const auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    throw Error(ErrorCode::InvalidCaterpillar,
                "player " + std::to_string(missing - seen.begin()) + " not covered");
  }
}

Seeding caterpillar_to_seeding(const StrengthGraph& g, const Caterpillar& c) {
  validate_caterpillar(g, c);
  Seeding s;
  s.order.reserve(g.size());
  for (std::size_t j = c.backbone.size(); j-- > 0;) {
    s.order.push_back(c.backbone[j]);
    s.order.insert(s.order.end(), c.leaves[j].begin(), c.leaves[j].end());
  }
  return s;
}

bool is_canonical(const Caterpillar& c) {
  if (c.backbone.size() <= 1) return true;
  return !c.leaves.back().empty();
}

}  // namespace ctc
