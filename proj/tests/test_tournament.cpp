#include <doctest.h>

#include <algorithm>
#include <set>

#include "ctc/tournament.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace ctc;
using testutil::code_of;

namespace {

std::set<std::pair<Player, Player>> match_set(const TournamentTrace& t) {
  std::set<std::pair<Player, Player>> out;
  for (const Match& m : t.matches) out.emplace(m.winner, m.loser());
  return out;
}

}  // namespace

TEST_CASE("simulate: seven-player transitive example") {
  const auto g = fixtures::transitive(7);
  const auto trace = simulate(g, Seeding{fixtures::ladder7_seeding()});

  std::vector<Player> winners;
  for (const Match& m : trace.matches) winners.push_back(m.winner);
  CHECK(winners == std::vector<Player>{3, 3, 4, 6, 6, 6});
  CHECK(trace.wins == std::vector<std::size_t>{0, 0, 0, 2, 1, 0, 3});
  CHECK(trace.champion == 6);
  CHECK(trace.matches.front().round == 1);
  CHECK(trace.matches.back().round == 6);
}

TEST_CASE("simulate: small cases") {
  const std::vector<Edge> e{{1, 0}};
  const auto two = simulate(StrengthGraph::build(2, e), Seeding{{0, 1}});
  REQUIRE(two.matches.size() == 1);
  CHECK(two.matches[0].winner == 1);
  CHECK(two.wins[1] == 1);

  // 2 beats 0 in the cycle 0->1->2->0, then 1 beats 2.
  const auto cyc = simulate(fixtures::three_cycle(), Seeding{{2, 0, 1}});
  CHECK(cyc.matches[0].winner == 2);
  CHECK(cyc.matches[1].winner == 1);
  CHECK(cyc.champion == 1);
  CHECK(cyc.wins == std::vector<std::size_t>{0, 1, 1});

  const auto solo = simulate(StrengthGraph::build(1, {}), Seeding{{0}});
  CHECK(solo.matches.empty());
  CHECK(solo.champion == 0);
}

TEST_CASE("simulate rejects non-permutations") {
  const auto g = fixtures::transitive(3);
  CHECK(code_of([&] { simulate(g, Seeding{{0, 0, 1}}); }) == ErrorCode::InvalidSeeding);
  CHECK(code_of([&] { simulate(g, Seeding{{0, 1}}); }) == ErrorCode::InvalidSeeding);
  CHECK(code_of([&] { simulate(g, Seeding{{0, 1, 3}}); }) == ErrorCode::InvalidSeeding);
}

TEST_CASE("seeding_to_caterpillar") {
  const auto g = fixtures::transitive(7);
  const auto c = seeding_to_caterpillar(g, Seeding{fixtures::ladder7_seeding()});
  CHECK(c.backbone == std::vector<Player>{6, 4, 3});
  REQUIRE(c.leaves.size() == 3);
  CHECK(c.leaves[0] == std::vector<Player>{0, 5});
  CHECK(c.leaves[1].empty());
  CHECK(c.leaves[2] == std::vector<Player>{2, 1});  // challenge order
  CHECK(is_canonical(c));

  const std::vector<Edge> e{{1, 0}};
  const auto two = seeding_to_caterpillar(StrengthGraph::build(2, e), Seeding{{0, 1}});
  CHECK(two.backbone == std::vector<Player>{1});
  CHECK(two.leaves == std::vector<std::vector<Player>>{{0}});

  const auto solo = seeding_to_caterpillar(StrengthGraph::build(1, {}), Seeding{{0}});
  CHECK(solo.backbone == std::vector<Player>{0});
  CHECK(solo.leaves == std::vector<std::vector<Player>>{{}});
}

TEST_CASE("caterpillar_to_seeding") {
  const auto g = fixtures::transitive(7);
  const Caterpillar c{{6, 4, 3}, {{0, 5}, {}, {1, 2}}};
  const auto s = caterpillar_to_seeding(g, c);
  CHECK(s.order == std::vector<Player>{3, 1, 2, 4, 6, 0, 5});
  CHECK(match_set(simulate(g, s)) == match_set(simulate(g, Seeding{fixtures::ladder7_seeding()})));

  const Caterpillar star{{2}, {{0, 1}}};
  CHECK(caterpillar_to_seeding(fixtures::transitive(3), star).order ==
        std::vector<Player>{2, 0, 1});

  // Leaf 4 cannot be beaten by 3.
  const Caterpillar bad{{6, 3}, {{0, 5}, {1, 2, 4}}};
  try {
    caterpillar_to_seeding(g, bad);
    FAIL("invalid caterpillar accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCaterpillar);
    CHECK(std::string(e.what()).find("(3,4)") != std::string::npos);
  }
  const Caterpillar missing{{6}, {{0, 1, 2, 3, 4}}};
  CHECK(code_of([&] { caterpillar_to_seeding(g, missing); }) == ErrorCode::InvalidCaterpillar);
  const Caterpillar twice{{6}, {{0, 1, 2, 3, 4, 5, 5}}};
  CHECK(code_of([&] { caterpillar_to_seeding(g, twice); }) == ErrorCode::InvalidCaterpillar);
}

TEST_CASE("property: trace invariants and caterpillar round trips") {
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const auto g = trial % 2 ? testutil::random_tournament(rng, n) : testutil::random_dag(rng, n);
    const Seeding s{testutil::random_permutation(rng, n)};
    const auto trace = simulate(g, s);

    std::size_t total = 0;
    for (auto w : trace.wins) total += w;
    CHECK(total == n - 1);

    std::vector<int> losses(n, 0);
    for (std::size_t r = 0; r < trace.matches.size(); ++r) {
      ++losses[trace.matches[r].loser()];
      if (r + 1 < trace.matches.size()) {
        CHECK(trace.matches[r].winner == trace.matches[r + 1].champ_before);
      }
    }
    for (Player p = 0; p < n; ++p) CHECK(losses[p] == (p == trace.champion ? 0 : 1));

    const auto o = oracle::play(g, s.order);
    CHECK(o.wins == trace.wins);
    CHECK(o.champion == trace.champion);

    // Round trip B: same matches.
    const auto cat = seeding_to_caterpillar(g, s);
    CHECK(is_canonical(cat));
    const auto back = caterpillar_to_seeding(g, cat);
    CHECK(match_set(simulate(g, back)) == match_set(trace));

    // Round trip A on a reshuffled canonical caterpillar.
    Caterpillar shuffled = cat;
    for (auto& leaves : shuffled.leaves) rng.shuffle(std::span<Player>(leaves));
    CHECK(seeding_to_caterpillar(g, caterpillar_to_seeding(g, shuffled)) == shuffled);
  }
}
