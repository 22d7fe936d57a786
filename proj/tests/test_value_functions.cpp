#include <doctest.h>

#include <limits>

#include "ctc/value_functions.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace ctc;
using testutil::code_of;

namespace {

TournamentTrace ladder7_trace() {
  return simulate(fixtures::transitive(7), Seeding{fixtures::ladder7_seeding()});
}

Value evaluate_expanded(const ValueSpec& spec, const TournamentTrace& t) {
  const auto ex = expand_to_wincount(spec);
  return ex.offset + evaluate(ex.table, t);
}

}  // namespace

TEST_CASE("evaluate: each family on the seven-player trace") {
  const auto t = ladder7_trace();
  CHECK(evaluate(PlayerPopularity{std::vector<Value>(7, 0)}, t) == 0);
  CHECK(evaluate(PlayerPopularity{{1, 2, 3, 4, 5, 6, 7}}, t) == 34);
  CHECK(evaluate(BinaryThreshold{std::vector<Value>(7, 1)}, t) == 3);
  CHECK(evaluate(LinearAfterThreshold{std::vector<Value>(7, 1)}, t) == 6);

  // Player 6 (3 wins) over threshold 2 scores 2; player 3 (2 wins) scores 1.
  CHECK(evaluate(LinearAfterThreshold{{1, 1, 1, 2, 2, 2, 2}}, t) == 1 + 0 + 2);
  CHECK(evaluate(BinaryThreshold{{0, 5, 5, 2, 2, 5, 3}}, t) == 1 + 1 + 1);
}

TEST_CASE("evaluate: pair based counts winner-loser pairs") {
  const auto t = ladder7_trace();
  PairBased pb{7, std::vector<Value>(49, 0)};
  pb.f[6 * 7 + 0] = 10;  // 6 beat 0
  pb.f[3 * 7 + 2] = 4;   // 3 beat 2
  pb.f[2 * 7 + 3] = 99;  // never happens
  CHECK(evaluate(pb, t) == 14);
}

TEST_CASE("evaluate: errors") {
  const auto t = ladder7_trace();
  CHECK(code_of([&] { evaluate(PlayerPopularity{{1, 2}}, t); }) == ErrorCode::DimensionMismatch);
  const Value huge = std::numeric_limits<Value>::max() / 2;
  CHECK(code_of([&] { evaluate(PlayerPopularity{{0, 0, 0, huge, 0, 0, huge}}, t); }) ==
        ErrorCode::Overflow);
  CHECK(code_of([&] { validate_spec(WinCount{{{1}, {1, 2}}}, 2); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { validate_spec(PlayerPopularity{{1, -1}}, 2); }) == ErrorCode::InvalidValue);
  CHECK(code_of([&] { validate_spec(LinearAfterThreshold{{1, 0}}, 2); }) == ErrorCode::InvalidValue);
  CHECK_NOTHROW(validate_spec(BinaryThreshold{{0, 3}}, 2));
}

TEST_CASE("cumulative_win_value") {
  const WinCount w{{{1, 10}, {5, 0}, {0, 0}}};
  CHECK(cumulative_win_value(w, 0, 0) == 0);
  CHECK(cumulative_win_value(w, 0, 2) == 11);
  CHECK(cumulative_win_value(WinCount{{{5}, {3}}}, 0, 1) == 5);
  CHECK(code_of([&] { cumulative_win_value(w, 0, 3); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { cumulative_win_value(w, 3, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("classify") {
  const auto pc = classify(PlayerPopularity{{0, 1, 1}}, fixtures::three_cycle());
  CHECK(pc.family == Family::Popularity);
  CHECK_FALSE(pc.dag);
  CHECK(pc.popularity_levels == 2u);

  const auto pair = classify(PairBased{3, std::vector<Value>(9, 0)}, fixtures::transitive(3));
  CHECK(pair.family == Family::Pair);
  CHECK(pair.dag);
  CHECK_FALSE(pair.popularity_levels);

  const auto wc = classify(WinCount{{{0, 0}, {0, 0}, {0, 0}}}, fixtures::transitive(3));
  CHECK(wc.family == Family::WinCount);
  CHECK(wc.dag);
}

TEST_CASE("property: family identities and expansions") {
  Rng rng(5150);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const bool dag = trial % 2 == 0;
    const auto g = dag ? testutil::random_dag(rng, n) : testutil::random_tournament(rng, n);
    const Seeding s{testutil::random_permutation(rng, n)};
    const auto trace = simulate(g, s);

    PlayerPopularity p;
    for (std::size_t i = 0; i < n; ++i) p.popularity.push_back(rng.between(0, 9));
    const Value v = evaluate(p, trace);
    CHECK(v == oracle::score(p, oracle::play(g, s.order)));

    WinCount constant;
    for (std::size_t i = 0; i < n; ++i) constant.f.emplace_back(n - 1, p.popularity[i]);
    CHECK(evaluate(constant, trace) == v);

    PairBased winner_keyed{n, std::vector<Value>(n * n, 0)};
    PairBased summed{n, std::vector<Value>(n * n, 0)};
    for (Player i = 0; i < n; ++i) {
      for (Player j = 0; j < n; ++j) {
        if (!g.beats(i, j)) continue;
        winner_keyed.f[i * n + j] = p.popularity[i];
        summed.f[i * n + j] = p.popularity[i] + p.popularity[j];
      }
    }
    CHECK(evaluate(winner_keyed, trace) == v);
    if (dag) {
      // Everyone except the strongest loses exactly once.
      const Player strongest = is_dag(g)->back();
      Value losers = 0;
      for (Player i = 0; i < n; ++i) {
        if (i != strongest) losers += p.popularity[i];
      }
      CHECK(evaluate(summed, trace) == v + losers);
    }

    BinaryThreshold b;
    LinearAfterThreshold l;
    for (std::size_t i = 0; i < n; ++i) {
      b.lambda.push_back(rng.between(0, static_cast<Value>(n)));
      l.lambda.push_back(rng.between(1, static_cast<Value>(n)));
    }
    CHECK(evaluate_expanded(b, trace) == evaluate(b, trace));
    CHECK(evaluate_expanded(l, trace) == evaluate(l, trace));
    CHECK(evaluate_expanded(p, trace) == v);
  }
}
