#include "ctc/generate.hpp"

#include <numeric>

#include "ctc/error.hpp"
#include "ctc/random.hpp"

namespace ctc {

Instance gen_random(std::uint64_t seed, GraphClass cls, std::size_t n, Family family,
                    const GenParams& params) {
  if (n == 0) throw Error(ErrorCode::BadParams, "n must be at least 1");
  if (params.max_value < 0) throw Error(ErrorCode::BadParams, "max value is negative");
  for (Value v : params.levels) {
    if (v < 0) throw Error(ErrorCode::BadParams, "popularity level is negative");
  }

  Rng rng(seed);
  auto graph = [&] {
    if (cls == GraphClass::Dag) {
      std::vector<Player> order(n);
      std::iota(order.begin(), order.end(), Player{0});
      rng.shuffle(std::span<Player>(order));
      return StrengthGraph::transitive(order);
    }
    return StrengthGraph::from_rule(n, [&](Player, Player) { return rng.coin(); });
  }();

  auto draw = [&] { return rng.between(0, params.max_value); };
  const Value max_threshold = std::max<Value>(1, static_cast<Value>(n) - 1);

  ValueSpec value;
  switch (family) {
    case Family::Popularity: {
      PlayerPopularity p;
      for (std::size_t i = 0; i < n; ++i) {
        p.popularity.push_back(params.levels.empty()
                                   ? draw()
                                   : params.levels[rng.below(params.levels.size())]);
      }
      value = std::move(p);
      break;
    }
    case Family::WinCount: {
      WinCount w;
      w.f.assign(n, std::vector<Value>(n - 1, 0));
      for (auto& row : w.f) {
        for (auto& v : row) v = draw();
      }
      value = std::move(w);
      break;
    }
    case Family::BinaryThreshold: {
      BinaryThreshold b;
      for (std::size_t i = 0; i < n; ++i) b.lambda.push_back(rng.between(1, max_threshold));
      value = std::move(b);
      break;
    }
    case Family::LinearThreshold: {
      LinearAfterThreshold l;
      for (std::size_t i = 0; i < n; ++i) l.lambda.push_back(rng.between(1, max_threshold));
      value = std::move(l);
      break;
    }
    case Family::Pair: {
      PairBased pb;
      pb.n = n;
      pb.f.assign(n * n, 0);
      for (Player i = 0; i < n; ++i) {
        for (Player j = 0; j < n; ++j) {
          if (graph.beats(i, j)) pb.f[i * n + j] = draw();
        }
      }
      value = std::move(pb);
      break;
    }
  }
  return Instance{std::move(graph), std::move(value), params.target};
}

}  // namespace ctc
