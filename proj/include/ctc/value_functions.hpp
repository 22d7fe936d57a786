#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ctc/strength_graph.hpp"
#include "ctc/tournament.hpp"

namespace ctc {

using Value = std::int64_t;

// Every win by player i is worth popularity[i].
struct PlayerPopularity {
  std::vector<Value> popularity;

  bool operator==(const PlayerPopularity&) const = default;
};

// The k-th win (k = 1..n-1) of player i is worth f[i][k-1].
struct WinCount {
  std::vector<std::vector<Value>> f;

  bool operator==(const WinCount&) const = default;
};

// Player i scores 1 once it reaches lambda[i] wins. A zero threshold is
// met unconditionally.
struct BinaryThreshold {
  std::vector<Value> lambda;

  bool operator==(const BinaryThreshold&) const = default;
};

// Player i scores max(0, w_i - lambda[i] + 1); thresholds are >= 1.
struct LinearAfterThreshold {
  std::vector<Value> lambda;

  bool operator==(const LinearAfterThreshold&) const = default;
};

// A match won by i over j is worth f[i * n + j]. Entries for pairs that
// cannot occur in that direction are ignored by evaluation.
struct PairBased {
  std::size_t n = 0;
  std::vector<Value> f;

  Value at(Player winner, Player loser) const noexcept { return f[winner * n + loser]; }
  bool operator==(const PairBased&) const = default;
};

using ValueSpec =
    std::variant<PlayerPopularity, WinCount, BinaryThreshold, LinearAfterThreshold, PairBased>;

enum class Family { Popularity, WinCount, BinaryThreshold, LinearThreshold, Pair };

std::string_view to_string(Family f);
Family family_of(const ValueSpec& spec);

// Player count implied by the payload.
std::size_t spec_size(const ValueSpec& spec);

// Nonnegativity, table lengths, threshold floors. Throws InvalidValue,
// LengthMismatch or DimensionMismatch.
void validate_spec(const ValueSpec& spec, std::size_t n);

struct Instance {
  StrengthGraph graph;
  ValueSpec value;
  std::optional<Value> target;
};

void validate_instance(const Instance& inst);

Value evaluate(const ValueSpec& spec, const TournamentTrace& trace);
Value evaluate(const Instance& inst, const Seeding& s);

// F_i(wins): prefix sum of player i's win values. Throws OutOfRange.
Value cumulative_win_value(const WinCount& spec, Player player, std::size_t wins);

// Threshold families as explicit tables. `offset` carries players whose
// zero threshold is met without playing, which a table cannot express.
struct WinCountExpansion {
  WinCount table;
  Value offset = 0;
};

WinCountExpansion expand_to_wincount(const ValueSpec& spec);

struct ProblemClass {
  Family family = Family::Popularity;
  bool dag = false;
  std::optional<std::size_t> popularity_levels;
};

ProblemClass classify(const ValueSpec& spec, const StrengthGraph& g);

// Distinct popularity values, descending.
std::vector<Value> popularity_levels(const PlayerPopularity& p);

// Overflow-checked arithmetic; throws Error(Overflow).
Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

}  // namespace ctc
