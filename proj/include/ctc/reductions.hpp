#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctc/tournament.hpp"
#include "ctc/value_functions.hpp"

namespace ctc {

// 3-D-Matching over X, Y, Z with |X| = |Y| = |Z| = n. A triple holds one
// coordinate per axis, each in 0..n-1.
struct ThreeDMInstance {
  std::size_t n = 0;
  std::vector<std::array<std::size_t, 3>> triples;
};

// Axis-major element id: axis * n + coordinate.
inline std::size_t element_id(const ThreeDMInstance& tdm, std::size_t axis, std::size_t coord) {
  return axis * tdm.n + coord;
}

void validate(const ThreeDMInstance& tdm);

// Number of distinct elements covered by the chosen triples.
std::size_t covered_elements(const ThreeDMInstance& tdm, const std::vector<std::size_t>& chosen);

bool is_exact_cover(const ThreeDMInstance& tdm, const std::vector<std::size_t>& chosen);

struct IndependentSetInstance {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t k = 0;
};

void validate(const IndependentSetInstance& is);

std::vector<std::size_t> degrees(const IndependentSetInstance& is);

bool is_independent_set(const IndependentSetInstance& is, const std::vector<std::size_t>& set);

enum class ReductionKind { ThreeDmPopularity, ThreeDmPair, IsBinary, IsLinear };

// Generated instance plus machine-readable warnings for degenerate or
// scaled-down sources, and a display name per player.
struct ReducedInstance {
  Instance instance;
  std::vector<std::string> warnings;
  std::vector<std::string> names;
};

struct IsReductionOptions {
  // Edge-player copies per edge; the hardness argument needs |V|^2.
  std::optional<std::size_t> multiplicity;
};

// Player 0 is h (popularity 2), 1..m the set players, then the element
// players in axis-major order. Target 2m + 2n + 1.
ReducedInstance reduce_3dm_to_ternary_popularity(const ThreeDMInstance& tdm);

// Player 0 is c, 1..m the set players, then the element players; lower id
// beats higher throughout, so the graph is transitive. Target m + 2n + 1.
ReducedInstance reduce_3dm_to_pairbased_dag(const ThreeDMInstance& tdm);

// Players 0..|V|-1 are vertex players, then M copies per edge in edge order.
ReducedInstance reduce_is_to_binary_wincount(const IndependentSetInstance& is,
                                             const IsReductionOptions& opts = {});
ReducedInstance reduce_is_to_linear_threshold(const IndependentSetInstance& is,
                                              const IsReductionOptions& opts = {});

ReducedInstance reduce(ReductionKind kind, const ThreeDMInstance& tdm);
ReducedInstance reduce(ReductionKind kind, const IndependentSetInstance& is,
                       const IsReductionOptions& opts = {});

// YES-direction seedings. `chosen` are triple indices forming an exact cover;
// `set` is an independent set of size at least k. Throws InvalidSolution.
Seeding witness_seeding(ReductionKind kind, const ThreeDMInstance& tdm,
                        const std::vector<std::size_t>& chosen);
Seeding witness_seeding(ReductionKind kind, const IndependentSetInstance& is,
                        const std::vector<std::size_t>& set, const IsReductionOptions& opts = {});

inline constexpr std::size_t kOracleLimit = 20;

// Lexicographically smallest exact cover (sorted triple indices), if any.
std::optional<std::vector<std::size_t>> oracle_3dm(const ThreeDMInstance& tdm);

// Lexicographically smallest maximum independent set.
std::vector<std::size_t> oracle_is(const IndependentSetInstance& is);

}  // namespace ctc
