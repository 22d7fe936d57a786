#include "ctc/value_functions.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ctc/error.hpp"

namespace ctc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_nonnegative(const std::vector<Value>& values, std::string_view what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw Error(ErrorCode::InvalidValue,
                  std::string(what) + "[" + std::to_string(i) + "] is negative");
    }
  }
}

void require_size(std::size_t got, std::size_t n, std::string_view what) {
  if (got != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has " +
                                                  std::to_string(got) + " entries, graph has " +
                                                  std::to_string(n) + " players");
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Popularity: return "popularity";
    case Family::WinCount: return "wincount";
    case Family::BinaryThreshold: return "binary_threshold";
    case Family::LinearThreshold: return "linear_threshold";
    case Family::Pair: return "pair";
  }
  return "unknown";
}

Family family_of(const ValueSpec& spec) {
  return std::visit(Overloaded{
                        [](const PlayerPopularity&) { return Family::Popularity; },
                        [](const WinCount&) { return Family::WinCount; },
                        [](const BinaryThreshold&) { return Family::BinaryThreshold; },
                        [](const LinearAfterThreshold&) { return Family::LinearThreshold; },
                        [](const PairBased&) { return Family::Pair; },
                    },
                    spec);
}

std::size_t spec_size(const ValueSpec& spec) {
  return std::visit(Overloaded{
                        [](const PlayerPopularity& v) { return v.popularity.size(); },
                        [](const WinCount& v) { return v.f.size(); },
                        [](const BinaryThreshold& v) { return v.lambda.size(); },
                        [](const LinearAfterThreshold& v) { return v.lambda.size(); },
                        [](const PairBased& v) { return v.n; },
                    },
                    spec);
}

void validate_spec(const ValueSpec& spec, std::size_t n) {
  std::visit(Overloaded{
                 [&](const PlayerPopularity& v) {
                   require_size(v.popularity.size(), n, "popularity");
                   require_nonnegative(v.popularity, "popularity");
                 },
                 [&](const WinCount& v) {
                   require_size(v.f.size(), n, "win-count table");
                   for (std::size_t i = 0; i < n; ++i) {
                     if (v.f[i].size() != n - 1) {
                       throw Error(ErrorCode::LengthMismatch,
                                   "f[" + std::to_string(i) + "] has " +
                                       std::to_string(v.f[i].size()) + " entries, expected " +
                                       std::to_string(n - 1));
                     }
                     require_nonnegative(v.f[i], "f[" + std::to_string(i) + "]");
                   }
                 },
                 [&](const BinaryThreshold& v) {
                   require_size(v.lambda.size(), n, "lambda");
                   require_nonnegative(v.lambda, "lambda");
                 },
                 [&](const LinearAfterThreshold& v) {
                   require_size(v.lambda.size(), n, "lambda");
                   for (std::size_t i = 0; i < n; ++i) {
                     if (v.lambda[i] < 1) {
                       throw Error(ErrorCode::InvalidValue,
                                   "lambda[" + std::to_string(i) + "] must be at least 1");
                     }
                   }
                 },
                 [&](const PairBased& v) {
                   require_size(v.n, n, "pair table");
                   if (v.f.size() != n * n) {
                     throw Error(ErrorCode::DimensionMismatch, "pair table is not n x n");
                   }
                   require_nonnegative(v.f, "pair");
                 },
             },
             spec);
}

void validate_instance(const Instance& inst) {
  validate_spec(inst.value, inst.graph.size());
  if (inst.target && *inst.target < 0) {
    throw Error(ErrorCode::InvalidValue, "target is negative");
  }
}

Value checked_add(Value a, Value b) {
  Value out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "tournament value exceeds 64-bit range");
  }
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "tournament value exceeds 64-bit range");
  }
  return out;
}

Value evaluate(const ValueSpec& spec, const TournamentTrace& trace) {
  const std::size_t n = trace.size();
  require_size(spec_size(spec), n, "value function");
  return std::visit(
      Overloaded{
          [&](const PlayerPopularity& v) {
            Value total = 0;
            for (std::size_t i = 0; i < n; ++i) {
              total = checked_add(total,
                                  checked_mul(v.popularity[i], static_cast<Value>(trace.wins[i])));
            }
            return total;
          },
          [&](const WinCount& v) {
            Value total = 0;
            for (std::size_t i = 0; i < n; ++i) {
              total = checked_add(total, cumulative_win_value(v, i, trace.wins[i]));
            }
            return total;
          },
          [&](const BinaryThreshold& v) {
            Value total = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (static_cast<Value>(trace.wins[i]) >= v.lambda[i]) ++total;
            }
            return total;
          },
          [&](const LinearAfterThreshold& v) {
            Value total = 0;
            for (std::size_t i = 0; i < n; ++i) {
              total = checked_add(
                  total, std::max<Value>(0, static_cast<Value>(trace.wins[i]) - v.lambda[i] + 1));
            }
            return total;
          },
          [&](const PairBased& v) {
            Value total = 0;
            for (std::size_t i = 0; i < n; ++i) {
              for (Player j : trace.beaten_by[i]) total = checked_add(total, v.at(i, j));
            }
            return total;
          },
      },
      spec);
}

Value evaluate(const Instance& inst, const Seeding& s) {
  return evaluate(inst.value, simulate(inst.graph, s));
}

Value cumulative_win_value(const WinCount& spec, Player player, std::size_t wins) {
  if (player >= spec.f.size()) {
    throw Error(ErrorCode::OutOfRange, "player " + std::to_string(player) + " out of range");
  }
  const auto& f = spec.f[player];
  if (wins > f.size()) {
    throw Error(ErrorCode::OutOfRange, std::to_string(wins) + " wins exceeds the " +
                                           std::to_string(f.size()) + " matches available");
  }
  Value total = 0;
  for (std::size_t k = 0; k < wins; ++k) total = checked_add(total, f[k]);
  return total;
}

WinCountExpansion expand_to_wincount(const ValueSpec& spec) {
  const std::size_t n = spec_size(spec);
  WinCountExpansion out;
  out.table.f.assign(n, std::vector<Value>(n > 0 ? n - 1 : 0, 0));
  std::visit(Overloaded{
                 [&](const PlayerPopularity& v) {
                   for (std::size_t i = 0; i < n; ++i) {
                     std::fill(out.table.f[i].begin(), out.table.f[i].end(), v.popularity[i]);
                   }
                 },
                 [&](const WinCount& v) { out.table = v; },
                 [&](const BinaryThreshold& v) {
                   for (std::size_t i = 0; i < n; ++i) {
                     const Value lambda = v.lambda[i];
                     if (lambda == 0) {
                       ++out.offset;
                     } else if (lambda <= static_cast<Value>(n - 1)) {
                       out.table.f[i][lambda - 1] = 1;
                     }
                   }
                 },
                 [&](const LinearAfterThreshold& v) {
                   for (std::size_t i = 0; i < n; ++i) {
                     if (v.lambda[i] <= 0) ++out.offset;
                     for (std::size_t k = 1; k < n; ++k) {
                       if (static_cast<Value>(k) >= v.lambda[i]) out.table.f[i][k - 1] = 1;
                     }
                   }
                 },
                 [&](const PairBased&) {
                   throw Error(ErrorCode::InvalidValue,
                               "pair-based values have no win-count form");
                 },
             },
             spec);
  return out;
}

std::vector<Value> popularity_levels(const PlayerPopularity& p) {
  std::vector<Value> levels = p.popularity;
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

ProblemClass classify(const ValueSpec& spec, const StrengthGraph& g) {
  ProblemClass pc;
  pc.family = family_of(spec);
  pc.dag = is_dag(g).has_value();
  if (const auto* p = std::get_if<PlayerPopularity>(&spec)) {
    pc.popularity_levels = popularity_levels(*p).size();
  }
  return pc;
}

}  // namespace ctc
