#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ctc/reductions.hpp"
#include "ctc/solvers.hpp"
#include "ctc/tournament.hpp"
#include "ctc/value_functions.hpp"

namespace ctc {

// On-disk instance: the solver input plus free-form provenance in `meta`.
struct InstanceDocument {
  Instance instance;
  nlohmann::json meta;  // null when absent
};

// Strict: unknown keys and kinds are rejected with a SchemaError naming the
// JSON path. Graph and value validation errors propagate unchanged.
InstanceDocument parse_instance(std::string_view text);

// Canonical form: sorted keys, sorted edge list, compact, trailing newline.
std::string emit_instance(const InstanceDocument& doc);

nlohmann::json value_to_json(const ValueSpec& spec);

ThreeDMInstance parse_3dm(std::string_view text);
IndependentSetInstance parse_independent_set(std::string_view text);

// Reduced instance as a document, warnings and player names in `meta`.
InstanceDocument to_document(const ReducedInstance& reduced, std::string_view reduction);

nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const TournamentTrace& trace);
nlohmann::json to_json(const Caterpillar& c);

}  // namespace ctc
