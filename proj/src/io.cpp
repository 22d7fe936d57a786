#include "ctc/io.hpp"

#include <algorithm>
#include <set>

#include "ctc/error.hpp"

namespace ctc {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, "at " + path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error("$", std::string("malformed JSON: ") + e.what());
  }
}

void allow_keys(const json& obj, const std::string& path, std::set<std::string> allowed) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) schema_error(path + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing");
  return *it;
}

std::size_t as_index(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema_error(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Value as_value(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema_error(path, "integer exceeds 64-bit range");
  }
  return j.get<Value>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::vector<Value> value_list(const json& j, const std::string& path) {
  std::vector<Value> out;
  const json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_value(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::size_t> index_list(const json& j, const std::string& path) {
  std::vector<std::size_t> out;
  const json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_index(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ValueSpec parse_value(const json& j, std::size_t n) {
  const std::string path = "$.value";
  if (!j.is_object()) schema_error(path, "expected an object");
  const json& kind_json = require(j, path, "kind");
  if (!kind_json.is_string()) schema_error(path + ".kind", "expected a string");
  const auto kind = kind_json.get<std::string>();

  if (kind == "popularity") {
    allow_keys(j, path, {"kind", "p"});
    return PlayerPopularity{value_list(require(j, path, "p"), path + ".p")};
  }
  if (kind == "wincount") {
    allow_keys(j, path, {"kind", "f"});
    WinCount w;
    const json& rows = as_array(require(j, path, "f"), path + ".f");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      w.f.push_back(value_list(rows[i], path + ".f[" + std::to_string(i) + "]"));
    }
    return w;
  }
  if (kind == "binary_threshold") {
    allow_keys(j, path, {"kind", "lambda"});
    return BinaryThreshold{value_list(require(j, path, "lambda"), path + ".lambda")};
  }
  if (kind == "linear_threshold") {
    allow_keys(j, path, {"kind", "lambda"});
    return LinearAfterThreshold{value_list(require(j, path, "lambda"), path + ".lambda")};
  }
  if (kind == "pair") {
    allow_keys(j, path, {"kind", "f"});
    PairBased pb;
    pb.n = n;
    const json& rows = as_array(require(j, path, "f"), path + ".f");
    if (rows.size() != n) schema_error(path + ".f", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_path = path + ".f[" + std::to_string(i) + "]";
      auto row = value_list(rows[i], row_path);
      if (row.size() != n) schema_error(row_path, "expected " + std::to_string(n) + " entries");
      pb.f.insert(pb.f.end(), row.begin(), row.end());
    }
    return pb;
  }
  schema_error(path + ".kind", "unknown value kind '" + kind + "'");
}

}  // namespace

json value_to_json(const ValueSpec& spec) {
  json out;
  out["kind"] = std::string(to_string(family_of(spec)));
  if (const auto* p = std::get_if<PlayerPopularity>(&spec)) {
    out["p"] = p->popularity;
  } else if (const auto* w = std::get_if<WinCount>(&spec)) {
    out["f"] = w->f;
  } else if (const auto* b = std::get_if<BinaryThreshold>(&spec)) {
    out["lambda"] = b->lambda;
  } else if (const auto* l = std::get_if<LinearAfterThreshold>(&spec)) {
    out["lambda"] = l->lambda;
  } else {
    const auto& pb = std::get<PairBased>(spec);
    json rows = json::array();
    for (std::size_t i = 0; i < pb.n; ++i) {
      rows.push_back(std::vector<Value>(pb.f.begin() + static_cast<std::ptrdiff_t>(i * pb.n),
                                        pb.f.begin() + static_cast<std::ptrdiff_t>((i + 1) * pb.n)));
    }
    out["f"] = std::move(rows);
  }
  return out;
}

InstanceDocument parse_instance(std::string_view text) {
  const json root = parse_json(text);
  allow_keys(root, "$", {"n", "edges", "dag_order", "value", "target", "meta"});
  const std::size_t n = as_index(require(root, "$", "n"), "$.n");
  if (n == 0) schema_error("$.n", "must be at least 1");

  const bool has_edges = root.contains("edges");
  const bool has_order = root.contains("dag_order");
  if (has_edges == has_order) schema_error("$", "exactly one of 'edges' or 'dag_order' is required");

  auto graph = [&] {
    if (has_order) {
      const auto order = index_list(root["dag_order"], "$.dag_order");
      if (order.size() != n) schema_error("$.dag_order", "expected " + std::to_string(n) + " players");
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || seen[order[i]]) {
          schema_error("$.dag_order[" + std::to_string(i) + "]", "not a permutation of 0..n-1");
        }
        seen[order[i]] = true;
      }
      return StrengthGraph::transitive(order);
    }
    std::vector<Edge> edges;
    const json& arr = as_array(root["edges"], "$.edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.edges[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 2) schema_error(path, "expected [winner, loser]");
      edges.emplace_back(as_index(arr[i][0], path + "[0]"), as_index(arr[i][1], path + "[1]"));
    }
    return StrengthGraph::build(n, edges);
  }();

  InstanceDocument doc{Instance{std::move(graph), parse_value(require(root, "$", "value"), n),
                                std::nullopt},
                       nullptr};
  if (root.contains("target")) doc.instance.target = as_value(root["target"], "$.target");
  if (root.contains("meta")) {
    if (!root["meta"].is_object()) schema_error("$.meta", "expected an object");
    doc.meta = root["meta"];
  }
  validate_instance(doc.instance);
  return doc;
}

std::string emit_instance(const InstanceDocument& doc) {
  json root;
  root["n"] = doc.instance.graph.size();
  json edges = json::array();
  for (const auto& [a, b] : doc.instance.graph.edges()) edges.push_back({a, b});
  root["edges"] = std::move(edges);
  root["value"] = value_to_json(doc.instance.value);
  if (doc.instance.target) root["target"] = *doc.instance.target;
  if (!doc.meta.is_null()) root["meta"] = doc.meta;
  return root.dump() + "\n";
}

ThreeDMInstance parse_3dm(std::string_view text) {
  const json root = parse_json(text);
  allow_keys(root, "$", {"n", "triples", "meta"});
  ThreeDMInstance tdm;
  tdm.n = as_index(require(root, "$", "n"), "$.n");
  const json& arr = as_array(require(root, "$", "triples"), "$.triples");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "$.triples[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 3) schema_error(path, "expected [x, y, z]");
    tdm.triples.push_back({as_index(arr[i][0], path + "[0]"), as_index(arr[i][1], path + "[1]"),
                           as_index(arr[i][2], path + "[2]")});
  }
  validate(tdm);
  return tdm;
}

IndependentSetInstance parse_independent_set(std::string_view text) {
  const json root = parse_json(text);
  allow_keys(root, "$", {"vertices", "edges", "k", "meta"});
  IndependentSetInstance is;
  is.vertices = as_index(require(root, "$", "vertices"), "$.vertices");
  is.k = as_index(require(root, "$", "k"), "$.k");
  const json& arr = as_array(require(root, "$", "edges"), "$.edges");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) schema_error(path, "expected [u, v]");
    is.edges.emplace_back(as_index(arr[i][0], path + "[0]"), as_index(arr[i][1], path + "[1]"));
  }
  validate(is);
  return is;
}

InstanceDocument to_document(const ReducedInstance& reduced, std::string_view reduction) {
  json meta;
  meta["reduction"] = std::string(reduction);
  meta["warnings"] = reduced.warnings;
  meta["names"] = reduced.names;
  return {reduced.instance, std::move(meta)};
}

json to_json(const SolveResult& r) {
  json out;
  out["seeding"] = r.seeding.order;
  out["value"] = r.value;
  out["algorithm"] = std::string(to_string(r.algorithm));
  out["provenance"] = r.provenance;
  out["optimal"] = r.optimal;
  if (r.meets_target) out["meets_target"] = *r.meets_target;
  return out;
}

json to_json(const TournamentTrace& trace) {
  json matches = json::array();
  for (const Match& m : trace.matches) {
    matches.push_back({{"round", m.round},
                       {"challenger", m.challenger},
                       {"champ_before", m.champ_before},
                       {"winner", m.winner}});
  }
  json out;
  out["matches"] = std::move(matches);
  out["wins"] = trace.wins;
  out["champion"] = trace.champion;
  return out;
}

json to_json(const Caterpillar& c) {
  json leaves = json::array();
  for (const auto& l : c.leaves) leaves.push_back(l);
  return {{"backbone", c.backbone}, {"leaves", std::move(leaves)}};
}

}  // namespace ctc
