#include <doctest.h>

#include "ctc/generate.hpp"
#include "ctc/io.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace ctc;
using testutil::code_of;

namespace {

std::string schema_message(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    return e.what();
  }
  FAIL("expected a schema error");
  return {};
}

}  // namespace

TEST_CASE("parse: edge list and dag order") {
  const auto doc = parse_instance(
      R"({"n":3,"edges":[[0,1],[1,2],[2,0]],"value":{"kind":"popularity","p":[1,2,3]},"target":4})");
  CHECK(doc.instance.graph == fixtures::three_cycle());
  CHECK(doc.instance.target == 4);
  CHECK(doc.meta.is_null());

  const auto dag = parse_instance(R"({"n":3,"dag_order":[2,0,1],"value":{"kind":"wincount","f":[[1,1],[2,2],[3,3]]}})");
  CHECK(is_dag(dag.instance.graph));
  CHECK(dag.instance.graph.beats(1, 0));
  CHECK(dag.instance.graph.beats(0, 2));
  CHECK(dag.instance.graph.out_degree(1) == 2);
}

TEST_CASE("parse: schema errors name the path") {
  CHECK(schema_message(R"({"n":1,"edges":[],"value":{"kind":"fame","p":[1]}})")
            .find("$.value.kind") != std::string::npos);
  CHECK(schema_message(R"({"n":1,"edges":[],"value":{"kind":"popularity","p":[1]},"extra":1})")
            .find("$.extra") != std::string::npos);
  CHECK(schema_message(R"({"n":2,"edges":[[0,1]],"dag_order":[0,1],"value":{"kind":"popularity","p":[1,1]}})")
            .find("exactly one") != std::string::npos);
  CHECK(schema_message(R"({"n":2,"edges":[[0,"x"]],"value":{"kind":"popularity","p":[1,1]}})")
            .find("$.edges[0][1]") != std::string::npos);
  CHECK(schema_message(R"({"n":2,"dag_order":[0,0],"value":{"kind":"popularity","p":[1,1]}})")
            .find("$.dag_order[1]") != std::string::npos);
  CHECK(schema_message("{not json").find("malformed") != std::string::npos);
}

TEST_CASE("parse: graph and value errors propagate") {
  CHECK(code_of([] { parse_instance(R"({"n":2,"edges":[],"value":{"kind":"popularity","p":[1,1]}})"); }) ==
        ErrorCode::MissingEdge);
  CHECK(code_of([] {
          parse_instance(R"({"n":2,"edges":[[0,1]],"value":{"kind":"popularity","p":[1]}})");
        }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] {
          parse_instance(R"({"n":2,"edges":[[0,1]],"value":{"kind":"linear_threshold","lambda":[0,1]}})");
        }) == ErrorCode::InvalidValue);
}

TEST_CASE("emit: canonical and round-trip stable") {
  const auto doc = parse_instance(
      R"({"value":{"p":[1,2,3],"kind":"popularity"},"edges":[[2,0],[1,2],[0,1]],"n":3,"meta":{"b":1,"a":2}})");
  const std::string text = emit_instance(doc);
  CHECK(text ==
        R"({"edges":[[0,1],[1,2],[2,0]],"meta":{"a":2,"b":1},"n":3,"value":{"kind":"popularity","p":[1,2,3]}})"
        "\n");
  CHECK(emit_instance(parse_instance(text)) == text);
}

TEST_CASE("emit: every family round-trips") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto family = static_cast<Family>(seed % 5);
    const InstanceDocument doc{gen_random(seed, seed % 2 ? GraphClass::Dag : GraphClass::Tournament,
                                          1 + seed % 7, family, {.levels = {}, .max_value = 9, .target = 3}),
                               nullptr};
    const auto text = emit_instance(doc);
    const auto back = parse_instance(text);
    CHECK(back.instance.graph == doc.instance.graph);
    CHECK(back.instance.value == doc.instance.value);
    CHECK(back.instance.target == 3);
    CHECK(emit_instance(back) == text);
  }
}

TEST_CASE("gen: deterministic and class-respecting") {
  const auto a = gen_random(42, GraphClass::Tournament, 12, Family::Popularity, {});
  const auto b = gen_random(42, GraphClass::Tournament, 12, Family::Popularity, {});
  CHECK(emit_instance({a, nullptr}) == emit_instance({b, nullptr}));
  const auto c = gen_random(43, GraphClass::Tournament, 12, Family::Popularity, {});
  CHECK(emit_instance({a, nullptr}) != emit_instance({c, nullptr}));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(is_dag(gen_random(seed, GraphClass::Dag, 15, Family::WinCount, {}).graph));
  }

  const auto levels = gen_random(7, GraphClass::Tournament, 200, Family::Popularity, {.levels = {0, 1, 2}});
  CHECK(popularity_levels(std::get<PlayerPopularity>(levels.value)) == std::vector<Value>{2, 1, 0});

  const auto thresholds = gen_random(1, GraphClass::Dag, 6, Family::LinearThreshold, {});
  for (Value l : std::get<LinearAfterThreshold>(thresholds.value).lambda) {
    CHECK(l >= 1);
    CHECK(l <= 5);
  }
}

TEST_CASE("source documents") {
  const auto tdm = parse_3dm(R"({"n":2,"triples":[[0,0,0],[1,1,1]]})");
  CHECK(tdm.triples.size() == 2);
  CHECK(code_of([] { parse_3dm(R"({"n":2,"triples":[[0,0]]})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_3dm(R"({"n":2,"triples":[[0,0,5]]})"); }) == ErrorCode::InvalidTriples);

  const auto is = parse_independent_set(R"({"vertices":3,"edges":[[0,1]],"k":2})");
  CHECK(is.edges.size() == 1);
  CHECK(is.k == 2);
  CHECK(code_of([] { parse_independent_set(R"({"vertices":3,"edges":[[0,1]]})"); }) ==
        ErrorCode::SchemaError);

  const auto doc = to_document(reduce(ReductionKind::IsBinary, fixtures::triangle(1)), "is-binary");
  CHECK(doc.meta["reduction"] == "is-binary");
  CHECK(doc.meta["names"].size() == 30);
  CHECK(doc.meta["warnings"].empty());
}
