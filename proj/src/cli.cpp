#include "ctc/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ctc/error.hpp"
#include "ctc/generate.hpp"
#include "ctc/io.hpp"

namespace ctc {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::size_t> parse_id_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::size_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw Error(ErrorCode::BadParams, std::string("invalid ") + what + " '" + text + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

const std::map<std::string, ReductionKind> kReductions{
    {"3dm-popularity", ReductionKind::ThreeDmPopularity},
    {"3dm-pair", ReductionKind::ThreeDmPair},
    {"is-binary", ReductionKind::IsBinary},
    {"is-linear", ReductionKind::IsLinear},
};

const std::map<std::string, AlgoChoice> kAlgos{
    {"auto", AlgoChoice::Auto},     {"greedy", AlgoChoice::Greedy}, {"binary", AlgoChoice::Binary},
    {"dp", AlgoChoice::Dp},         {"approx", AlgoChoice::Approx}, {"brute", AlgoChoice::Brute},
};

const std::map<std::string, Family> kFamilies{
    {"popularity", Family::Popularity},
    {"wincount", Family::WinCount},
    {"binary_threshold", Family::BinaryThreshold},
    {"linear_threshold", Family::LinearThreshold},
    {"pair", Family::Pair},
};

const std::map<std::string, GraphClass> kClasses{
    {"tournament", GraphClass::Tournament},
    {"dag", GraphClass::Dag},
};

void print(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Challenge-the-Champ tournament value maximization"};
  app.require_subcommand(1);

  std::string file;
  std::string seeding_text;
  std::size_t limit = kDefaultBruteForceLimit;
  std::string algo = "auto";

  auto* solve = app.add_subcommand("solve", "Solve an instance with the best applicable algorithm");
  solve->add_option("file", file, "Instance JSON")->required();
  solve->add_option("--algo", algo, "auto|greedy|binary|dp|approx|brute")
      ->check(CLI::IsMember(kAlgos));
  solve->add_option("--limit", limit, "Largest n for exhaustive search");

  auto* simulate_cmd = app.add_subcommand("simulate", "Play out a seeding");
  simulate_cmd->add_option("file", file, "Instance JSON")->required();
  simulate_cmd->add_option("--seeding", seeding_text, "Comma-separated challenge order")->required();

  auto* exact = app.add_subcommand("exact", "Exhaustive optimum");
  exact->add_option("file", file, "Instance JSON")->required();
  exact->add_option("--limit", limit, "Largest n for exhaustive search");

  auto* approx = app.add_subcommand("approx", "Per-level approximation for popularity values");
  approx->add_option("file", file, "Instance JSON")->required();

  std::string reduction;
  std::string source;
  std::size_t scale = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Generate a reduced instance from a source problem");
  reduce_cmd->add_option("kind", reduction, "3dm-popularity|3dm-pair|is-binary|is-linear")
      ->required()
      ->check(CLI::IsMember(kReductions));
  reduce_cmd->add_option("source", source, "Source problem JSON")->required();
  reduce_cmd->add_option("--scale", scale, "Edge-player copies for IS reductions (default |V|^2)")
      ->check(CLI::PositiveNumber);

  std::string solution_text;
  auto* witness = app.add_subcommand("witness", "Seeding for a source solution");
  witness->add_option("kind", reduction, "3dm-popularity|3dm-pair|is-binary|is-linear")
      ->required()
      ->check(CLI::IsMember(kReductions));
  witness->add_option("source", source, "Source problem JSON")->required();
  witness->add_option("--solution", solution_text,
                      "Triple indices (3dm) or vertices (is), comma-separated")
      ->required();
  witness->add_option("--scale", scale, "Edge-player copies for IS reductions")
      ->check(CLI::PositiveNumber);

  std::uint64_t seed = 0;
  std::string graph_class;
  std::size_t n = 0;
  std::string family = "popularity";
  std::string levels_text;
  Value max_value = 9;
  Value target = 0;
  auto* gen = app.add_subcommand("gen", "Seeded random instance");
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("--class", graph_class, "tournament|dag")
      ->required()
      ->check(CLI::IsMember(kClasses));
  gen->add_option("--n", n, "Player count")->required();
  gen->add_option("--value", family, "popularity|wincount|binary_threshold|linear_threshold|pair")
      ->check(CLI::IsMember(kFamilies));
  gen->add_option("--levels", levels_text, "Popularity levels, comma-separated");
  gen->add_option("--max-value", max_value, "Largest drawn value");
  auto* target_opt = gen->add_option("--target", target, "Target value to embed")
                         ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Check a seeding against the instance target");
  verify->add_option("file", file, "Instance JSON")->required();
  verify->add_option("--seeding", seeding_text, "Comma-separated challenge order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed() || exact->parsed() || approx->parsed()) {
      const auto doc = parse_instance(read_file(file));
      SolveOptions opts{kAlgos.at(algo), limit};
      if (exact->parsed()) opts.algo = AlgoChoice::Brute;
      if (approx->parsed()) opts.algo = AlgoChoice::Approx;
      print(out, to_json(dispatch(doc.instance, opts)));
      return kOk;
    }
    if (simulate_cmd->parsed() || verify->parsed()) {
      const auto doc = parse_instance(read_file(file));
      const Seeding s{parse_id_list(seeding_text, "seeding")};
      const TournamentTrace trace = simulate(doc.instance.graph, s);
      const Value value = evaluate(doc.instance.value, trace);
      nlohmann::json j = simulate_cmd->parsed() ? to_json(trace) : nlohmann::json::object();
      j["value"] = value;
      if (doc.instance.target) {
        j["target"] = *doc.instance.target;
        j["meets_target"] = value >= *doc.instance.target;
      }
      print(out, j);
      if (verify->parsed() && doc.instance.target && value < *doc.instance.target) {
        err << "seeding value " << value << " is below target " << *doc.instance.target << "\n";
        return kFailed;
      }
      return kOk;
    }
    if (reduce_cmd->parsed() || witness->parsed()) {
      const ReductionKind kind = kReductions.at(reduction);
      const bool matching =
          kind == ReductionKind::ThreeDmPopularity || kind == ReductionKind::ThreeDmPair;
      if (matching && scale != 0) throw Error(ErrorCode::BadParams, "--scale applies to IS reductions only");
      IsReductionOptions opts;
      if (scale != 0) opts.multiplicity = scale;
      const std::string text = read_file(source);
      if (reduce_cmd->parsed()) {
        const ReducedInstance reduced =
            matching ? reduce(kind, parse_3dm(text)) : reduce(kind, parse_independent_set(text), opts);
        for (const auto& w : reduced.warnings) err << "warning: " << w << "\n";
        out << emit_instance(to_document(reduced, reduction));
        return kOk;
      }
      const auto solution = parse_id_list(solution_text, "solution");
      const Seeding s = matching ? witness_seeding(kind, parse_3dm(text), solution)
                                 : witness_seeding(kind, parse_independent_set(text), solution, opts);
      print(out, {{"seeding", s.order}});
      return kOk;
    }
    if (gen->parsed()) {
      GenParams params;
      params.levels = [&] {
        std::vector<Value> levels;
        for (std::size_t v : parse_id_list(levels_text, "levels")) levels.push_back(static_cast<Value>(v));
        return levels;
      }();
      params.max_value = max_value;
      if (target_opt->count() > 0) params.target = target;
      const GraphClass cls = kClasses.at(graph_class);
      InstanceDocument doc{gen_random(seed, cls, n, kFamilies.at(family), params), nullptr};
      doc.meta = {{"generator", {{"seed", seed},
                                 {"class", graph_class},
                                 {"rng", "mt19937_64"}}}};
      out << emit_instance(doc);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::NoAlgorithm ? kFailed : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ctc
