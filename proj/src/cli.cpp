#include "ppq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "httplib.h"
#include "ppq/compilation.hpp"
#include "ppq/engine.hpp"
#include "ppq/error.hpp"
#include "ppq/service.hpp"
#include "ppq/verbalizer.hpp"

namespace ppq::cli {
namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::io: return kIoError;
    case ErrorCode::syntax:
    case ErrorCode::semantic:
    case ErrorCode::not_connected:
    case ErrorCode::compilation: return kSchemaError;
    default: return kQueryError;
  }
}

std::filesystem::path default_output(const std::filesystem::path& schema) {
  auto out = schema;
  out.replace_extension(".compiled.json");
  return out;
}

std::shared_ptr<const Engine> open_engine(const std::string& schema_path, const std::string& compiled_path) {
  Schema schema = load_schema(schema_path);
  if (compiled_path.empty()) return std::make_shared<const Engine>(Engine::compile(std::move(schema)));
  Engine plain(schema);
  auto hierarchy = load_compilation(compiled_path, plain.graph(), plain.schema_hash());
  return std::make_shared<const Engine>(std::move(schema), std::move(hierarchy));
}

int compile(const std::string& schema_path, std::string out_path, std::ostream& out) {
  const Engine engine = Engine::compile(load_schema(schema_path));
  if (out_path.empty()) out_path = default_output(schema_path).string();
  const auto& h = *engine.hierarchy();
  {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::io, "cannot write '" + out_path + "'");
    file << write_compilation(h, engine.graph(), engine.schema_hash());
    if (!file) throw Error(ErrorCode::io, "cannot write '" + out_path + "'");
  }
  out << "level sizes:";
  for (const auto& level : h.levels()) out << ' ' << level.size();
  out << "\nclustering steps: " << h.steps() << "\nstored hypernodes: " << h.total_stored()
      << "\nwrote " << out_path << '\n';
  return kOk;
}

void print_paths(const Engine& engine, std::span<const RankedPath> paths, std::ostream& out) {
  for (const auto& p : paths) {
    out << path_expr(p.path, engine.graph(), engine.schema()).render() << '\t' << format_badness(p.badness)
        << '\n';
  }
}

int query(const std::string& schema_path, const std::vector<std::string>& points, int more_count,
          double c_weight, const std::string& compiled_path, std::ostream& out) {
  auto engine = open_engine(schema_path, compiled_path);
  Query q(engine, points, c_weight);
  for (std::size_t i = 0; i < q.pair_count(); ++i) {
    const auto& first = q.pair(i).state();
    if (q.pair_count() > 1) {
      out << "== " << engine->graph().name(first.from()) << " -> " << engine->graph().name(first.to()) << '\n';
    }
    print_paths(*engine, first.released(), out);
    for (int round = 0; round < more_count && !q.pair(i).state().exhausted(); ++round) {
      out << "-- more\n";
      print_paths(*engine, q.more(i), out);
    }
    if (q.pair(i).state().exhausted()) out << "exhausted\n";
  }
  return kOk;
}

int serve(const std::string& schema_path, const std::string& compiled_path, const std::string& host, int port,
          double c_weight, std::ostream& out) {
  ServiceOptions options;
  options.default_c_weight = c_weight;
  Service service(open_engine(schema_path, compiled_path), options);
  httplib::Server server;
  service.mount(server);
  out << "listening on " << host << ':' << port << std::endl;
  if (!server.listen(host, port)) throw Error(ErrorCode::io, "cannot listen on " + host + ":" + std::to_string(port));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point-to-point queries over conceptual schemas"};
  app.require_subcommand(1);

  std::string schema_path;
  std::string out_path;
  std::string compiled_path;
  std::vector<std::string> points;
  int more_count = 0;
  double c_weight = RelevanceConfig::kDefaultCWeight;
  std::string host = "127.0.0.1";
  int port = 8080;

  auto* compile_cmd = app.add_subcommand("compile", "Pre-compile the cluster hierarchy of a schema");
  compile_cmd->add_option("schema", schema_path, "Schema document (JSON)")->required();
  compile_cmd->add_option("-o,--output", out_path, "Compilation file to write");

  auto* query_cmd = app.add_subcommand("query", "List ranked paths between consecutive points");
  query_cmd->add_option("schema", schema_path, "Schema document (JSON)")->required();
  query_cmd->add_option("points", points, "Two or more type names")->required();
  query_cmd->add_option("--more", more_count, "Number of MORE presses per pair")->check(CLI::NonNegativeNumber);
  query_cmd->add_option("--c-weight", c_weight, "Weight of conceptual irrelevance vs. length")
      ->envname(kCWeightEnv);
  query_cmd->add_option("--compiled", compiled_path, "Compilation file (compiled in memory if absent)");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP/JSON session API");
  serve_cmd->add_option("schema", schema_path, "Schema document (JSON)")->required();
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--compiled", compiled_path, "Compilation file (compiled in memory if absent)");
  serve_cmd->add_option("--c-weight", c_weight, "Default c_weight for new sessions")->envname(kCWeightEnv);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*compile_cmd) return compile(schema_path, out_path, out);
    if (*query_cmd) return query(schema_path, points, more_count, c_weight, compiled_path, out);
    return serve(schema_path, compiled_path, host, port, c_weight, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace ppq::cli
