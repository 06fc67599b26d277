#include <random>
#include <set>
#include <string>
#include <tuple>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppq/error.hpp"
#include "ppq/graph.hpp"
#include "ppq/schema.hpp"

using namespace ppq;
using ppq::testing::example_schema;

namespace {

std::set<std::tuple<std::string, std::string, std::string>> edge_set(const Graph& g) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& e : g.edges()) out.emplace(g.name(e.a), g.name(e.b), std::string(e.label.text()));
  return out;
}

}  // namespace

TEST_CASE("worked example graph") {
  auto g = derive_graph(example_schema());
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(edge_set(g) == std::set<std::tuple<std::string, std::string, std::string>>{
                           {"A", "f", "r"},
                           {"B", "f", "s"},
                           {"C", "g", "t"},
                           {"A", "g", "u"},
                           {"A", "C", "POLY"},
                           {"A", "g", "POLY"},
                           {"B", "D", "SPEC"},
                       });
  CHECK(g.connected());
}

TEST_CASE("single type graph") {
  auto g = derive_graph(parse_schema(R"({"object_types": [{"name": "A"}]})"));
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.connected());
}

TEST_CASE("binary fact type over one player") {
  auto g = derive_graph(parse_schema(R"({"object_types": [{"name": "A"}],
    "relationship_types": [{"name": "f", "roles": [{"name": "r", "player": "A"}, {"name": "s", "player": "A"}]}]})"));
  CHECK(g.names() == std::vector<std::string>{"A", "f"});
  CHECK(edge_set(g) == std::set<std::tuple<std::string, std::string, std::string>>{{"A", "f", "r"}, {"A", "f", "s"}});
  auto p = Path::from_tokens(g, {"A", "r", "f"});
  auto q = Path::from_tokens(g, {"A", "s", "f"});
  CHECK(p != q);
  CHECK(p < q);
}

TEST_CASE("self loops are rejected") {
  auto s = parse_schema(R"({"object_types": [{"name": "A"}], "subtype": [["A", "A"]]})");
  try {
    derive_graph(s);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::semantic);
    CHECK(std::string(e.what()).find("degenerate edge") != std::string::npos);
  }
}

TEST_CASE("path accessors") {
  auto g = derive_graph(example_schema());
  auto spec = Path::from_tokens(g, {"D", "SPEC", "B"});
  CHECK(spec.begin() == g.id("D"));
  CHECK(spec.end() == g.id("B"));
  CHECK(spec.length() == 1);

  Path single(g.id("A"));
  CHECK(single.begin() == g.id("A"));
  CHECK(single.end() == g.id("A"));
  CHECK(single.length() == 0);
  CHECK(single.contains(g.id("A")));

  auto arfsb = Path::from_tokens(g, {"A", "r", "f", "s", "B"});
  CHECK(arfsb.length() == 2);
  CHECK(arfsb.contains(g.id("f")));
  CHECK_FALSE(arfsb.contains(g.id("D")));
  CHECK(arfsb.tokens(g) == std::vector<std::string>{"A", "r", "f", "s", "B"});
}

TEST_CASE("concatenation") {
  auto g = derive_graph(example_schema());
  Path a(g.id("A"));
  std::vector<Step> rf{{EdgeLabel::of_role("r"), g.id("f")}};
  CHECK(concat(g, a, rf) == Path::from_tokens(g, {"A", "r", "f"}));
  CHECK(concat(g, a, {}) == a);
  std::vector<Step> sf{{EdgeLabel::of_role("s"), g.id("f")}};
  CHECK_THROWS_AS(concat(g, a, sf), Error);

  std::vector<Step> back{{EdgeLabel::of_role("r"), g.id("f")}, {EdgeLabel::of_role("r"), g.id("A")}};
  try {
    concat(g, a, back);
    FAIL("revisit accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_path);
  }
}

TEST_CASE("malformed token lists") {
  auto g = derive_graph(example_schema());
  CHECK_THROWS_AS(Path::from_tokens(g, {"A", "r"}), Error);
  CHECK_THROWS_AS(Path::from_tokens(g, {"Z"}), Error);
  CHECK_THROWS_AS(Path::from_tokens(g, {"A", "s", "f"}), Error);
}

TEST_CASE("unknown names") {
  auto g = derive_graph(example_schema());
  CHECK_FALSE(g.find("Z").has_value());
  try {
    g.id("Z");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("each role labels exactly one edge") {
  auto s = example_schema();
  auto g = derive_graph(s);
  for (const auto& rel : s.relationship_types()) {
    for (const auto& role : rel.roles) {
      int count = 0;
      for (const auto& e : g.edges()) {
        if (e.label == EdgeLabel::of_role(role.name)) {
          ++count;
          CHECK(e.touches(g.id(rel.name)));
          CHECK(e.touches(g.id(role.player)));
        }
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("path order matches token order") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    auto g = ppq::testing::random_connected_graph(rng, 3 + rng() % 6, rng() % 6);
    std::vector<Path> paths;
    for (int k = 0; k < 12; ++k) {
      Path p(node_id(rng() % g.node_count()));
      for (int step = 0; step < 5; ++step) {
        std::vector<EdgeIndex> options;
        for (EdgeIndex e : g.incident(p.end())) {
          if (!p.contains(g.edge(e).other(p.end()))) options.push_back(e);
        }
        if (options.empty()) break;
        p = p.extended(g, options[rng() % options.size()]);
      }
      paths.push_back(p);
    }
    for (const auto& p : paths) {
      for (const auto& q : paths) {
        CHECK((p <=> q) == (p.tokens(g) <=> q.tokens(g)));
      }
    }
  }
}

TEST_CASE("adjacency listing") {
  auto g = derive_graph(example_schema());
  auto listing = g.adjacency_listing();
  CHECK(listing.find("D: SPEC->B") != std::string::npos);
}
