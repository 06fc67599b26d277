#include <map>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppq/verbalizer.hpp"

using namespace ppq;

namespace {

std::string render(const Graph& g, const Schema& s, std::initializer_list<std::string_view> tokens) {
  return path_expr(Path::from_tokens(g, tokens), g, s).render();
}

}  // namespace

TEST_CASE("worked example expressions") {
  auto s = ppq::testing::example_schema();
  auto g = derive_graph(s);
  CHECK(render(g, s, {"A"}) == "A");
  CHECK(render(g, s, {"A", "r", "f", "s", "B"}) == "A . r . f . s~ . B");
  CHECK(render(g, s, {"D", "SPEC", "B", "s", "f", "r", "A", "POLY", "C"}) == "D . B . s . f . r~ . A . C");
  CHECK(render(g, s, {"C", "t", "g", "u", "A"}) == "C . t . g . u~ . A");
}

TEST_CASE("tokens") {
  auto s = ppq::testing::example_schema();
  auto g = derive_graph(s);
  auto e = path_expr(Path::from_tokens(g, {"B", "s", "f", "r", "A"}), g, s);
  using T = PathExpression::Token;
  using C = PathExpression::Connector;
  std::vector<T> expected{
      {T::Kind::type, C::join, "B"}, {T::Kind::connector, C::forward, "s"}, {T::Kind::type, C::join, "f"},
      {T::Kind::connector, C::reversed, "r"}, {T::Kind::type, C::join, "A"},
  };
  CHECK(e.tokens == expected);
  CHECK(connector(EdgeLabel::spec(), "B", s) == C::join);
  CHECK(connector(EdgeLabel::poly(), "g", s) == C::join);
  CHECK(connector(EdgeLabel::of_role("u"), "g", s) == C::forward);
  CHECK(connector(EdgeLabel::of_role("u"), "A", s) == C::reversed);
}

TEST_CASE("spec and poly collapse to the same expression") {
  auto s = parse_schema(R"({"object_types": [{"name": "A"}, {"name": "C"}],
    "subtype": [["A", "C"]], "poly": [["A", "C"]]})");
  auto g = derive_graph(s);
  auto spec = Path::from_tokens(g, {"A", "SPEC", "C"});
  auto poly = Path::from_tokens(g, {"A", "POLY", "C"});
  CHECK(spec != poly);
  CHECK(path_expr(spec, g, s).render() == "A . C");
  CHECK(path_expr(poly, g, s).render() == "A . C");
}

TEST_CASE("distinct paths render distinctly apart from structural labels") {
  auto s = ppq::testing::example_schema();
  auto g = derive_graph(s);
  std::map<std::string, std::vector<std::string>> seen;
  for (std::size_t a = 0; a < g.node_count(); ++a) {
    for (std::size_t b = 0; b < g.node_count(); ++b) {
      if (a == b) continue;
      for (const auto& tokens : ppq::testing::all_simple_paths(g, node_id(a), node_id(b))) {
        auto text = path_expr(Path::from_tokens(g, tokens), g, s).render();
        auto key = tokens;
        for (auto& t : key) {
          if (t == "SPEC" || t == "POLY") t = "*";
        }
        auto [it, fresh] = seen.emplace(text, key);
        if (!fresh) CHECK(it->second == key);
      }
    }
  }
  CHECK(seen.size() > 20);
}
