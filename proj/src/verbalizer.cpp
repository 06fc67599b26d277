#include "ppq/verbalizer.hpp"

#include "ppq/schema.hpp"

namespace ppq {

PathExpression::Connector connector(const EdgeLabel& label, const std::string& into, const Schema& schema) {
  if (label.structural()) return PathExpression::Connector::join;
  if (schema.is_relationship_type(into) && schema.rel(label.role) == into) {
    return PathExpression::Connector::forward;
  }
  return PathExpression::Connector::reversed;
}

PathExpression path_expr(const Path& p, const Graph& graph, const Schema& schema) {
  using Token = PathExpression::Token;
  PathExpression out;
  const auto nodes = p.nodes();
  const auto edges = p.edges();
  out.tokens.push_back({Token::Kind::type, PathExpression::Connector::join, graph.name(nodes[0])});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& label = graph.edge(edges[i]).label;
    const auto& into = graph.name(nodes[i + 1]);
    const auto c = connector(label, into, schema);
    out.tokens.push_back({Token::Kind::connector, c, label.structural() ? std::string() : label.role});
    out.tokens.push_back({Token::Kind::type, PathExpression::Connector::join, into});
  }
  return out;
}

std::string PathExpression::render() const {
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += " . ";
    out += piece;
  };
  for (const auto& token : tokens) {
    if (token.kind == Token::Kind::type) {
      append(token.text);
    } else if (token.connector == Connector::forward) {
      append(token.text);
    } else if (token.connector == Connector::reversed) {
      append(token.text + "~");
    }
  }
  return out;
}

}  // namespace ppq
