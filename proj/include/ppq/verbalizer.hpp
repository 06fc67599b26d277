#pragma once

#include <string>
#include <vector>

#include "ppq/graph.hpp"

namespace ppq {

class Schema;

/// Linear path expression: type names joined by connectors.
struct PathExpression {
  enum class Connector { join, forward, reversed };

  struct Token {
    enum class Kind { type, connector } kind;
    Connector connector = Connector::join;  // meaningful for connectors
    std::string text;                       // type name or role name

    bool operator==(const Token&) const = default;
  };

  std::vector<Token> tokens;

  /// Tokens separated by " . ", reversed roles marked with a trailing "~",
  /// bare joins contributing no token: "A . r . f . s~ . B".
  std::string render() const;

  bool operator==(const PathExpression&) const = default;
};

/// Connector for stepping along label l into node x: a bare join for SPEC
/// and POLY, the role itself when x is the relationship type owning it, and
/// the reversed role otherwise.
PathExpression::Connector connector(const EdgeLabel& label, const std::string& into, const Schema& schema);

PathExpression path_expr(const Path& p, const Graph& graph, const Schema& schema);

}  // namespace ppq
