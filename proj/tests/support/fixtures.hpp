#pragma once

#include <string>

#include "ppq/schema.hpp"

namespace ppq::testing {

inline const char* kExampleSchema = R"({
  "object_types": [{"name": "A"}, {"name": "B"}, {"name": "C"}, {"name": "D"}],
  "relationship_types": [
    {"name": "f", "roles": [{"name": "r", "player": "A"}, {"name": "s", "player": "B"}]},
    {"name": "g", "roles": [{"name": "t", "player": "C"}, {"name": "u", "player": "A"}]}
  ],
  "subtype": [["D", "B"]],
  "poly": [["A", "C"], ["A", "g"]]
})";

inline Schema example_schema() { return parse_schema(kExampleSchema); }

inline std::string data_path(const std::string& name) { return std::string(PPQ_TEST_DATA_DIR) + "/" + name; }

}  // namespace ppq::testing
