#include "ppq/schema.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ppq/error.hpp"
#include "ppq/graph.hpp"

namespace ppq {
namespace {

using nlohmann::json;

[[noreturn]] void semantic(const std::string& message) {
  throw Error(ErrorCode::semantic, message);
}

bool is_identifier_char(unsigned char c, bool first) {
  if (c >= 0x80) return true;  // UTF-8 continuation or lead byte
  if (c == '_' || std::isalpha(c)) return true;
  return !first && (std::isdigit(c) || c == '-');
}

void check_identifier(std::string_view name, std::string_view what) {
  bool ok = !name.empty();
  for (std::size_t i = 0; ok && i < name.size(); ++i) {
    ok = is_identifier_char(static_cast<unsigned char>(name[i]), i == 0);
  }
  if (!ok) semantic(std::string(what) + " name '" + std::string(name) + "' is not an identifier");
}

std::string position_of(std::string_view source, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& require(const json& object, const char* key, std::string_view context) {
  auto it = object.find(key);
  if (it == object.end()) semantic(std::string(context) + " is missing '" + key + "'");
  return *it;
}

std::string as_string(const json& value, std::string_view context) {
  if (!value.is_string()) semantic(std::string(context) + " must be a string");
  return value.get<std::string>();
}

std::uint64_t as_cweight(const json& object, std::string_view context) {
  auto it = object.find("cweight");
  if (it == object.end()) return 1;
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
    semantic(std::string(context) + ": cweight must be a natural number");
  }
  auto w = it->get<std::uint64_t>();
  if (w > kMaxCWeight) semantic(std::string(context) + ": cweight exceeds " + std::to_string(kMaxCWeight));
  return w;
}

std::vector<TypePair> parse_pairs(const json& doc, const char* key) {
  std::vector<TypePair> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) semantic(std::string(key) + " must be a list of pairs");
  for (const auto& pair : *it) {
    if (!pair.is_array() || pair.size() != 2) {
      semantic(std::string(key) + " entries must be [a, b] pairs");
    }
    out.emplace_back(as_string(pair[0], key), as_string(pair[1], key));
  }
  return out;
}

json to_json(const Schema& s) {
  json doc = json::object();
  json objects = json::array();
  for (const auto& o : s.object_types()) objects.push_back({{"name", o.name}, {"cweight", o.cweight}});
  json rels = json::array();
  for (const auto& r : s.relationship_types()) {
    json roles = json::array();
    for (const auto& role : r.roles) roles.push_back({{"name", role.name}, {"player", role.player}});
    rels.push_back({{"name", r.name}, {"cweight", r.cweight}, {"roles", roles}});
  }
  auto pairs = [](const std::vector<TypePair>& v) {
    json out = json::array();
    for (const auto& [a, b] : v) out.push_back({a, b});
    return out;
  };
  doc["object_types"] = objects;
  doc["relationship_types"] = rels;
  doc["subtype"] = pairs(s.subtype());
  doc["poly"] = pairs(s.poly());
  return doc;
}

}  // namespace

Schema Schema::build(std::vector<ObjectTypeDef> object_types,
                     std::vector<RelationshipTypeDef> relationship_types,
                     std::vector<TypePair> subtype, std::vector<TypePair> poly) {
  Schema s;
  for (const auto& o : object_types) {
    check_identifier(o.name, "object type");
    if (o.cweight > kMaxCWeight) semantic("cweight of '" + o.name + "' is out of range");
    if (!s.type_index_.emplace(o.name, std::pair{o.cweight, false}).second) {
      semantic("duplicate type name '" + o.name + "'");
    }
  }
  for (const auto& r : relationship_types) {
    check_identifier(r.name, "relationship type");
    if (r.cweight > kMaxCWeight) semantic("cweight of '" + r.name + "' is out of range");
    if (!s.type_index_.emplace(r.name, std::pair{r.cweight, true}).second) {
      semantic("duplicate type name '" + r.name + "'");
    }
    if (r.roles.empty()) semantic("relationship type '" + r.name + "' has no roles");
  }

  std::sort(object_types.begin(), object_types.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });
  std::sort(relationship_types.begin(), relationship_types.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });

  std::set<std::string, std::less<>> seen_roles;
  for (auto& r : relationship_types) {
    for (const auto& role : r.roles) {
      check_identifier(role.name, "role");
      if (role.name == kSpecLabel || role.name == kPolyLabel) {
        semantic("role name '" + role.name + "' is reserved");
      }
      if (!seen_roles.insert(role.name).second) {
        semantic("role partition violated: role '" + role.name + "' appears more than once");
      }
      if (!s.type_index_.contains(role.player)) {
        semantic("role '" + role.name + "' has unknown player '" + role.player + "'");
      }
    }
    std::sort(r.roles.begin(), r.roles.end(),
              [](const auto& x, const auto& y) { return x.name < y.name; });
  }
  for (std::size_t i = 0; i < relationship_types.size(); ++i) {
    for (std::size_t j = 0; j < relationship_types[i].roles.size(); ++j) {
      s.role_index_.emplace(relationship_types[i].roles[j].name, std::pair{i, j});
    }
  }

  auto is_object = [&](const std::string& name) {
    auto it = s.type_index_.find(name);
    return it != s.type_index_.end() && !it->second.second;
  };
  for (const auto& [sub, super] : subtype) {
    if (!is_object(sub) || !is_object(super)) {
      semantic("subtype pair [" + sub + ", " + super + "] must relate two object types");
    }
  }
  for (const auto& [a, b] : poly) {
    if (!is_object(a)) semantic("poly pair [" + a + ", " + b + "] must start at an object type");
    if (!s.type_index_.contains(b)) semantic("poly pair [" + a + ", " + b + "] names unknown type");
  }
  std::sort(subtype.begin(), subtype.end());
  subtype.erase(std::unique(subtype.begin(), subtype.end()), subtype.end());
  std::sort(poly.begin(), poly.end());
  poly.erase(std::unique(poly.begin(), poly.end()), poly.end());

  s.object_types_ = std::move(object_types);
  s.relationship_types_ = std::move(relationship_types);
  s.subtype_ = std::move(subtype);
  s.poly_ = std::move(poly);
  return s;
}

std::vector<TypeName> Schema::types() const {
  std::vector<TypeName> out;
  out.reserve(type_index_.size());
  for (const auto& [name, _] : type_index_) out.push_back(name);
  return out;
}

bool Schema::is_type(std::string_view name) const { return type_index_.contains(name); }

bool Schema::is_object_type(std::string_view name) const {
  auto it = type_index_.find(name);
  return it != type_index_.end() && !it->second.second;
}

bool Schema::is_relationship_type(std::string_view name) const {
  auto it = type_index_.find(name);
  return it != type_index_.end() && it->second.second;
}

std::optional<TypeName> Schema::rel(std::string_view role) const {
  auto it = role_index_.find(role);
  if (it == role_index_.end()) return std::nullopt;
  return relationship_types_[it->second.first].name;
}

std::optional<TypeName> Schema::player(std::string_view role) const {
  auto it = role_index_.find(role);
  if (it == role_index_.end()) return std::nullopt;
  return relationship_types_[it->second.first].roles[it->second.second].player;
}

std::vector<RoleName> Schema::roles(std::string_view rel_type) const {
  std::vector<RoleName> out;
  for (const auto& r : relationship_types_) {
    if (r.name != rel_type) continue;
    for (const auto& role : r.roles) out.push_back(role.name);
  }
  return out;
}

std::uint64_t Schema::cweight(std::string_view type) const {
  auto it = type_index_.find(type);
  if (it == type_index_.end()) {
    throw Error(ErrorCode::invalid_argument, "unknown type '" + std::string(type) + "'");
  }
  return it->second.first;
}

Schema parse_schema(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::syntax,
                "syntax error at " + position_of(source, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::syntax, "schema document must be a JSON object");

  std::vector<ObjectTypeDef> objects;
  if (auto it = doc.find("object_types"); it != doc.end()) {
    if (!it->is_array()) semantic("object_types must be a list");
    for (const auto& o : *it) {
      if (!o.is_object()) semantic("object_types entries must be objects");
      objects.push_back({as_string(require(o, "name", "object type"), "object type name"),
                         as_cweight(o, "object type")});
    }
  }
  std::vector<RelationshipTypeDef> rels;
  if (auto it = doc.find("relationship_types"); it != doc.end()) {
    if (!it->is_array()) semantic("relationship_types must be a list");
    for (const auto& r : *it) {
      if (!r.is_object()) semantic("relationship_types entries must be objects");
      RelationshipTypeDef def;
      def.name = as_string(require(r, "name", "relationship type"), "relationship type name");
      def.cweight = as_cweight(r, def.name);
      const auto& roles = require(r, "roles", "relationship type '" + def.name + "'");
      if (!roles.is_array()) semantic("roles of '" + def.name + "' must be a list");
      for (const auto& role : roles) {
        if (!role.is_object()) semantic("roles of '" + def.name + "' must be objects");
        auto name = as_string(require(role, "name", "role"), "role name");
        auto player_it = role.find("player");
        if (player_it == role.end()) semantic("role '" + name + "' has no player");
        def.roles.push_back({name, as_string(*player_it, "role player")});
      }
      rels.push_back(std::move(def));
    }
  }
  return Schema::build(std::move(objects), std::move(rels), parse_pairs(doc, "subtype"),
                       parse_pairs(doc, "poly"));
}

Schema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read schema file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_schema(buffer.str());
}

std::string serialize_schema(const Schema& schema) { return to_json(schema).dump(2) + "\n"; }

std::string schema_hash(const Schema& schema) {
  const std::string canonical = to_json(schema).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

bool validate_connected(const Schema& schema) { return derive_graph(schema).connected(); }

}  // namespace ppq
