#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ppq {

using TypeName = std::string;
using RoleName = std::string;

/// Upper bound on a single conceptual weight.
inline constexpr std::uint64_t kMaxCWeight = 1'000'000'000;

struct RoleDef {
  RoleName name;
  TypeName player;

  bool operator==(const RoleDef&) const = default;
};

struct ObjectTypeDef {
  TypeName name;
  std::uint64_t cweight = 1;

  bool operator==(const ObjectTypeDef&) const = default;
};

struct RelationshipTypeDef {
  TypeName name;
  std::uint64_t cweight = 1;
  std::vector<RoleDef> roles;

  bool operator==(const RelationshipTypeDef&) const = default;
};

using TypePair = std::pair<TypeName, TypeName>;

/// An ORM schema universe: object types, relationship types with their
/// roles, subtype (spec) and polymorphism (poly) pairs, and conceptual
/// weights. Immutable once built; every instance satisfies the invariants
/// checked by `Schema::build`.
class Schema {
 public:
  /// Validates and normalises the parts into a schema. Object and
  /// relationship types are sorted by name, roles by name within their
  /// relationship type, and pair lists are sorted and deduplicated.
  /// Throws Error(semantic) naming the violated invariant.
  static Schema build(std::vector<ObjectTypeDef> object_types,
                      std::vector<RelationshipTypeDef> relationship_types,
                      std::vector<TypePair> subtype, std::vector<TypePair> poly);

  const std::vector<ObjectTypeDef>& object_types() const { return object_types_; }
  const std::vector<RelationshipTypeDef>& relationship_types() const {
    return relationship_types_;
  }
  const std::vector<TypePair>& subtype() const { return subtype_; }
  const std::vector<TypePair>& poly() const { return poly_; }

  /// All type names, sorted.
  std::vector<TypeName> types() const;
  std::size_t type_count() const {
    return object_types_.size() + relationship_types_.size();
  }
  std::size_t role_count() const { return role_index_.size(); }

  bool is_type(std::string_view name) const;
  bool is_object_type(std::string_view name) const;
  bool is_relationship_type(std::string_view name) const;

  /// The relationship type owning `role`, if the role exists.
  std::optional<TypeName> rel(std::string_view role) const;
  std::optional<TypeName> player(std::string_view role) const;
  /// Role names of a relationship type; empty for unknown names.
  std::vector<RoleName> roles(std::string_view rel_type) const;
  std::uint64_t cweight(std::string_view type) const;

  friend bool operator==(const Schema& a, const Schema& b) {
    return a.object_types_ == b.object_types_ &&
           a.relationship_types_ == b.relationship_types_ &&
           a.subtype_ == b.subtype_ && a.poly_ == b.poly_;
  }

 private:
  Schema() = default;

  std::vector<ObjectTypeDef> object_types_;
  std::vector<RelationshipTypeDef> relationship_types_;
  std::vector<TypePair> subtype_;
  std::vector<TypePair> poly_;
  // role name -> (relationship type index, role index within it)
  std::map<RoleName, std::pair<std::size_t, std::size_t>, std::less<>> role_index_;
  // type name -> cweight, is-relationship
  std::map<TypeName, std::pair<std::uint64_t, bool>, std::less<>> type_index_;
};

/// Parses the JSON schema document. Throws Error(syntax) with line/column on
/// malformed input and Error(semantic) on invariant violations.
Schema parse_schema(std::string_view source);
Schema load_schema(const std::filesystem::path& path);

/// Canonical JSON rendering; `parse_schema(serialize_schema(s)) == s`.
std::string serialize_schema(const Schema& schema);

/// Hex SHA-256 of the canonical rendering.
std::string schema_hash(const Schema& schema);

/// True iff the derived graph is connected.
bool validate_connected(const Schema& schema);

}  // namespace ppq
