#pragma once

#include <string>
#include <vector>

#include "rdbnorm/dependency.hpp"
#include "rdbnorm/fd_engine.hpp"
#include "rdbnorm/schema_model.hpp"

namespace rdbnorm {

enum class AttributeShape { Atomic, Multivalued, Composite };

struct RawAttribute {
  std::string name;
  bool is_key = false;
  AttributeShape shape = AttributeShape::Atomic;
  std::vector<std::string> components;  // only for Composite

  friend bool operator==(const RawAttribute&, const RawAttribute&) = default;
};

/// A relation as a designer declares it: possibly non-1NF attributes and
/// dependencies with several right-hand-side attributes.
struct RawSchema {
  std::string relation_name;
  std::vector<RawAttribute> attributes;
  std::vector<RawDependency> fds;

  [[nodiscard]] std::vector<std::string> attribute_names() const;

  friend bool operator==(const RawSchema&, const RawSchema&) = default;
};

struct DependencyGroup {
  std::vector<std::string> determiner;
  std::vector<std::string> dependents;

  friend bool operator==(const DependencyGroup&, const DependencyGroup&) = default;
};

/// Output of the classification pass over a SchemaList.
///   full        prime attributes followed by every fully dependent attribute
///   partial     groups whose determiner is a proper subset of the key
///   transitive  groups whose determiner is not a subset of the key
struct Classification {
  std::vector<std::string> full;
  std::vector<DependencyGroup> partial;
  std::vector<DependencyGroup> transitive;
  std::vector<std::string> prime_attributes;
  DeterminerIds prime_key_ids;
  std::vector<std::string> all_attributes;  // non-key attributes, list order

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct ForeignKey {
  std::vector<std::string> columns;
  std::string references;

  friend bool operator==(const ForeignKey&, const ForeignKey&) = default;
};

struct TableStructure {
  std::string name;
  std::vector<std::string> attributes;
  std::vector<std::string> primary_key;
  std::vector<ForeignKey> foreign_keys;

  [[nodiscard]] bool contains(const std::string& attribute) const;

  friend bool operator==(const TableStructure&, const TableStructure&) = default;
};

enum class NormalForm { Second = 2, Third = 3 };

struct AttributeSummary {
  std::vector<std::string> all_attributes;  // non-key, list order
  std::vector<std::string> prime_attributes;
  DeterminerIds prime_key_ids;
};

/// Replaces composite attributes by their components and renames
/// multivalued attributes to "<name>_ID", rewriting dependencies to match.
RawSchema to_first_normal_form(const RawSchema& raw);

/// Builds the single-list representation for `attributes` and installs the
/// dependencies of `cover`. Attributes are entered keys first, then non-key
/// determiners of the cover, then the rest; each class keeps input order.
SchemaList build_schema_list(const std::string& relation_name,
                             const std::vector<RawAttribute>& attributes, const FdSet& cover,
                             const Limits& limits = {});

AttributeSummary attribute_info(const SchemaList& list);

Classification classify(const SchemaList& list);

std::vector<TableStructure> decompose_2nf(const Classification& c, const std::string& relation);

std::vector<TableStructure> decompose_3nf(const Classification& c, const std::string& relation);

/// Everything the pipeline derived, for callers that want to verify or
/// inspect intermediate stages.
struct NormalizationResult {
  RawSchema flat;
  FdSet dependencies;  // split, before the cover
  FdSet cover;
  Classification classification;
  std::vector<TableStructure> tables;
};

/// 1NF, split, minimal cover, single-list build, classification, then 2NF or
/// 3NF decomposition.
NormalizationResult normalize_detailed(const RawSchema& raw, NormalForm nf,
                                       const Limits& limits = {});

std::vector<TableStructure> normalize(const RawSchema& raw, NormalForm nf,
                                      const Limits& limits = {});

/// Moves FDs whose left-hand side is exactly `key` behind all others, keeping
/// relative order within both parts. Applied before the cover so that
/// dependencies on the whole key survive redundancy elimination.
FdSet key_dependencies_last(const FdSet& fds, const AttributeSet& key);

}  // namespace rdbnorm
