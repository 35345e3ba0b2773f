#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rdbnorm/dependency.hpp"

namespace rdbnorm {

enum class AttributeKind { Atomic, Multivalued };

struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(NodeId, NodeId) = default;
};

/// Sorted, duplicate-free set of node ids forming one determiner.
using DeterminerIds = std::vector<NodeId>;

struct Limits {
  std::size_t max_determiners = 4;
  std::size_t max_lhs = 4;
  std::size_t max_name_len = 100;
  std::size_t max_attributes = 9000;
};

/// One attribute of a relation together with the determiners of that
/// attribute. The successor link of the original node layout is implicit in
/// the position inside SchemaList::nodes().
struct AttributeNode {
  std::string name;
  AttributeKind kind = AttributeKind::Atomic;
  bool is_determiner = false;
  NodeId id;
  std::vector<DeterminerIds> determiner_slots;
  bool is_key = false;
};

/// Position class used by the entry-order rule: keys first, then non-key
/// determiners, then everything else.
enum class EntryClass { Key = 0, Determiner = 1, Plain = 2 };

EntryClass entry_class(bool is_key, bool is_det) noexcept;

/// True when `name` matches [A-Za-z_][A-Za-z0-9_]* and is at most max_len long.
bool is_valid_identifier(std::string_view name, std::size_t max_len) noexcept;

AttributeNode create_node(std::string_view name, AttributeKind kind, bool is_key, bool is_det,
                          NodeId id, const Limits& limits = {});

/// A relation and all of its functional dependencies held in one ordered
/// node sequence. Each dependency lives in a determiner slot of its
/// dependent's node, expressed as the node ids of its left-hand side.
class SchemaList {
 public:
  explicit SchemaList(std::string relation_name, Limits limits = {});

  /// Appends a node at the tail and returns its id. Ids start at 1 and grow by
  /// one per accepted attribute.
  NodeId add_attribute(std::string_view name, AttributeKind kind, bool is_key, bool is_det);

  /// Installs `fd` into the first free determiner slot of its dependent.
  /// Re-adding an identical determiner is a no-op.
  void add_fd(const FunctionalDependency& fd);

  [[nodiscard]] const AttributeNode* find(std::string_view name) const;
  [[nodiscard]] const AttributeNode* find(NodeId id) const;

  [[nodiscard]] std::span<const AttributeNode> nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::string& relation_name() const noexcept { return relation_name_; }
  [[nodiscard]] const Limits& limits() const noexcept { return limits_; }
  [[nodiscard]] NodeId next_id() const noexcept { return NodeId{counter_}; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }

  /// Names of the ids in `ids`, in node order.
  [[nodiscard]] std::vector<std::string> names_of(const DeterminerIds& ids) const;

  /// Rebuilds the singleton-RHS dependencies stored in the slots, in node
  /// order and slot order.
  [[nodiscard]] std::vector<FunctionalDependency> dependencies() const;

  /// Returns a description of every broken structural invariant; empty when
  /// the list is consistent.
  [[nodiscard]] std::vector<std::string> invariant_violations() const;

 private:
  AttributeNode& node_for(std::string_view name);
  std::size_t position_of(NodeId id) const;

  std::string relation_name_;
  Limits limits_;
  std::vector<AttributeNode> nodes_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::uint32_t counter_ = 1;
  EntryClass tail_class_ = EntryClass::Key;
};

}  // namespace rdbnorm
