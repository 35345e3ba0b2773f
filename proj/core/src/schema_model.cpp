#include "rdbnorm/schema_model.hpp"

#include <algorithm>
#include <set>

#include "rdbnorm/error.hpp"

namespace rdbnorm {

EntryClass entry_class(bool is_key, bool is_det) noexcept {
  if (is_key) return EntryClass::Key;
  return is_det ? EntryClass::Determiner : EntryClass::Plain;
}

bool is_valid_identifier(std::string_view name, std::size_t max_len) noexcept {
  if (name.empty() || name.size() > max_len) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

AttributeNode create_node(std::string_view name, AttributeKind kind, bool is_key, bool is_det,
                          NodeId id, const Limits& limits) {
  if (!is_valid_identifier(name, limits.max_name_len)) {
    throw Error(ErrorCode::InvalidName,
                "'" + std::string(name) + "' is not an identifier of at most " +
                    std::to_string(limits.max_name_len) + " characters");
  }
  AttributeNode node;
  node.name = std::string(name);
  node.kind = kind;
  node.is_determiner = is_det;
  node.id = id;
  node.is_key = is_key;
  return node;
}

SchemaList::SchemaList(std::string relation_name, Limits limits)
    : relation_name_(std::move(relation_name)), limits_(limits) {}

NodeId SchemaList::add_attribute(std::string_view name, AttributeKind kind, bool is_key,
                                 bool is_det) {
  if (by_name_.contains(std::string(name))) {
    throw Error(ErrorCode::DuplicateAttribute,
                "attribute '" + std::string(name) + "' already exists in " + relation_name_);
  }
  if (nodes_.size() >= limits_.max_attributes) {
    throw Error(ErrorCode::CapacityExceeded,
                relation_name_ + " already holds " + std::to_string(limits_.max_attributes) +
                    " attributes");
  }
  const EntryClass cls = entry_class(is_key, is_det);
  if (!nodes_.empty() && cls < tail_class_) {
    throw Error(ErrorCode::EntryOrderViolation,
                "attribute '" + std::string(name) +
                    "' must be entered before all non-key attributes"
                    " (order: keys, non-key determiners, the rest)");
  }

  AttributeNode node = create_node(name, kind, is_key, is_det, NodeId{counter_}, limits_);
  by_name_.emplace(node.name, nodes_.size());
  nodes_.push_back(std::move(node));
  tail_class_ = std::max(tail_class_, cls);
  return NodeId{counter_++};
}

AttributeNode& SchemaList::node_for(std::string_view name) {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) {
    throw Error(ErrorCode::UnknownAttribute,
                "'" + std::string(name) + "' is not an attribute of " + relation_name_);
  }
  return nodes_[it->second];
}

void SchemaList::add_fd(const FunctionalDependency& fd) {
  AttributeNode& dependent = node_for(fd.rhs);
  DeterminerIds ids;
  ids.reserve(fd.lhs.size());
  for (const auto& name : fd.lhs) ids.push_back(node_for(name).id);

  if (fd.lhs.empty() || fd.lhs.contains(fd.rhs)) {
    throw Error(ErrorCode::InvalidDependency, "'" + to_string(fd) + "' is trivial or empty");
  }
  if (fd.lhs.size() > limits_.max_lhs) {
    throw Error(ErrorCode::LhsTooLarge, "'" + to_string(fd) + "' has more than " +
                                            std::to_string(limits_.max_lhs) +
                                            " attributes on its left-hand side");
  }
  std::sort(ids.begin(), ids.end());

  auto& slots = dependent.determiner_slots;
  if (std::find(slots.begin(), slots.end(), ids) != slots.end()) return;
  if (slots.size() >= limits_.max_determiners) {
    throw Error(ErrorCode::DeterminerSlotsExhausted,
                "'" + dependent.name + "' already has " +
                    std::to_string(limits_.max_determiners) + " determiners; cannot add '" +
                    to_string(fd) + "'");
  }
  slots.push_back(ids);
  for (const auto& name : fd.lhs) node_for(name).is_determiner = true;
}

const AttributeNode* SchemaList::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? nullptr : &nodes_[it->second];
}

std::size_t SchemaList::position_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const AttributeNode& n, NodeId v) { return n.id < v; });
  if (it == nodes_.end() || it->id != id) return nodes_.size();
  return static_cast<std::size_t>(it - nodes_.begin());
}

const AttributeNode* SchemaList::find(NodeId id) const {
  const std::size_t pos = position_of(id);
  return pos == nodes_.size() ? nullptr : &nodes_[pos];
}

std::vector<std::string> SchemaList::names_of(const DeterminerIds& ids) const {
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (NodeId id : ids) {
    if (const auto* node = find(id)) names.push_back(node->name);
  }
  return names;
}

std::vector<FunctionalDependency> SchemaList::dependencies() const {
  std::vector<FunctionalDependency> out;
  for (const auto& node : nodes_) {
    for (const auto& slot : node.determiner_slots) {
      FunctionalDependency fd;
      for (auto& name : names_of(slot)) fd.lhs.insert(std::move(name));
      fd.rhs = node.name;
      out.push_back(std::move(fd));
    }
  }
  return out;
}

std::vector<std::string> SchemaList::invariant_violations() const {
  std::vector<std::string> problems;
  std::set<NodeId> referenced;
  EntryClass seen = EntryClass::Key;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    if (i > 0 && !(nodes_[i - 1].id < node.id)) {
      problems.push_back("node ids not strictly increasing at '" + node.name + "'");
    }
    const EntryClass cls = entry_class(node.is_key, node.is_determiner);
    if (cls < seen) problems.push_back("entry order broken at '" + node.name + "'");
    seen = std::max(seen, cls);

    if (node.determiner_slots.size() > limits_.max_determiners) {
      problems.push_back("'" + node.name + "' exceeds the determiner slot limit");
    }
    for (std::size_t s = 0; s < node.determiner_slots.size(); ++s) {
      const auto& slot = node.determiner_slots[s];
      if (slot.empty()) problems.push_back("'" + node.name + "' has an empty slot");
      if (slot.size() > limits_.max_lhs) {
        problems.push_back("'" + node.name + "' has an oversized slot");
      }
      for (NodeId id : slot) {
        if (find(id) == nullptr) {
          problems.push_back("'" + node.name + "' references missing node " +
                             std::to_string(id.value));
        }
        referenced.insert(id);
      }
      for (std::size_t t = s + 1; t < node.determiner_slots.size(); ++t) {
        if (node.determiner_slots[t] == slot) {
          problems.push_back("'" + node.name + "' has duplicate slots");
        }
      }
    }
  }
  for (const auto& node : nodes_) {
    if (node.is_determiner != referenced.contains(node.id)) {
      problems.push_back("determiner flag of '" + node.name + "' disagrees with the slots");
    }
  }
  return problems;
}

}  // namespace rdbnorm
