#include "rdbnorm/normalizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rdbnorm/error.hpp"

namespace rdbnorm {

namespace {

void append_unique(std::vector<std::string>& into, const std::string& name) {
  if (std::find(into.begin(), into.end(), name) == into.end()) into.push_back(name);
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& names) {
  for (const auto& name : names) append_unique(into, name);
}

std::string join(const std::vector<std::string>& names, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += sep;
    out += names[i];
  }
  return out;
}

bool contains_all(const TableStructure& table, const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(),
                     [&](const std::string& n) { return table.contains(n); });
}

/// Gives every table a distinct name by suffixing later clashes with _2, _3...
void make_names_unique(std::vector<TableStructure>& tables) {
  std::set<std::string> used;
  for (auto& table : tables) {
    std::string candidate = table.name;
    for (int n = 2; used.contains(candidate); ++n) candidate = table.name + "_" + std::to_string(n);
    table.name = candidate;
    used.insert(candidate);
  }
}

TableStructure main_table(const Classification& c, const std::string& relation) {
  TableStructure t;
  t.name = relation + "_main";
  t.attributes = c.prime_attributes;
  append_unique(t.attributes, c.full);
  t.primary_key = c.prime_attributes;
  return t;
}

TableStructure group_table(const DependencyGroup& g) {
  TableStructure t;
  t.name = join(g.determiner, "_");
  t.attributes = g.determiner;
  append_unique(t.attributes, g.dependents);
  t.primary_key = g.determiner;
  return t;
}

/// True if following foreign keys from `from` reaches `to`.
bool reaches(const std::vector<TableStructure>& tables, std::size_t from, std::size_t to) {
  std::vector<char> seen(tables.size(), 0);
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    if (at == to) return true;
    if (seen[at]) continue;
    seen[at] = 1;
    for (const auto& fk : tables[at].foreign_keys) {
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (tables[i].name == fk.references) stack.push_back(i);
      }
    }
  }
  return false;
}

void add_foreign_key(std::vector<TableStructure>& tables, std::size_t host, std::size_t target) {
  ForeignKey fk{tables[target].primary_key, tables[target].name};
  auto& fks = tables[host].foreign_keys;
  if (std::find(fks.begin(), fks.end(), fk) != fks.end()) return;
  // A reference back along an existing chain would make the DDL unorderable.
  if (reaches(tables, target, host)) return;
  fks.push_back(std::move(fk));
}

}  // namespace

std::vector<std::string> RawSchema::attribute_names() const {
  std::vector<std::string> out;
  out.reserve(attributes.size());
  for (const auto& a : attributes) out.push_back(a.name);
  return out;
}

bool TableStructure::contains(const std::string& attribute) const {
  return std::find(attributes.begin(), attributes.end(), attribute) != attributes.end();
}

RawSchema to_first_normal_form(const RawSchema& raw) {
  std::unordered_map<std::string, std::vector<std::string>> replacement;
  std::unordered_set<std::string> taken;
  for (const auto& a : raw.attributes) taken.insert(a.name);

  RawSchema flat;
  flat.relation_name = raw.relation_name;
  for (const auto& a : raw.attributes) {
    switch (a.shape) {
      case AttributeShape::Atomic:
        replacement[a.name] = {a.name};
        flat.attributes.push_back({a.name, a.is_key, AttributeShape::Atomic, {}});
        break;
      case AttributeShape::Multivalued: {
        const std::string renamed = a.name + "_ID";
        if (taken.contains(renamed)) {
          throw Error(ErrorCode::ComponentCollision,
                      "'" + renamed + "' (from multivalued '" + a.name + "') already exists");
        }
        taken.insert(renamed);
        replacement[a.name] = {renamed};
        flat.attributes.push_back({renamed, a.is_key, AttributeShape::Atomic, {}});
        break;
      }
      case AttributeShape::Composite:
        if (a.components.empty()) {
          throw Error(ErrorCode::InvalidArgument, "composite '" + a.name + "' has no components");
        }
        for (const auto& part : a.components) {
          if (taken.contains(part)) {
            throw Error(ErrorCode::ComponentCollision,
                        "component '" + part + "' of '" + a.name + "' already exists");
          }
          taken.insert(part);
          flat.attributes.push_back({part, a.is_key, AttributeShape::Atomic, {}});
        }
        replacement[a.name] = a.components;
        break;
    }
  }

  auto rewrite = [&](const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& name : names) {
      auto it = replacement.find(name);
      if (it == replacement.end()) {
        append_unique(out, name);
      } else {
        append_unique(out, it->second);
      }
    }
    return out;
  };
  for (const auto& fd : raw.fds) flat.fds.push_back({rewrite(fd.lhs), rewrite(fd.rhs)});
  return flat;
}

FdSet key_dependencies_last(const FdSet& fds, const AttributeSet& key) {
  std::vector<FunctionalDependency> ordered;
  ordered.reserve(fds.size());
  std::copy_if(fds.fds().begin(), fds.fds().end(), std::back_inserter(ordered),
               [&](const FunctionalDependency& fd) { return fd.lhs != key; });
  std::copy_if(fds.fds().begin(), fds.fds().end(), std::back_inserter(ordered),
               [&](const FunctionalDependency& fd) { return fd.lhs == key; });
  return fds.with(std::move(ordered));
}

SchemaList build_schema_list(const std::string& relation_name,
                             const std::vector<RawAttribute>& attributes, const FdSet& cover,
                             const Limits& limits) {
  std::set<std::string> determiners;
  for (const auto& fd : cover.fds()) determiners.insert(fd.lhs.begin(), fd.lhs.end());

  auto kind_of = [](const RawAttribute& a) {
    if (a.shape == AttributeShape::Composite) {
      throw Error(ErrorCode::InvalidArgument,
                  "composite '" + a.name + "' must be flattened before loading");
    }
    return a.shape == AttributeShape::Multivalued ? AttributeKind::Multivalued
                                                  : AttributeKind::Atomic;
  };

  SchemaList list(relation_name, limits);
  for (EntryClass cls : {EntryClass::Key, EntryClass::Determiner, EntryClass::Plain}) {
    for (const auto& a : attributes) {
      const bool is_det = determiners.contains(a.name);
      if (entry_class(a.is_key, is_det) != cls) continue;
      list.add_attribute(a.name, kind_of(a), a.is_key, is_det);
    }
  }
  for (const auto& fd : cover.fds()) list.add_fd(fd);
  return list;
}

AttributeSummary attribute_info(const SchemaList& list) {
  AttributeSummary info;
  for (const auto& node : list.nodes()) {
    if (node.is_key) {
      info.prime_attributes.push_back(node.name);
      info.prime_key_ids.push_back(node.id);
    } else {
      info.all_attributes.push_back(node.name);
    }
  }
  if (info.prime_attributes.empty()) {
    throw Error(ErrorCode::NoKeyDeclared, list.relation_name() + " declares no key attribute");
  }
  return info;
}

Classification classify(const SchemaList& list) {
  AttributeSummary info = attribute_info(list);
  Classification c;
  c.prime_attributes = info.prime_attributes;
  c.prime_key_ids = info.prime_key_ids;
  c.all_attributes = info.all_attributes;
  c.full = info.prime_attributes;

  std::map<DeterminerIds, std::size_t> partial_index;
  std::map<DeterminerIds, std::size_t> transitive_index;
  auto file_under = [&](std::vector<DependencyGroup>& groups,
                        std::map<DeterminerIds, std::size_t>& index, const DeterminerIds& slot,
                        const std::string& dependent) {
    auto [it, fresh] = index.try_emplace(slot, groups.size());
    if (fresh) groups.push_back({list.names_of(slot), {}});
    append_unique(groups[it->second].dependents, dependent);
  };

  const auto& key = c.prime_key_ids;
  for (const auto& node : list.nodes()) {
    if (node.is_key) continue;
    if (node.determiner_slots.empty()) {
      append_unique(c.full, node.name);
      continue;
    }
    for (const auto& slot : node.determiner_slots) {
      if (slot == key) {
        append_unique(c.full, node.name);
      } else if (std::includes(key.begin(), key.end(), slot.begin(), slot.end())) {
        file_under(c.partial, partial_index, slot, node.name);
      } else {
        file_under(c.transitive, transitive_index, slot, node.name);
      }
    }
  }
  return c;
}

std::vector<TableStructure> decompose_2nf(const Classification& c, const std::string& relation) {
  std::vector<TableStructure> tables{main_table(c, relation)};
  for (const auto& g : c.partial) tables.push_back(group_table(g));

  // Transitive groups join the earliest table that holds their determiner;
  // attaching one group can make another attachable, so iterate to a fixpoint.
  std::vector<const DependencyGroup*> pending;
  for (const auto& g : c.transitive) pending.push_back(&g);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = pending.begin(); it != pending.end();) {
      auto host = std::find_if(tables.begin(), tables.end(), [&](const TableStructure& t) {
        return contains_all(t, (*it)->determiner);
      });
      if (host == tables.end()) {
        ++it;
        continue;
      }
      append_unique(host->attributes, (*it)->dependents);
      it = pending.erase(it);
      changed = true;
    }
  }
  for (const auto* g : pending) {
    append_unique(tables.front().attributes, g->determiner);
    append_unique(tables.front().attributes, g->dependents);
  }

  make_names_unique(tables);
  for (std::size_t i = 1; i <= c.partial.size(); ++i) add_foreign_key(tables, 0, i);
  return tables;
}

std::vector<TableStructure> decompose_3nf(const Classification& c, const std::string& relation) {
  std::vector<TableStructure> tables{main_table(c, relation)};
  for (const auto& g : c.partial) tables.push_back(group_table(g));
  const std::size_t first_transitive = tables.size();
  for (const auto& g : c.transitive) tables.push_back(group_table(g));
  make_names_unique(tables);

  for (std::size_t i = 1; i < first_transitive; ++i) add_foreign_key(tables, 0, i);

  for (std::size_t i = first_transitive; i < tables.size(); ++i) {
    const auto& determiner = tables[i].primary_key;
    std::size_t host = tables.size();
    for (std::size_t j = 0; j < tables.size(); ++j) {
      if (j != i && contains_all(tables[j], determiner)) {
        host = j;
        break;
      }
    }
    if (host == tables.size()) {
      append_unique(tables.front().attributes, determiner);
      host = 0;
    }
    add_foreign_key(tables, host, i);
  }
  return tables;
}

NormalizationResult normalize_detailed(const RawSchema& raw, NormalForm nf, const Limits& limits) {
  NormalizationResult r;
  r.flat = to_first_normal_form(raw);

  AttributeSet key;
  for (const auto& a : r.flat.attributes) {
    if (a.is_key) key.insert(a.name);
  }
  if (key.empty()) {
    throw Error(ErrorCode::NoKeyDeclared, raw.relation_name + " declares no key attribute");
  }

  r.dependencies = split_rhs(r.flat.attribute_names(), r.flat.fds);
  r.cover = minimal_cover(key_dependencies_last(r.dependencies, key));
  const SchemaList list = build_schema_list(r.flat.relation_name, r.flat.attributes, r.cover, limits);
  r.classification = classify(list);
  r.tables = nf == NormalForm::Third ? decompose_3nf(r.classification, r.flat.relation_name)
                                     : decompose_2nf(r.classification, r.flat.relation_name);
  return r;
}

std::vector<TableStructure> normalize(const RawSchema& raw, NormalForm nf, const Limits& limits) {
  return normalize_detailed(raw, nf, limits).tables;
}

}  // namespace rdbnorm
