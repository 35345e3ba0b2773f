#include "rdbnorm/ddl.hpp"

#include <sstream>
#include <unordered_map>

#include "rdbnorm/error.hpp"

namespace rdbnorm {

namespace {

std::string column_list(const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ", ";
    out += columns[i];
  }
  return out;
}

std::string render(const TableStructure& table,
                   const std::unordered_map<std::string, std::size_t>& index,
                   std::span<const TableStructure> tables) {
  std::ostringstream os;
  os << "CREATE TABLE " << table.name << " (\n";
  std::vector<std::string> lines;
  for (const auto& column : table.attributes) lines.push_back(column + " VARCHAR(255)");
  if (!table.primary_key.empty()) {
    lines.push_back("PRIMARY KEY (" + column_list(table.primary_key) + ")");
  }
  for (const auto& fk : table.foreign_keys) {
    const auto& target = tables[index.at(fk.references)];
    lines.push_back("FOREIGN KEY (" + column_list(fk.columns) + ") REFERENCES " + target.name +
                    " (" + column_list(target.primary_key) + ")");
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    os << "    " << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
  }
  os << ");";
  return os.str();
}

}  // namespace

std::string DdlScript::text() const {
  std::string out;
  for (const auto& s : statements) {
    out += s;
    out += "\n\n";
  }
  return out;
}

DdlScript emit_ddl(std::span<const TableStructure> tables) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < tables.size(); ++i) index.emplace(tables[i].name, i);

  std::vector<std::size_t> waiting_on(tables.size(), 0);
  std::vector<std::vector<std::size_t>> referenced_by(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (const auto& fk : tables[i].foreign_keys) {
      auto it = index.find(fk.references);
      if (it == index.end()) {
        throw Error(ErrorCode::DanglingForeignKey,
                    tables[i].name + " references unknown table " + fk.references);
      }
      if (fk.columns.size() != tables[it->second].primary_key.size()) {
        throw Error(ErrorCode::DanglingForeignKey,
                    tables[i].name + " foreign key does not match the key of " + fk.references);
      }
      if (it->second == i) continue;
      ++waiting_on[i];
      referenced_by[it->second].push_back(i);
    }
  }

  // Kahn's algorithm, always taking the earliest ready table.
  DdlScript script;
  std::vector<char> done(tables.size(), 0);
  for (std::size_t emitted = 0; emitted < tables.size(); ++emitted) {
    std::size_t next = tables.size();
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (!done[i] && waiting_on[i] == 0) {
        next = i;
        break;
      }
    }
    if (next == tables.size()) {
      throw Error(ErrorCode::CyclicReference, "foreign keys form a cycle");
    }
    done[next] = 1;
    for (std::size_t r : referenced_by[next]) --waiting_on[r];
    script.statements.push_back(render(tables[next], index, tables));
  }
  return script;
}

}  // namespace rdbnorm
