#pragma once

#include <span>
#include <string>
#include <vector>

#include "rdbnorm/normalizer.hpp"

namespace rdbnorm {

struct DdlScript {
  std::vector<std::string> statements;

  /// Statements joined as "<statement>\n\n".
  [[nodiscard]] std::string text() const;
};

/// One CREATE TABLE per table with VARCHAR(255) columns. Referenced tables
/// come before the tables that reference them; otherwise input order holds.
DdlScript emit_ddl(std::span<const TableStructure> tables);

}  // namespace rdbnorm
