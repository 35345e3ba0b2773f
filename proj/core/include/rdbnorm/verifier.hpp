#pragma once

#include <span>
#include <string>
#include <vector>

#include "rdbnorm/fd_engine.hpp"
#include "rdbnorm/normalizer.hpp"

namespace rdbnorm {

enum class ViolationKind { Partial, Transitive };

struct Violation {
  std::string table;
  ViolationKind kind = ViolationKind::Partial;
  std::string dependent;
  AttributeSet determiner;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class CheckMode { SecondNormalForm, ThirdNormalForm };

/// Chase test: one tableau row per table, distinguished symbols on the
/// table's columns, equated under `fds` until nothing changes. Lossless iff
/// some row ends up fully distinguished.
bool is_lossless(const std::vector<std::string>& universe, const FdSet& fds,
                 std::span<const TableStructure> tables);

/// Projection of `fds` onto `attributes`: X -> a for every subset X and every
/// a in closure(X) within `attributes`, reduced to a minimal cover.
FdSet project(const FdSet& fds, const std::vector<std::string>& attributes);

/// Every FD of `fds` follows from the union of its projections onto the
/// tables.
bool preserves_dependencies(const FdSet& fds, std::span<const TableStructure> tables);

/// 2NF/3NF violations of one table against its declared primary key.
std::vector<Violation> scan_violations(const TableStructure& table, const FdSet& fds,
                                       CheckMode mode);

/// Violations over every table.
std::vector<Violation> scan_violations(std::span<const TableStructure> tables, const FdSet& fds,
                                       CheckMode mode);

}  // namespace rdbnorm
