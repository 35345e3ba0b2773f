#pragma once

#include <span>
#include <string>
#include <vector>

#include "rdbnorm/dependency.hpp"

namespace rdbnorm {

/// An ordered list of singleton-RHS dependencies over a declared universe of
/// attribute names. Construction validates every name and drops exact
/// duplicates, keeping the first occurrence.
class FdSet {
 public:
  FdSet() = default;
  FdSet(std::vector<std::string> universe, std::vector<FunctionalDependency> fds);

  [[nodiscard]] const std::vector<std::string>& universe() const noexcept { return universe_; }
  [[nodiscard]] const std::vector<FunctionalDependency>& fds() const noexcept { return fds_; }
  [[nodiscard]] std::size_t size() const noexcept { return fds_.size(); }
  [[nodiscard]] bool empty() const noexcept { return fds_.empty(); }

  /// Position of `name` in the universe, or -1.
  [[nodiscard]] int index_of(const std::string& name) const;

  /// Same universe, different dependency list.
  [[nodiscard]] FdSet with(std::vector<FunctionalDependency> fds) const;

  friend bool operator==(const FdSet&, const FdSet&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<FunctionalDependency> fds_;
};

/// Expands every L -> {r1..rk} into L -> r1, ..., L -> rk, keeping input
/// order. Reflexive parts (ri in L) are dropped.
FdSet split_rhs(std::vector<std::string> universe, std::span<const RawDependency> raw);

/// Attribute-set closure of `attrs` under `fds` (least fixpoint).
AttributeSet closure(const AttributeSet& attrs, const FdSet& fds);

/// True iff candidate.rhs is in closure(candidate.lhs, fds).
bool implies(const FdSet& fds, const FunctionalDependency& candidate);

/// Canonical cover. First drops extraneous left-hand-side attributes (FDs in
/// input order, attributes in universe order), then drops redundant FDs in
/// input order. The result is closure-equivalent to the input.
FdSet minimal_cover(const FdSet& fds);

}  // namespace rdbnorm
