#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace rdbnorm {

using AttributeSet = std::set<std::string>;

/// A functional dependency in singleton right-hand-side form: lhs -> rhs.
struct FunctionalDependency {
  AttributeSet lhs;
  std::string rhs;

  friend auto operator<=>(const FunctionalDependency&, const FunctionalDependency&) = default;
  friend bool operator==(const FunctionalDependency&, const FunctionalDependency&) = default;
};

/// A dependency as declared by a user, possibly with several attributes on the
/// right-hand side. Name order is kept as written.
struct RawDependency {
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;

  friend bool operator==(const RawDependency&, const RawDependency&) = default;
};

std::ostream& operator<<(std::ostream& os, const FunctionalDependency& fd);

std::string to_string(const FunctionalDependency& fd);

}  // namespace rdbnorm
