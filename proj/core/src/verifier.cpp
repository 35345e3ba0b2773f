#include "rdbnorm/verifier.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "rdbnorm/error.hpp"

namespace rdbnorm {

namespace {

constexpr std::size_t kMaxProjectedWidth = 16;

std::unordered_map<std::string, std::size_t> column_index(const std::vector<std::string>& universe) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);
  return index;
}

bool subset_of(const AttributeSet& part, const std::vector<std::string>& whole) {
  return std::all_of(part.begin(), part.end(), [&](const std::string& name) {
    return std::find(whole.begin(), whole.end(), name) != whole.end();
  });
}

/// Exact test without materializing projections: grow Z from the left-hand
/// side by closure(Z & table) & table over every table until stable.
bool preserved_by_iteration(const FunctionalDependency& fd, const FdSet& fds,
                            std::span<const TableStructure> tables) {
  AttributeSet z = fd.lhs;
  for (bool grew = true; grew && !z.contains(fd.rhs);) {
    grew = false;
    for (const auto& t : tables) {
      AttributeSet local;
      for (const auto& a : t.attributes) {
        if (z.contains(a)) local.insert(a);
      }
      if (local.empty()) continue;
      for (const auto& a : closure(local, fds)) {
        if (t.contains(a) && z.insert(a).second) grew = true;
      }
    }
  }
  return z.contains(fd.rhs);
}

}  // namespace

bool is_lossless(const std::vector<std::string>& universe, const FdSet& fds,
                 std::span<const TableStructure> tables) {
  const auto index = column_index(universe);
  const std::size_t width = universe.size();
  if (tables.empty()) return width == 0;

  // 0 is the distinguished symbol; every other cell starts unique.
  std::vector<std::vector<std::size_t>> rows(tables.size(), std::vector<std::size_t>(width));
  for (std::size_t r = 0; r < tables.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) rows[r][c] = 1 + r * width + c;
    for (const auto& a : tables[r].attributes) {
      auto it = index.find(a);
      if (it == index.end()) {
        throw Error(ErrorCode::AttributeOutsideUniverse,
                    "'" + a + "' of table " + tables[r].name + " is outside the universe");
      }
      rows[r][it->second] = 0;
    }
  }

  struct Rule {
    std::vector<std::size_t> lhs;
    std::size_t rhs;
  };
  std::vector<Rule> rules;
  for (const auto& fd : fds.fds()) {
    Rule rule;
    bool inside = index.contains(fd.rhs);
    for (const auto& a : fd.lhs) {
      auto it = index.find(a);
      if (it == index.end()) {
        inside = false;
        break;
      }
      rule.lhs.push_back(it->second);
    }
    if (!inside) continue;
    rule.rhs = index.at(fd.rhs);
    rules.push_back(std::move(rule));
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : rules) {
      std::map<std::vector<std::size_t>, std::size_t> first_row;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::size_t> probe;
        probe.reserve(rule.lhs.size());
        for (std::size_t c : rule.lhs) probe.push_back(rows[r][c]);
        auto [it, fresh] = first_row.try_emplace(std::move(probe), r);
        if (fresh) continue;
        const std::size_t a = rows[it->second][rule.rhs];
        const std::size_t b = rows[r][rule.rhs];
        if (a == b) continue;
        const std::size_t keep = std::min(a, b);
        const std::size_t drop = std::max(a, b);
        for (auto& row : rows) {
          if (row[rule.rhs] == drop) row[rule.rhs] = keep;
        }
        changed = true;
      }
    }
  }

  return std::any_of(rows.begin(), rows.end(), [](const std::vector<std::size_t>& row) {
    return std::all_of(row.begin(), row.end(), [](std::size_t s) { return s == 0; });
  });
}

FdSet project(const FdSet& fds, const std::vector<std::string>& attributes) {
  if (attributes.size() > kMaxProjectedWidth) {
    throw Error(ErrorCode::InvalidArgument,
                "projection onto " + std::to_string(attributes.size()) +
                    " attributes exceeds the exact-enumeration width of " +
                    std::to_string(kMaxProjectedWidth));
  }
  std::vector<FunctionalDependency> projected;
  const std::size_t n = attributes.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    AttributeSet x;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) x.insert(attributes[i]);
    }
    for (const auto& a : closure(x, fds)) {
      if (!x.contains(a) &&
          std::find(attributes.begin(), attributes.end(), a) != attributes.end()) {
        projected.push_back({x, a});
      }
    }
  }
  return minimal_cover(FdSet(attributes, std::move(projected)));
}

bool preserves_dependencies(const FdSet& fds, std::span<const TableStructure> tables) {
  for (const auto& t : tables) {
    for (const auto& a : t.attributes) {
      if (fds.index_of(a) < 0) {
        throw Error(ErrorCode::AttributeOutsideUniverse,
                    "'" + a + "' of table " + t.name + " is outside the universe");
      }
    }
  }

  const bool enumerable = std::all_of(tables.begin(), tables.end(), [](const TableStructure& t) {
    return t.attributes.size() <= kMaxProjectedWidth;
  });
  if (!enumerable) {
    return std::all_of(fds.fds().begin(), fds.fds().end(), [&](const FunctionalDependency& fd) {
      return preserved_by_iteration(fd, fds, tables);
    });
  }

  std::vector<FunctionalDependency> combined;
  for (const auto& t : tables) {
    const FdSet p = project(fds, t.attributes);
    combined.insert(combined.end(), p.fds().begin(), p.fds().end());
  }
  const FdSet g = fds.with(std::move(combined));
  return std::all_of(fds.fds().begin(), fds.fds().end(),
                     [&](const FunctionalDependency& fd) { return implies(g, fd); });
}

std::vector<Violation> scan_violations(const TableStructure& table, const FdSet& fds,
                                       CheckMode mode) {
  std::vector<Violation> out;
  const auto& pk = table.primary_key;
  auto in_pk = [&](const std::string& a) { return std::find(pk.begin(), pk.end(), a) != pk.end(); };

  for (const auto& fd : fds.fds()) {
    if (!table.contains(fd.rhs) || in_pk(fd.rhs)) continue;
    if (!subset_of(fd.lhs, table.attributes)) continue;
    const bool inside_pk = std::all_of(fd.lhs.begin(), fd.lhs.end(), in_pk);
    if (inside_pk && fd.lhs.size() < pk.size()) {
      out.push_back({table.name, ViolationKind::Partial, fd.rhs, fd.lhs});
    } else if (mode == CheckMode::ThirdNormalForm && !inside_pk) {
      out.push_back({table.name, ViolationKind::Transitive, fd.rhs, fd.lhs});
    }
  }
  return out;
}

std::vector<Violation> scan_violations(std::span<const TableStructure> tables, const FdSet& fds,
                                       CheckMode mode) {
  std::vector<Violation> out;
  for (const auto& t : tables) {
    auto part = scan_violations(t, fds, mode);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace rdbnorm
