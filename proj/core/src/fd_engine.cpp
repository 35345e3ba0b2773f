#include "rdbnorm/fd_engine.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "rdbnorm/error.hpp"

namespace rdbnorm {

std::ostream& operator<<(std::ostream& os, const FunctionalDependency& fd) {
  bool first = true;
  for (const auto& name : fd.lhs) {
    if (!first) os << ", ";
    os << name;
    first = false;
  }
  return os << " -> " << fd.rhs;
}

std::string to_string(const FunctionalDependency& fd) {
  std::ostringstream os;
  os << fd;
  return os.str();
}

FdSet::FdSet(std::vector<std::string> universe, std::vector<FunctionalDependency> fds)
    : universe_(std::move(universe)) {
  std::unordered_map<std::string, int> known;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!known.emplace(universe_[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::DuplicateAttribute, "'" + universe_[i] + "' listed twice");
    }
  }
  auto check = [&](const std::string& name) {
    if (!known.contains(name)) {
      throw Error(ErrorCode::UnknownAttribute, "'" + name + "' is not in the universe");
    }
  };
  fds_.reserve(fds.size());
  for (auto& fd : fds) {
    for (const auto& name : fd.lhs) check(name);
    check(fd.rhs);
    if (fd.lhs.empty() || fd.lhs.contains(fd.rhs)) {
      throw Error(ErrorCode::InvalidDependency, "'" + to_string(fd) + "' is trivial or empty");
    }
    if (std::find(fds_.begin(), fds_.end(), fd) == fds_.end()) fds_.push_back(std::move(fd));
  }
}

int FdSet::index_of(const std::string& name) const {
  auto it = std::find(universe_.begin(), universe_.end(), name);
  return it == universe_.end() ? -1 : static_cast<int>(it - universe_.begin());
}

FdSet FdSet::with(std::vector<FunctionalDependency> fds) const {
  return FdSet(universe_, std::move(fds));
}

FdSet split_rhs(std::vector<std::string> universe, std::span<const RawDependency> raw) {
  std::vector<FunctionalDependency> out;
  for (const auto& dep : raw) {
    AttributeSet lhs(dep.lhs.begin(), dep.lhs.end());
    for (const auto& r : dep.rhs) {
      if (lhs.contains(r)) continue;
      out.push_back(FunctionalDependency{lhs, r});
    }
  }
  return FdSet(std::move(universe), std::move(out));
}

namespace {

/// Index-based view of an FdSet used by the closure computations. Closure is
/// the counter-based linear algorithm: each FD fires once all of its
/// left-hand-side attributes have been reached.
class IndexedFds {
 public:
  explicit IndexedFds(const FdSet& set) : universe_size_(set.universe().size()) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < set.universe().size(); ++i) {
      index.emplace(set.universe()[i], static_cast<int>(i));
    }
    for (const auto& fd : set.fds()) {
      std::vector<int> lhs;
      for (const auto& name : fd.lhs) lhs.push_back(index.at(name));
      std::sort(lhs.begin(), lhs.end());
      lhs_.push_back(std::move(lhs));
      rhs_.push_back(index.at(fd.rhs));
      active_.push_back(true);
    }
  }

  [[nodiscard]] std::size_t size() const { return rhs_.size(); }
  [[nodiscard]] const std::vector<int>& lhs(std::size_t i) const { return lhs_[i]; }
  [[nodiscard]] int rhs(std::size_t i) const { return rhs_[i]; }
  [[nodiscard]] bool active(std::size_t i) const { return active_[i]; }

  void set_active(std::size_t i, bool on) { active_[i] = on; }
  void set_lhs(std::size_t i, std::vector<int> lhs) { lhs_[i] = std::move(lhs); }

  /// Closure over active FDs, optionally ignoring FD `skip`.
  [[nodiscard]] std::vector<char> closure(const std::vector<int>& seed,
                                          std::size_t skip = static_cast<std::size_t>(-1)) const {
    std::vector<std::vector<std::size_t>> uses(universe_size_);
    std::vector<std::size_t> missing(size(), 0);
    for (std::size_t f = 0; f < size(); ++f) {
      if (!active_[f] || f == skip) continue;
      missing[f] = lhs_[f].size();
      for (int a : lhs_[f]) uses[static_cast<std::size_t>(a)].push_back(f);
    }
    std::vector<char> reached(universe_size_, 0);
    std::vector<int> queue;
    auto reach = [&](int a) {
      if (!reached[static_cast<std::size_t>(a)]) {
        reached[static_cast<std::size_t>(a)] = 1;
        queue.push_back(a);
      }
    };
    for (int a : seed) reach(a);
    while (!queue.empty()) {
      const int a = queue.back();
      queue.pop_back();
      for (std::size_t f : uses[static_cast<std::size_t>(a)]) {
        if (--missing[f] == 0) reach(rhs_[f]);
      }
    }
    return reached;
  }

 private:
  std::size_t universe_size_;
  std::vector<std::vector<int>> lhs_;
  std::vector<int> rhs_;
  std::vector<bool> active_;
};

std::vector<int> indices_of(const AttributeSet& attrs, const FdSet& fds) {
  std::vector<int> out;
  out.reserve(attrs.size());
  for (const auto& name : attrs) {
    const int i = fds.index_of(name);
    if (i < 0) throw Error(ErrorCode::UnknownAttribute, "'" + name + "' is not in the universe");
    out.push_back(i);
  }
  return out;
}

}  // namespace

AttributeSet closure(const AttributeSet& attrs, const FdSet& fds) {
  const auto seed = indices_of(attrs, fds);
  const auto reached = IndexedFds(fds).closure(seed);
  AttributeSet out;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    if (reached[i]) out.insert(fds.universe()[i]);
  }
  return out;
}

bool implies(const FdSet& fds, const FunctionalDependency& candidate) {
  const int target = fds.index_of(candidate.rhs);
  if (target < 0) {
    throw Error(ErrorCode::UnknownAttribute, "'" + candidate.rhs + "' is not in the universe");
  }
  const auto reached = IndexedFds(fds).closure(indices_of(candidate.lhs, fds));
  return reached[static_cast<std::size_t>(target)] != 0;
}

FdSet minimal_cover(const FdSet& fds) {
  IndexedFds g(fds);

  // Extraneous left-hand-side attributes.
  for (std::size_t f = 0; f < g.size(); ++f) {
    std::vector<int> lhs = g.lhs(f);
    for (std::size_t k = 0; k < lhs.size() && lhs.size() > 1;) {
      std::vector<int> reduced = lhs;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
      if (g.closure(reduced)[static_cast<std::size_t>(g.rhs(f))]) {
        lhs = std::move(reduced);
        g.set_lhs(f, lhs);
      } else {
        ++k;
      }
    }
  }

  // Reduction can make two FDs identical; keep the first.
  for (std::size_t f = 0; f < g.size(); ++f) {
    for (std::size_t e = 0; e < f; ++e) {
      if (g.active(e) && g.rhs(e) == g.rhs(f) && g.lhs(e) == g.lhs(f)) {
        g.set_active(f, false);
        break;
      }
    }
  }

  // Redundant FDs.
  for (std::size_t f = 0; f < g.size(); ++f) {
    if (!g.active(f)) continue;
    if (g.closure(g.lhs(f), f)[static_cast<std::size_t>(g.rhs(f))]) g.set_active(f, false);
  }

  std::vector<FunctionalDependency> out;
  for (std::size_t f = 0; f < g.size(); ++f) {
    if (!g.active(f)) continue;
    FunctionalDependency fd;
    for (int a : g.lhs(f)) fd.lhs.insert(fds.universe()[static_cast<std::size_t>(a)]);
    fd.rhs = fds.universe()[static_cast<std::size_t>(g.rhs(f))];
    out.push_back(std::move(fd));
  }
  return fds.with(std::move(out));
}

}  // namespace rdbnorm
