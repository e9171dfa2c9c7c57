#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "actkit/act.hpp"
#include "actkit/error.hpp"

namespace actkit {

namespace {

void require_masked(const Act& a) {
  if (a.size() > kMaxMaskedSize)
    throw PreconditionError("subact operations need an act of at most 64 "
                            "elements, got " + std::to_string(a.size()));
}

Index find_root(std::vector<Index>& parent, Index x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ElementSet zeros(const Act& a) {
  require_masked(a);
  ElementSet out;
  for (Index x = 0; x < a.size(); ++x) {
    const auto row = a.row(x);
    if (std::all_of(row.begin(), row.end(), [x](Index y) { return y == x; }))
      out.insert(x);
  }
  return out;
}

ElementSet cyclic_subact(const Act& a, Index x) {
  require_masked(a);
  ElementSet out = ElementSet::of(a.row(x));
  out.insert(x);
  return out;
}

ElementSet generated_subact(const Act& a, ElementSet generators) {
  ElementSet out;
  for (Index g : generators) out |= cyclic_subact(a, g);
  return out;
}

bool is_subact(const Act& a, ElementSet members) {
  require_masked(a);
  if (members.empty() || !members.is_subset_of(a.elements())) return false;
  for (Index x : members)
    for (Index y : a.row(x))
      if (!members.contains(y)) return false;
  return true;
}

std::vector<Subact> subact_lattice(const Act& a, std::size_t limit) {
  require_masked(a);
  const auto m = static_cast<Index>(a.size());
  std::vector<ElementSet> cyclic(m);
  for (Index x = 0; x < m; ++x) cyclic[x] = cyclic_subact(a, x);

  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> frontier;
  for (Index x = 0; x < m; ++x)
    if (seen.insert(cyclic[x].bits()).second) frontier.push_back(cyclic[x]);
  while (!frontier.empty()) {
    const ElementSet current = frontier.back();
    frontier.pop_back();
    for (Index x = 0; x < m; ++x) {
      if (current.contains(x)) continue;
      const ElementSet next = current | cyclic[x];
      if (seen.insert(next.bits()).second) {
        if (seen.size() > limit)
          throw BudgetExceeded("subact lattice exceeds " +
                               std::to_string(limit) + " members");
        frontier.push_back(next);
      }
    }
  }

  std::vector<Subact> out;
  out.reserve(seen.size());
  for (std::uint64_t bits : seen) {
    Subact sub{ElementSet(bits), {}};
    for (Index x : sub.members)
      if (cyclic[x] == sub.members) sub.generators.insert(x);
    out.push_back(sub);
  }
  std::sort(out.begin(), out.end(), [](const Subact& l, const Subact& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l.members < r.members;
  });
  return out;
}

std::vector<Index> component_labels(const Act& a) {
  const auto m = static_cast<Index>(a.size());
  std::vector<Index> parent(m);
  std::iota(parent.begin(), parent.end(), Index{0});
  for (Index x = 0; x < m; ++x)
    for (Index y : a.row(x)) {
      const Index rx = find_root(parent, x), ry = find_root(parent, y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  std::vector<Index> labels(m);
  for (Index x = 0; x < m; ++x) labels[x] = find_root(parent, x);
  return labels;
}

ActProfile act_profile(const Act& a) {
  return act_profile(a, subact_lattice(a));
}

ActProfile act_profile(const Act& a, std::span<const Subact> lattice) {
  ActProfile p;
  p.zeros = zeros(a);
  p.is_zero_act = a.size() == 1;
  const ElementSet all = a.elements();

  p.is_simple = lattice.size() == 1;
  p.is_theta_simple = true;
  ElementSet meet = all;
  for (const Subact& sub : lattice) {
    if (sub.size() < 2) continue;
    if (sub.members != all) p.is_theta_simple = false;
    meet &= sub.members;
  }
  if (a.size() >= 2 && meet.size() >= 2) {
    p.is_cocyclic = true;
    p.monolith = meet;
  }

  const auto labels = component_labels(a);
  for (Index x = 0; x < a.size(); ++x) {
    if (labels[x] != x) continue;
    ElementSet component;
    for (Index y = 0; y < a.size(); ++y)
      if (labels[y] == x) component.insert(y);
    p.components.push_back(component);
  }
  return p;
}

}  // namespace actkit
