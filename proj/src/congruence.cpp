#include "actkit/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "actkit/error.hpp"

namespace actkit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t m) : parent_(m) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }
  explicit UnionFind(std::span<const Index> canonical_labels)
      : parent_(canonical_labels.begin(), canonical_labels.end()) {}

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) std::swap(x, y);
    parent_[x] = y;  // smaller index stays the root
    return true;
  }
  std::vector<Index> labels() {
    std::vector<Index> out(parent_.size());
    for (Index x = 0; x < out.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Index> parent_;
};

// Merges the queued pairs and every pair they force by right translation.
// Roots stay minimal, so the final labels are canonical.
Congruence close(const Act& a, UnionFind& uf, std::vector<ElementPair>& queue) {
  const auto n = static_cast<Index>(a.semigroup().size());
  while (!queue.empty()) {
    const auto [x, y] = queue.back();
    queue.pop_back();
    if (!uf.unite(x, y)) continue;
    for (Index s = 0; s < n; ++s) queue.emplace_back(a(x, s), a(y, s));
  }
  auto labels = uf.labels();
  return Congruence(labels);
}

}  // namespace

Congruence::Congruence(std::span<const Index> labels) : labels_(labels.size()) {
  const std::size_t m = labels.size();
  bool small = std::all_of(labels.begin(), labels.end(),
                           [m](Index l) { return l < m; });
  if (small) {
    thread_local std::vector<Index> first;
    first.assign(m, static_cast<Index>(m));
    for (Index x = 0; x < m; ++x) {
      if (first[labels[x]] == m) first[labels[x]] = x;
      labels_[x] = first[labels[x]];
    }
    return;
  }
  for (Index x = 0; x < m; ++x) {
    labels_[x] = x;
    for (Index y = 0; y < x; ++y)
      if (labels[y] == labels[x]) {
        labels_[x] = y;
        break;
      }
  }
}

Congruence Congruence::diagonal(std::size_t m) {
  std::vector<Index> labels(m);
  std::iota(labels.begin(), labels.end(), Index{0});
  return Congruence(labels);
}

Congruence Congruence::full(std::size_t m) {
  std::vector<Index> labels(m, 0);
  return Congruence(labels);
}

bool Congruence::is_diagonal() const {
  for (Index x = 0; x < labels_.size(); ++x)
    if (labels_[x] != x) return false;
  return true;
}

bool Congruence::is_full() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](Index l) { return l == 0; });
}

std::size_t Congruence::block_count() const {
  std::size_t count = 0;
  for (Index x = 0; x < labels_.size(); ++x)
    if (labels_[x] == x) ++count;
  return count;
}

std::vector<std::vector<Index>> Congruence::blocks() const {
  std::vector<std::vector<Index>> out;
  std::vector<std::size_t> slot(labels_.size());
  for (Index x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == x) {
      slot[x] = out.size();
      out.push_back({x});
    } else {
      out[slot[labels_[x]]].push_back(x);
    }
  }
  return out;
}

bool Congruence::contains(const Congruence& sigma) const {
  if (sigma.size() != size()) return false;
  for (Index x = 0; x < labels_.size(); ++x)
    if (!related(x, sigma.label(x))) return false;
  return true;
}

std::size_t CongruenceHash::operator()(const Congruence& c) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Index l : c.labels()) h = (h ^ l) * 1099511628211ULL;
  return h;
}

bool is_right_congruence(const Act& a, const Congruence& rho) {
  if (rho.size() != a.size()) return false;
  const auto n = static_cast<Index>(a.semigroup().size());
  for (Index x = 0; x < a.size(); ++x) {
    const Index r = rho.label(x);
    if (r == x) continue;
    for (Index s = 0; s < n; ++s)
      if (!rho.related(a(x, s), a(r, s))) return false;
  }
  return true;
}

Congruence congruence_closure(const Act& a,
                              std::span<const ElementPair> seeds) {
  UnionFind uf(a.size());
  thread_local std::vector<ElementPair> queue;
  queue.clear();
  for (const auto& [x, y] : seeds) {
    if (x >= a.size() || y >= a.size())
      throw PreconditionError("congruence_closure: pair out of range");
    queue.emplace_back(x, y);
  }
  return close(a, uf, queue);
}

Congruence monocyclic(const Act& a, Index x, Index y) {
  const ElementPair seed{x, y};
  return congruence_closure(a, std::span(&seed, 1));
}

Congruence rees_congruence(const Act& a, ElementSet subact) {
  if (!is_subact(a, subact))
    throw PreconditionError("rees_congruence: set is not a subact");
  std::vector<Index> labels(a.size());
  std::iota(labels.begin(), labels.end(), Index{0});
  for (Index x : subact) labels[x] = subact.front();
  return Congruence(labels);
}

Congruence kernel(std::span<const Index> map) { return Congruence(map); }

Congruence meet(const Congruence& rho, const Congruence& sigma) {
  if (rho.size() != sigma.size())
    throw PreconditionError("meet of relations on different carriers");
  const std::size_t m = rho.size();
  std::vector<Index> labels(m);
  for (Index x = 0; x < m; ++x) {
    labels[x] = x;
    for (Index y = rho.label(x); y < x; ++y)
      if (rho.related(x, y) && sigma.related(x, y)) {
        labels[x] = y;
        break;
      }
  }
  return Congruence(labels);
}

Congruence join(const Act& a, const Congruence& rho, const Congruence& sigma) {
  if (rho.size() != a.size() || sigma.size() != a.size())
    throw PreconditionError("join of relations on different carriers");
  std::vector<ElementPair> seeds;
  for (Index x = 0; x < a.size(); ++x) {
    if (rho.label(x) != x) seeds.emplace_back(x, rho.label(x));
    if (sigma.label(x) != x) seeds.emplace_back(x, sigma.label(x));
  }
  return congruence_closure(a, seeds);
}

Congruence combine(const Act& a, LatticeOp op, const Congruence& rho,
                   const Congruence& sigma) {
  return op == LatticeOp::Meet ? meet(rho, sigma) : join(a, rho, sigma);
}

std::vector<MonocyclicCongruence> monocyclic_congruences(const Act& a) {
  std::vector<MonocyclicCongruence> out;
  const auto m = static_cast<Index>(a.size());
  out.reserve(m * (m - 1) / 2);
  for (Index x = 0; x < m; ++x)
    for (Index y = x + 1; y < m; ++y) out.push_back({x, y, monocyclic(a, x, y)});
  return out;
}

bool CongruenceSet::contains(const Congruence& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

namespace {

CongruenceSet finish(std::vector<Congruence> members,
                     const std::vector<MonocyclicCongruence>& monos) {
  std::sort(members.begin(), members.end());
  CongruenceSet out;
  out.monocyclic.assign(members.size(), false);
  for (const auto& mc : monos) {
    auto it = std::lower_bound(members.begin(), members.end(), mc.rho);
    if (it != members.end() && *it == mc.rho)
      out.monocyclic[static_cast<std::size_t>(it - members.begin())] = true;
  }
  out.members = std::move(members);
  return out;
}

}  // namespace

CongruenceSet all_congruences(const Act& a, const CongruenceOptions& options) {
  if (a.size() > options.max_size)
    throw BudgetExceeded("all_congruences refused for an act of " +
                         std::to_string(a.size()) + " elements (guard " +
                         std::to_string(options.max_size) + ")");
  const auto monos = monocyclic_congruences(a);
  std::unordered_set<Congruence, CongruenceHash> seen;
  std::vector<Congruence> worklist;
  seen.insert(Congruence::diagonal(a.size()));
  for (const auto& mc : monos)
    if (seen.insert(mc.rho).second) worklist.push_back(mc.rho);
  while (!worklist.empty()) {
    const Congruence current = std::move(worklist.back());
    worklist.pop_back();
    for (const auto& mc : monos) {
      if (current.related(mc.x, mc.y)) continue;
      // The equivalence join of two right congruences is already one.
      UnionFind uf(current.labels());
      for (Index x = 0; x < a.size(); ++x) uf.unite(x, mc.rho.label(x));
      Congruence next(uf.labels());
      if (!seen.contains(next)) {
        seen.insert(next);
        worklist.push_back(std::move(next));
      }
    }
  }
  CongruenceSet out =
      finish(std::vector<Congruence>(seen.begin(), seen.end()), monos);
  if (options.cross_check && a.size() <= kPartitionFilterLimit) {
    if (congruences_by_partition_filter(a).members != out.members)
      throw std::logic_error("join-closure and partition filter disagree");
  }
  return out;
}

CongruenceSet congruences_by_partition_filter(const Act& a) {
  const std::size_t m = a.size();
  if (m > kPartitionFilterLimit + 2)
    throw BudgetExceeded("partition filter refused for " + std::to_string(m) +
                         " elements");
  std::vector<Congruence> members;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<Index> rgs(m, 0), prefix_max(m, 0);
  while (true) {
    Congruence candidate(rgs);
    if (is_right_congruence(a, candidate)) members.push_back(std::move(candidate));
    std::size_t i = m;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0 || m < 2) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return finish(std::move(members), monocyclic_congruences(a));
}

// ---------------------------------------------------------------------------

namespace {

ElementSet multiplicative_closure(const Semigroup& g, ElementSet set) {
  while (true) {
    ElementSet next = set;
    for (Index x : set)
      for (Index y : set) next.insert(g(x, y));
    if (next == set) return set;
    set = next;
  }
}

}  // namespace

std::vector<ElementSet> subgroups(const Semigroup& g) {
  if (!g.profile().is_group)
    throw PreconditionError("subgroups: semigroup is not a group");
  const auto n = static_cast<Index>(g.size());
  std::vector<ElementSet> cyclic(n);
  for (Index x = 0; x < n; ++x) cyclic[x] = powers(g, x);
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> frontier;
  for (Index x = 0; x < n; ++x)
    if (seen.insert(cyclic[x].bits()).second) frontier.push_back(cyclic[x]);
  while (!frontier.empty()) {
    const ElementSet h = frontier.back();
    frontier.pop_back();
    for (Index x = 0; x < n; ++x) {
      if (h.contains(x)) continue;
      const ElementSet next = multiplicative_closure(g, h | cyclic[x]);
      if (seen.insert(next.bits()).second) frontier.push_back(next);
    }
  }
  std::vector<ElementSet> out;
  for (auto bits : seen) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [](ElementSet l, ElementSet r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
  return out;
}

GroupCongruenceCorrespondence group_congruence_bijection(const SemigroupPtr& g) {
  if (!g->profile().is_group)
    throw PreconditionError("group_congruence_bijection: not a group");
  const auto n = static_cast<Index>(g->size());
  const Index one = *g->identity();
  std::vector<Index> inverse(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if ((*g)(x, y) == one) inverse[x] = y;

  GroupCongruenceCorrespondence out;
  for (ElementSet h : subgroups(*g)) {
    std::vector<Index> labels(n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y <= x; ++y)
        if (h.contains((*g)(x, inverse[y]))) {
          labels[x] = y;
          break;
        }
    out.pairs.emplace_back(h, Congruence(labels));
  }

  const Act regular = regular_act(g);
  const CongruenceSet all = all_congruences(regular);
  std::vector<Congruence> image;
  bool all_right = true;
  for (const auto& [h, rho] : out.pairs) {
    image.push_back(rho);
    all_right = all_right && is_right_congruence(regular, rho);
  }
  std::sort(image.begin(), image.end());
  out.bijective = all_right &&
                  std::adjacent_find(image.begin(), image.end()) == image.end() &&
                  image == all.members;
  out.order_preserving = true;
  for (const auto& [h, rho] : out.pairs)
    for (const auto& [k, sigma] : out.pairs)
      if (h.is_subset_of(k) != sigma.contains(rho)) out.order_preserving = false;
  return out;
}

}  // namespace actkit
