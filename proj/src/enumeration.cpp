#include "actkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <numeric>
#include <string>
#include <thread>

#include "actkit/error.hpp"

namespace actkit {

std::optional<SemigroupFilter> parse_filter(std::string_view name) {
  for (auto f : {SemigroupFilter::RightZero, SemigroupFilter::LeftZero,
                 SemigroupFilter::Regular, SemigroupFilter::Group,
                 SemigroupFilter::Monoid, SemigroupFilter::RegularMonoid,
                 SemigroupFilter::LeftReversible,
                 SemigroupFilter::NonLeftReversible, SemigroupFilter::NonGroup})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::string_view to_string(SemigroupFilter filter) {
  switch (filter) {
    case SemigroupFilter::RightZero: return "right_zero";
    case SemigroupFilter::LeftZero: return "left_zero";
    case SemigroupFilter::Regular: return "regular";
    case SemigroupFilter::Group: return "group";
    case SemigroupFilter::Monoid: return "monoid";
    case SemigroupFilter::RegularMonoid: return "regular_monoid";
    case SemigroupFilter::LeftReversible: return "left_reversible";
    case SemigroupFilter::NonLeftReversible: return "non_left_reversible";
    case SemigroupFilter::NonGroup: return "non_group";
  }
  return "?";
}

bool matches(const Semigroup& s, SemigroupFilter filter) {
  const SemigroupProfile& p = s.profile();
  switch (filter) {
    case SemigroupFilter::RightZero: return p.is_right_zero_semigroup;
    case SemigroupFilter::LeftZero: return p.is_left_zero_semigroup;
    case SemigroupFilter::Regular: return p.is_regular;
    case SemigroupFilter::Group: return p.is_group;
    case SemigroupFilter::Monoid: return s.is_monoid();
    case SemigroupFilter::RegularMonoid: return s.is_monoid() && p.is_regular;
    case SemigroupFilter::LeftReversible: return p.is_left_reversible;
    case SemigroupFilter::NonLeftReversible: return !p.is_left_reversible;
    case SemigroupFilter::NonGroup: return !p.is_group;
  }
  return false;
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("ACTKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultNodeBudget;
}

void validate_scope(const EnumerationScope& scope) {
  if (scope.min_semigroup_order < 1 ||
      scope.min_semigroup_order > scope.max_semigroup_order)
    throw PreconditionError("empty semigroup order range");
  if (scope.min_act_order < 1 || scope.min_act_order > scope.max_act_order)
    throw PreconditionError("empty act order range");
  const std::size_t limit = scope.allow_order_five ? 5 : 4;
  if (scope.max_semigroup_order > limit)
    throw BudgetExceeded("semigroup order " +
                         std::to_string(scope.max_semigroup_order) +
                         " is above the enumeration guard of " +
                         std::to_string(limit));
}

namespace {

constexpr Index kUnset = 0xFFFFFFFF;

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (count_.fetch_add(1, std::memory_order_relaxed) >= budget_)
      throw BudgetExceeded("enumeration exceeded the node budget of " +
                           std::to_string(budget_));
  }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> count_{0};
};

bool partial_associative(std::size_t n, const std::vector<Index>& t) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Index xy = t[x * n + y];
      if (xy == kUnset) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const Index yz = t[y * n + z];
        if (yz == kUnset) continue;
        const Index l = t[xy * n + z], r = t[x * n + yz];
        if (l != kUnset && r != kUnset && l != r) return false;
      }
    }
  return true;
}

void fill_semigroups(std::size_t n, std::vector<Index>& t, std::size_t cell,
                     NodeCounter& nodes, std::vector<std::vector<Index>>& out) {
  if (cell == n * n) {
    out.push_back(t);
    return;
  }
  for (Index v = 0; v < n; ++v) {
    nodes.tick();
    t[cell] = v;
    if (partial_associative(n, t)) fill_semigroups(n, t, cell + 1, nodes, out);
  }
  t[cell] = kUnset;
}

std::vector<Index> relabel_semigroup(const std::vector<Index>& table,
                                     std::size_t n,
                                     const std::vector<Index>& perm) {
  std::vector<Index> out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out[perm[x] * n + perm[y]] = perm[table[x * n + y]];
  return out;
}

bool is_canonical_semigroup(std::size_t n, const std::vector<Index>& table) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  while (std::next_permutation(perm.begin(), perm.end()))
    if (relabel_semigroup(table, n, perm) < table) return false;
  return true;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<Semigroup> enumerate_semigroups(std::size_t order, bool up_to_iso,
                                            std::uint64_t budget,
                                            unsigned jobs) {
  if (order == 0) throw PreconditionError("semigroup order must be positive");
  if (order > 5)
    throw BudgetExceeded("semigroup enumeration is limited to order 5");
  const std::size_t n = order;
  NodeCounter nodes(budget);

  // Shards: every assignment of the first row, in lexicographic order.
  std::size_t shard_count = 1;
  for (std::size_t i = 0; i < n; ++i) shard_count *= n;
  std::vector<std::vector<std::vector<Index>>> shards(shard_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < shard_count;) {
      std::vector<Index> t(n * n, kUnset);
      std::size_t code = k;
      for (std::size_t j = n; j-- > 0;) {
        t[j] = static_cast<Index>(code % n);
        code /= n;
      }
      nodes.tick();
      if (!partial_associative(n, t)) continue;
      std::vector<std::vector<Index>> found;
      fill_semigroups(n, t, n, nodes, found);
      if (up_to_iso)
        std::erase_if(found, [n](const std::vector<Index>& table) {
          return !is_canonical_semigroup(n, table);
        });
      shards[k] = std::move(found);
    }
  };
  const unsigned threads =
      std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(shard_count));
  std::vector<std::future<void>> running;
  for (unsigned i = 0; i < threads; ++i)
    running.push_back(std::async(std::launch::async, worker));
  for (auto& f : running) f.get();

  std::vector<Semigroup> out;
  for (auto& shard : shards)
    for (auto& table : shard) out.emplace_back(n, std::move(table));
  return out;
}

std::vector<SemigroupPtr> enumerate_semigroups(const EnumerationScope& scope) {
  validate_scope(scope);
  std::vector<SemigroupPtr> out;
  for (std::size_t n = scope.min_semigroup_order; n <= scope.max_semigroup_order;
       ++n)
    for (Semigroup& s :
         enumerate_semigroups(n, scope.up_to_iso, scope.budget, scope.jobs)) {
      if (scope.monoids_only && !s.is_monoid()) continue;
      if (scope.filter && !matches(s, *scope.filter)) continue;
      out.push_back(std::make_shared<const Semigroup>(std::move(s)));
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class ActFiller {
 public:
  ActFiller(const SemigroupPtr& s, std::size_t m, bool up_to_iso,
            const std::function<void(const Act&)>& visit, std::uint64_t budget)
      : s_(s),
        m_(m),
        n_(s->size()),
        up_to_iso_(up_to_iso),
        visit_(visit),
        nodes_(budget),
        t_(m * s->size(), kUnset) {
    const auto one = s->identity();
    // Columns that occur most often as products go first so the
    // compatibility instances close early.
    std::vector<std::size_t> hits(n_, 0);
    for (Index v : s->table()) ++hits[v];
    std::vector<Index> columns(n_);
    std::iota(columns.begin(), columns.end(), Index{0});
    std::stable_sort(columns.begin(), columns.end(),
                     [&](Index l, Index r) { return hits[l] > hits[r]; });
    for (Index col : columns) {
      if (one && col == *one) {
        for (Index a = 0; a < m_; ++a) t_[a * n_ + col] = a;
        continue;
      }
      for (Index a = 0; a < m_; ++a) cells_.push_back(a * n_ + col);
    }
    perm_.resize(m_);
  }

  void run() {
    if (!consistent()) return;
    fill(0);
  }

 private:
  bool consistent() const {
    const Semigroup& s = *s_;
    for (std::size_t a = 0; a < m_; ++a)
      for (Index x = 0; x < n_; ++x) {
        const Index ax = t_[a * n_ + x];
        if (ax == kUnset) continue;
        for (Index y = 0; y < n_; ++y) {
          const Index l = t_[a * n_ + s(x, y)];
          const Index r = t_[ax * n_ + y];
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    return true;
  }

  // Only the instances a(xy) = (ax)y that read the cell (a, x).
  bool consistent_at(Index a, Index x) const {
    const Semigroup& s = *s_;
    const Index ax = t_[a * n_ + x];
    auto clash = [](Index l, Index r) {
      return l != kUnset && r != kUnset && l != r;
    };
    for (Index y = 0; y < n_; ++y) {
      // a·(x y) against (a x)·y
      if (clash(t_[a * n_ + s(x, y)], t_[ax * n_ + y])) return false;
      for (Index u = 0; u < n_; ++u) {
        // a·(u y) with u y = x, against (a u)·y
        if (s(u, y) == x) {
          const Index au = t_[a * n_ + u];
          if (au != kUnset && clash(ax, t_[au * n_ + y])) return false;
        }
      }
    }
    // b·(u x) against (b u)·x where b u = a
    for (Index b = 0; b < m_; ++b)
      for (Index u = 0; u < n_; ++u)
        if (t_[b * n_ + u] == a && clash(t_[b * n_ + s(u, x)], ax))
          return false;
    return true;
  }

  bool canonical() {
    std::iota(perm_.begin(), perm_.end(), Index{0});
    std::vector<Index> relabeled(t_.size());
    while (std::next_permutation(perm_.begin(), perm_.end())) {
      for (std::size_t a = 0; a < m_; ++a)
        for (std::size_t x = 0; x < n_; ++x)
          relabeled[perm_[a] * n_ + x] = perm_[t_[a * n_ + x]];
      if (relabeled < t_) return false;
    }
    return true;
  }

  // Cells are visited column by column, but the emitted order must be
  // lexicographic in the row-major table, so completed tables are
  // collected and sorted per enumeration.
  void fill(std::size_t k) {
    if (k == cells_.size()) {
      if (up_to_iso_ && !canonical()) return;
      found_.push_back(t_);
      return;
    }
    const std::size_t cell = cells_[k];
    for (Index v = 0; v < m_; ++v) {
      nodes_.tick();
      t_[cell] = v;
      if (consistent_at(static_cast<Index>(cell / n_), static_cast<Index>(cell % n_)))
        fill(k + 1);
    }
    t_[cell] = kUnset;
  }

 public:
  void emit() {
    std::sort(found_.begin(), found_.end());
    for (auto& table : found_) visit_(Act(s_, m_, std::move(table)));
  }

 private:
  SemigroupPtr s_;
  std::size_t m_;
  std::size_t n_;
  bool up_to_iso_;
  const std::function<void(const Act&)>& visit_;
  NodeCounter nodes_;
  std::vector<Index> t_;
  std::vector<std::size_t> cells_;
  std::vector<Index> perm_;
  std::vector<std::vector<Index>> found_;
};

}  // namespace

void for_each_act(const SemigroupPtr& s, std::size_t m, bool up_to_iso,
                  const std::function<void(const Act&)>& visit,
                  std::uint64_t budget) {
  if (m == 0) throw PreconditionError("act order must be positive");
  ActFiller filler(s, m, up_to_iso, visit, budget);
  filler.run();
  filler.emit();
}

std::vector<Act> enumerate_acts(const SemigroupPtr& s, std::size_t m,
                                bool up_to_iso, std::uint64_t budget) {
  std::vector<Act> out;
  for_each_act(s, m, up_to_iso, [&](const Act& a) { out.push_back(a); }, budget);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::uint8_t> canonical_form(const Semigroup& s) {
  const std::size_t n = s.size();
  if (n > kMaxCanonicalOrder)
    throw BudgetExceeded("canonical_form limited to order 7");
  const std::vector<Index> table(s.table().begin(), s.table().end());
  std::vector<Index> best = table;
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, relabel_semigroup(table, n, perm));
  std::vector<std::uint8_t> out{static_cast<std::uint8_t>(n)};
  for (Index v : best) out.push_back(static_cast<std::uint8_t>(v));
  return out;
}

std::vector<std::uint8_t> canonical_form(const Act& a) {
  const std::size_t m = a.size();
  const std::size_t n = a.semigroup().size();
  if (m > kMaxCanonicalOrder || n > kMaxCanonicalOrder)
    throw BudgetExceeded("canonical_form limited to order 7");
  const std::vector<Index> table(a.action().begin(), a.action().end());
  std::vector<Index> best = table, relabeled(table.size());
  std::vector<Index> perm(m);
  std::iota(perm.begin(), perm.end(), Index{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t s = 0; s < n; ++s)
        relabeled[perm[x] * n + s] = perm[table[x * n + s]];
    best = std::min(best, relabeled);
  }
  std::vector<std::uint8_t> out{static_cast<std::uint8_t>(m),
                                static_cast<std::uint8_t>(n)};
  for (Index v : a.semigroup().table()) out.push_back(static_cast<std::uint8_t>(v));
  for (Index v : best) out.push_back(static_cast<std::uint8_t>(v));
  return out;
}

std::size_t orbit_size(const Semigroup& s) {
  const std::size_t n = s.size();
  if (n > kMaxCanonicalOrder)
    throw BudgetExceeded("orbit_size limited to order 7");
  const std::vector<Index> table(s.table().begin(), s.table().end());
  std::size_t automorphisms = 0, total = 0;
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    ++total;
    if (relabel_semigroup(table, n, perm) == table) ++automorphisms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / automorphisms;
}

}  // namespace actkit
