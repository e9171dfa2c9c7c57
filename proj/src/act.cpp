#include "actkit/act.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "actkit/congruence.hpp"
#include "actkit/error.hpp"

namespace actkit {

Act::Act(SemigroupPtr semigroup, std::size_t m, std::vector<Index> action)
    : semigroup_(std::move(semigroup)),
      m_(m),
      n_(semigroup_ ? semigroup_->size() : 0),
      action_(std::move(action)) {
  if (!semigroup_) throw MalformedError("act needs a semigroup");
  if (m_ == 0) throw MalformedError("act must have at least one element");
  if (!check_act(*semigroup_, m_, action_))
    throw MalformedError("action table violates the act axioms");
}

ElementSet Act::elements() const {
  if (m_ > kMaxMaskedSize)
    throw PreconditionError("act has more than 64 elements");
  return ElementSet::first(m_);
}

bool check_act(const Semigroup& s, std::size_t m,
               std::span<const Index> action) {
  const std::size_t n = s.size();
  if (action.size() != m * n)
    throw MalformedError("action table has " + std::to_string(action.size()) +
                         " entries, expected " + std::to_string(m) + "x" +
                         std::to_string(n));
  for (std::size_t i = 0; i < action.size(); ++i)
    if (action[i] >= m)
      throw MalformedError("action entry at row " + std::to_string(i / n) +
                           ", column " + std::to_string(i % n) +
                           " is out of range");
  for (std::size_t a = 0; a < m; ++a) {
    const auto row = action.subspan(a * n, n);
    if (const auto one = s.identity(); one && row[*one] != a) return false;
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (row[s(x, y)] != action[row[x] * n + y]) return false;
  }
  return true;
}

bool same_semigroup(const Act& a, const Act& b) {
  return a.semigroup_ptr() == b.semigroup_ptr() ||
         a.semigroup() == b.semigroup();
}

bool ActHom::is_injective() const {
  std::vector<Index> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool ActHom::is_surjective(std::size_t target_size) const {
  std::vector<bool> hit(target_size, false);
  for (Index b : image)
    if (b < target_size) hit[b] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool is_homomorphism(const Act& source, const Act& target,
                     std::span<const Index> map) {
  if (map.size() != source.size() || !same_semigroup(source, target))
    return false;
  for (Index b : map)
    if (b >= target.size()) return false;
  const auto n = static_cast<Index>(source.semigroup().size());
  for (Index a = 0; a < source.size(); ++a)
    for (Index s = 0; s < n; ++s)
      if (map[source(a, s)] != target(map[a], s)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Act regular_act(const SemigroupPtr& s) {
  return Act(s, s->size(), {s->table().begin(), s->table().end()});
}

Act regular_act_with_identity(const SemigroupPtr& s) {
  if (s->is_monoid()) return regular_act(s);
  const std::size_t n = s->size();
  std::vector<Index> action(s->table().begin(), s->table().end());
  for (Index t = 0; t < n; ++t) action.push_back(t);  // 1·t = t
  return Act(s, n + 1, std::move(action));
}

Act zero_act(const SemigroupPtr& s, std::size_t count) {
  std::vector<Index> action(count * s->size());
  for (std::size_t a = 0; a < count; ++a)
    std::fill_n(action.begin() + a * s->size(), s->size(), static_cast<Index>(a));
  return Act(s, count, std::move(action));
}

Act coproduct(const Act& a, const Act& b) {
  if (!same_semigroup(a, b))
    throw PreconditionError("coproduct of acts over different semigroups");
  std::vector<Index> action(a.action().begin(), a.action().end());
  const auto shift = static_cast<Index>(a.size());
  for (Index x : b.action()) action.push_back(x + shift);
  return Act(a.semigroup_ptr(), a.size() + b.size(), std::move(action));
}

Act product(const Act& a, const Act& b) {
  if (!same_semigroup(a, b))
    throw PreconditionError("product of acts over different semigroups");
  const std::size_t n = a.semigroup().size();
  const std::size_t mb = b.size();
  std::vector<Index> action(a.size() * mb * n);
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < mb; ++y)
      for (Index s = 0; s < n; ++s)
        action[(x * mb + y) * n + s] =
            static_cast<Index>(a(x, s) * mb + b(y, s));
  return Act(a.semigroup_ptr(), a.size() * mb, std::move(action));
}

Quotient quotient(const Act& a, const Congruence& rho) {
  if (rho.size() != a.size() || !is_right_congruence(a, rho))
    throw PreconditionError("quotient needs a right congruence on the act");
  const std::size_t n = a.semigroup().size();
  std::vector<Index> class_of(a.size());
  std::vector<Index> representative;
  for (Index x = 0; x < a.size(); ++x) {
    if (rho.label(x) == x) {
      class_of[x] = static_cast<Index>(representative.size());
      representative.push_back(x);
    } else {
      class_of[x] = class_of[rho.label(x)];
    }
  }
  std::vector<Index> action(representative.size() * n);
  for (std::size_t c = 0; c < representative.size(); ++c)
    for (Index s = 0; s < n; ++s)
      action[c * n + s] = class_of[a(representative[c], s)];
  return {Act(a.semigroup_ptr(), representative.size(), std::move(action)),
          ActHom{std::move(class_of)}};
}

Act adjoin_zero(const Act& a) {
  for (Index x = 0; x < a.size(); ++x) {
    const auto row = a.row(x);
    if (std::all_of(row.begin(), row.end(), [x](Index y) { return y == x; }))
      return a;
  }
  return coproduct(a, zero_act(a.semigroup_ptr(), 1));
}

Act rees_factor(const SemigroupPtr& s, std::span<const ElementSet> ideals) {
  const Act regular = regular_act(s);
  ElementSet seen;
  std::vector<Index> labels(s->size());
  std::iota(labels.begin(), labels.end(), Index{0});
  for (const ElementSet ideal : ideals) {
    if (ideal.empty() || !ideal.is_subset_of(s->elements()))
      throw PreconditionError("rees_factor: ideal must be a nonempty subset");
    if (right_ideal_closure(*s, ideal) != ideal)
      throw PreconditionError("rees_factor: subset is not a right ideal");
    if (seen.intersects(ideal))
      throw PreconditionError("rees_factor: ideals must be disjoint");
    seen |= ideal;
    for (Index x : ideal) labels[x] = ideal.front();
  }
  return quotient(regular, Congruence(labels)).act;
}

Act power01(const SemigroupPtr& s) {
  const std::size_t n = s->size();
  if (n > kMaxPowerActExponent)
    throw BudgetExceeded("power act {0,1}^S refused for |S| = " +
                         std::to_string(n) + " > 20");
  const std::size_t m = std::size_t{1} << n;
  std::vector<Index> action(m * n);
  for (std::size_t f = 0; f < m; ++f)
    for (Index x = 0; x < n; ++x) {
      Index g = 0;
      for (Index t = 0; t < n; ++t)
        if ((f >> (*s)(x, t)) & 1U) g |= Index{1} << t;
      action[f * n + x] = g;
    }
  return Act(s, m, std::move(action));
}

Restriction restrict_to(const Act& a, ElementSet members) {
  if (!is_subact(a, members))
    throw PreconditionError("restrict_to: set is not a subact");
  const std::size_t n = a.semigroup().size();
  std::vector<Index> index_of(a.size(), 0);
  std::vector<Index> inclusion = members.to_vector();
  for (std::size_t i = 0; i < inclusion.size(); ++i)
    index_of[inclusion[i]] = static_cast<Index>(i);
  std::vector<Index> action;
  action.reserve(inclusion.size() * n);
  for (Index x : inclusion)
    for (Index s = 0; s < n; ++s) action.push_back(index_of[a(x, s)]);
  return {Act(a.semigroup_ptr(), inclusion.size(), std::move(action)),
          ActHom{std::move(inclusion)}};
}

Amalgam amalgam(const Act& x1, const Act& x2, const Act& u, const ActHom& j1,
                const ActHom& j2) {
  if (!is_homomorphism(u, x1, j1.image) || !is_homomorphism(u, x2, j2.image))
    throw PreconditionError("amalgam: j1 and j2 must be homomorphisms from U");
  if (!j1.is_injective() || !j2.is_injective())
    throw PreconditionError("amalgam: j1 and j2 must be injective");
  const Act sum = coproduct(x1, x2);
  const auto shift = static_cast<Index>(x1.size());
  std::vector<ElementPair> seeds;
  for (Index e = 0; e < u.size(); ++e) seeds.emplace_back(j1(e), j2(e) + shift);
  Quotient q = quotient(sum, congruence_closure(sum, seeds));
  ActHom first{{q.projection.image.begin(), q.projection.image.begin() + shift}};
  ActHom second{{q.projection.image.begin() + shift, q.projection.image.end()}};
  return {std::move(q.act), std::move(first), std::move(second)};
}

}  // namespace actkit
