#include <limits>
#include <string>

#include "actkit/act.hpp"
#include "actkit/error.hpp"

namespace actkit {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

class HomSearch {
 public:
  HomSearch(const Act& source, const Act& target, HomMode mode,
            std::uint64_t budget)
      : source_(source),
        target_(target),
        mode_(mode),
        budget_(budget),
        injective_(mode == HomMode::Monomorphisms ||
                   mode == HomMode::Isomorphisms ||
                   mode == HomMode::FirstEmbedding),
        image_(source.size(), kUnset),
        used_(injective_ ? target.size() : 0, 0) {}

  std::vector<ActHom> run() {
    if (mode_ == HomMode::Isomorphisms && source_.size() != target_.size())
      return {};
    if (injective_ && source_.size() > target_.size()) return {};
    search(0);
    return std::move(results_);
  }

 private:
  // Assigns x ↦ y and pushes the assignment along the action. Returns false
  // on a conflict; partial assignments stay on the trail for undo().
  bool assign(Index x, Index y) {
    pending_.clear();
    pending_.emplace_back(x, y);
    const auto n = static_cast<Index>(source_.semigroup().size());
    while (!pending_.empty()) {
      const auto [a, b] = pending_.back();
      pending_.pop_back();
      if (image_[a] != kUnset) {
        if (image_[a] != b) return false;
        continue;
      }
      if (injective_ && used_[b]) return false;
      if (++nodes_ > budget_)
        throw BudgetExceeded("homomorphism search exceeded " +
                             std::to_string(budget_) + " nodes");
      image_[a] = b;
      if (injective_) used_[b] = 1;
      trail_.push_back(a);
      for (Index s = 0; s < n; ++s)
        pending_.emplace_back(source_(a, s), target_(b, s));
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Index a = trail_.back();
      trail_.pop_back();
      if (injective_) used_[image_[a]] = 0;
      image_[a] = kUnset;
    }
  }

  void search(Index from) {
    while (from < source_.size() && image_[from] != kUnset) ++from;
    if (from == source_.size()) {
      results_.push_back(ActHom{image_});
      if (mode_ == HomMode::FirstEmbedding) done_ = true;
      return;
    }
    for (Index b = 0; b < target_.size() && !done_; ++b) {
      if (injective_ && used_[b]) continue;
      const std::size_t mark = trail_.size();
      if (assign(from, b)) search(from + 1);
      undo(mark);
    }
  }

  const Act& source_;
  const Act& target_;
  HomMode mode_;
  std::uint64_t budget_;
  bool injective_;
  std::vector<Index> image_;
  std::vector<char> used_;
  std::vector<Index> trail_;
  std::vector<std::pair<Index, Index>> pending_;
  std::vector<ActHom> results_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace

std::vector<ActHom> homomorphisms(const Act& source, const Act& target,
                                  HomMode mode, std::uint64_t node_budget) {
  if (mode == HomMode::Endomorphisms)
    return HomSearch(source, source, HomMode::All, node_budget).run();
  if (!same_semigroup(source, target))
    throw PreconditionError("homomorphisms between acts over different "
                            "semigroups");
  return HomSearch(source, target, mode, node_budget).run();
}

std::vector<ActHom> endomorphisms(const Act& a) {
  return homomorphisms(a, a, HomMode::Endomorphisms);
}

std::optional<ActHom> first_embedding(const Act& source, const Act& target) {
  auto found = homomorphisms(source, target, HomMode::FirstEmbedding);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace actkit
