#include "moore/fp_group/closure.hpp"

#include <algorithm>

#include "moore/fp_group/errors.hpp"

namespace moore {

Subgroup::Subgroup(FiniteGroupPtr ambient) : ambient_(std::move(ambient)) {
  if (ambient_->order() > max_elements())
    throw ResourceError("group of order " + std::to_string(ambient_->order()) +
                        " exceeds the element bound " + std::to_string(max_elements()));
  member_.assign(ambient_->order(), 0);
  member_[0] = 1;
  elements_.push_back(0);
}

bool Subgroup::add_generator(Index x) {
  if (member_[x]) return false;
  generators_.push_back(x);
  // Every product of old elements and generators is reachable by right
  // multiplication from the current member list.
  std::vector<Index> queue = elements_;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index e = queue[head];
    for (Index g : generators_) {
      Index f = ambient_->mul(e, g);
      if (!member_[f]) {
        member_[f] = 1;
        elements_.push_back(f);
        queue.push_back(f);
      }
    }
  }
  return true;
}

std::vector<Index> generating_set(const FiniteGroup& g) {
  Subgroup h(std::shared_ptr<const FiniteGroup>(&g, [](const FiniteGroup*) {}));
  // Prefer elements of large order: fewer generators.
  std::vector<std::pair<std::size_t, Index>> by_order;
  for (Index x = 1; x < g.order(); ++x) by_order.push_back({g.element_order(x), x});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto [o, x] : by_order) {
    if (h.size() == g.order()) break;
    h.add_generator(x);
  }
  return h.generators();
}

Subgroup subgroup_closure(FiniteGroupPtr ambient, const std::vector<Index>& gens) {
  Subgroup h(std::move(ambient));
  for (Index x : gens) h.add_generator(x);
  return h;
}

Subgroup normal_closure_finite(FiniteGroupPtr ambient, const std::vector<Index>& gens) {
  Subgroup h(ambient);
  auto conj = generating_set(*ambient);
  std::vector<Index> pending(gens.begin(), gens.end());
  while (!pending.empty()) {
    Index x = pending.back();
    pending.pop_back();
    if (!h.add_generator(x)) continue;
    for (Index t : conj) pending.push_back(ambient->conjugate(t, x));
  }
  return h;
}

Subgroup normal_closure_finite(const std::vector<GroupElement>& gens, FiniteGroupPtr ambient) {
  std::vector<Index> idx;
  for (const auto& g : gens) {
    if (!g.is_finite() || g.finite_group() != ambient)
      throw GroupMismatch("normal closure generator lies outside the ambient group");
    idx.push_back(g.index());
  }
  return normal_closure_finite(std::move(ambient), idx);
}

bool is_normalized_by(const Subgroup& h, const std::vector<Index>& by) {
  const auto& g = *h.ambient();
  for (Index t : by)
    for (Index x : h.elements())
      if (!h.contains(g.conjugate(t, x))) return false;
  return true;
}

}  // namespace moore
