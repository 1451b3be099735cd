#pragma once

#include <vector>

#include "moore/fp_group/element.hpp"
#include "moore/fp_group/finite_group.hpp"

namespace moore {

/// Subgroup of a finite group grown one generator at a time.
class Subgroup {
 public:
  /// Throws ResourceError when the ambient order exceeds max_elements().
  explicit Subgroup(FiniteGroupPtr ambient);

  /// Returns true if x was not already a member.
  bool add_generator(Index x);
  bool contains(Index x) const { return member_[x] != 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Index>& elements() const { return elements_; }
  const std::vector<Index>& generators() const { return generators_; }
  const FiniteGroupPtr& ambient() const { return ambient_; }
  /// Membership flags indexed by ambient element.
  const std::vector<char>& members() const { return member_; }

 private:
  FiniteGroupPtr ambient_;
  std::vector<char> member_;
  std::vector<Index> elements_;
  std::vector<Index> generators_;
};

/// Greedy generating set; deterministic.
std::vector<Index> generating_set(const FiniteGroup& g);

Subgroup subgroup_closure(FiniteGroupPtr ambient, const std::vector<Index>& gens);

/// Smallest normal subgroup containing gens.
Subgroup normal_closure_finite(FiniteGroupPtr ambient, const std::vector<Index>& gens);
Subgroup normal_closure_finite(const std::vector<GroupElement>& gens, FiniteGroupPtr ambient);

/// True iff conjugating any member by any element of `by` stays inside.
bool is_normalized_by(const Subgroup& h, const std::vector<Index>& by);

}  // namespace moore
