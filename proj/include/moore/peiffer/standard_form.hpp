#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "moore/peiffer/pairing.hpp"

namespace moore {

/// s_i(h) with h in G_{n-1}.
struct DegeneracyFactor {
  int i = 0;
  GroupElement h;
};
using DegeneracyWord = std::vector<DegeneracyFactor>;

GroupElement evaluate(const SimplicialGroupModel& m, int n, const DegeneracyWord& w);

/// Parses `s0(h)*s1(h')` with h in the model's element syntax for level n-1.
DegeneracyWord parse_degeneracy_word(const SimplicialGroupModel& m, int n, std::string_view text);

/// Breadth-first search over products of s_i(t), t a generator of G_{n-1},
/// for a word evaluating to g; nullopt if g is not reached within `limit` elements.
std::optional<DegeneracyWord> degeneracy_word_for(const SimplicialGroupModel& m, int n,
                                                  const GroupElement& g, std::size_t limit = 200000);

struct NuFactor {
  GroupElement conjugator;
  PeifferGenerator generator;
  int exponent = 1;
};

/// g = (prod_k c_k F_k^{e_k} c_k^-1) * prod_{alpha != empty} s_alpha(x_alpha).
struct StandardFormCertificate {
  int n = 0;
  GroupElement input;
  /// Every alpha in S(n) minus the empty tuple, increasing.
  std::vector<std::pair<SurjTuple, GroupElement>> components;
  std::vector<NuFactor> nu;
  std::size_t steps = 0;

  GroupElement nu_product() const;
  GroupElement reconstruct(const SimplicialGroupModel& m) const;
  bool components_trivial() const;
};

/// Sorts the factors of a degeneracy word into increasing S(n) order, moving
/// each new factor rightward past smaller ones and recording the pairing
/// value each swap produces. Throws ResourceError after max_steps swaps.
StandardFormCertificate standard_form(const SimplicialGroupModel& m, int n, const DegeneracyWord& w,
                                      std::size_t max_steps = 1000000);

}  // namespace moore
