#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moore/fp_group/closure.hpp"
#include "moore/simplicial_core/model.hpp"

namespace moore {

/// Index of the first face d_i, i < n, that does not kill x; nullopt when x is in NG_n.
std::optional<int> moore_failure(const SimplicialGroupModel& m, int n, const GroupElement& x);
inline bool in_moore(const SimplicialGroupModel& m, int n, const GroupElement& x) {
  return !moore_failure(m, n, x);
}

struct MooreLevel {
  int n = 0;
  /// All of NG_n on finite levels.
  std::vector<GroupElement> elements;
  /// On infinite levels: a generating set when one is known (Schreier
  /// generators of NG_2), else empty and membership is the only access.
  std::vector<GroupElement> generators;
  bool exhaustive = false;
};

MooreLevel moore_level(const SimplicialGroupModel& m, int n);

/// d_n restricted to NG_n; throws DomainError when x is not in NG_n.
GroupElement boundary(const SimplicialGroupModel& m, int n, const GroupElement& x);

struct DegenerateSubgroup {
  int n = 0;
  /// Images s_i(t) of generators t of G_{n-1}.
  std::vector<GroupElement> generators;
  /// The subgroup they generate, on finite levels.
  std::optional<Subgroup> finite;
};

DegenerateSubgroup degenerate_subgroup(const SimplicialGroupModel& m, int n);

/// (k, s_0 d_0 g) with k = g (s_0 d_0 g)^-1.
std::pair<GroupElement, GroupElement> theta(const SimplicialGroupModel& m, int n,
                                            const GroupElement& g);

struct Decomposition {
  int n = 0;
  /// One entry per alpha in S(n), in increasing order; the first is the NG_n part.
  std::vector<std::pair<SurjTuple, GroupElement>> components;

  const GroupElement& at(const SurjTuple& alpha) const;
  const GroupElement& moore_part() const { return components.front().second; }
};

/// g = y * prod_{alpha != empty, increasing} s_alpha(x_alpha), x_alpha in NG_{n-#alpha}.
Decomposition decompose(const SimplicialGroupModel& m, int n, const GroupElement& g);
GroupElement reconstruct(const SimplicialGroupModel& m, const Decomposition& d);

struct Violation {
  std::string identity;
  int n = 0;
  int i = 0;
  int j = 0;
  std::string witness;
};

struct ValidationReport {
  std::size_t checks = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the simplicial identities and the homomorphism property on levels
/// up to nmax: every element of finite levels of order <= 10^4, otherwise
/// generators plus `samples` random elements.
ValidationReport validate(const SimplicialGroupModel& m, int nmax, int samples = 64,
                          unsigned seed = 1);

/// Elements used as test inputs on level n: all of G_n when finite and
/// small, else generators plus random products.
std::vector<GroupElement> sample_level(const SimplicialGroupModel& m, int n, int samples,
                                       std::mt19937& rng, std::size_t exhaustive_limit = 10000);

}  // namespace moore
