#pragma once

#include <optional>
#include <string>

#include "moore/fp_group/smith.hpp"
#include "moore/simplicial_core/models.hpp"

namespace moore {

struct HomotopyResult {
  enum class Method { enumeration, rs_snf, undecided_at_bound };
  int degree = 0;
  AbelianInvariants invariants;
  /// Group order when finite.
  std::optional<std::size_t> order;
  bool abelian = true;
  /// False when only the order was determined.
  bool structure_known = true;
  /// The group itself when it was computed by enumeration.
  FiniteGroupPtr group;
  Method method = Method::enumeration;
  std::optional<int> bound;
  std::optional<bool> stable;

  std::string method_name() const;
  /// Invariants, or the order for a nonabelian group.
  std::string to_string() const;
};

/// Ker d_n / d_{n+1} NG_{n+1} by enumeration over finite levels.
HomotopyResult homotopy_finite(const SimplicialGroupModel& m, int n);

/// pi_1 of pi smash S^1: pi modulo the normal closure of its commutators.
HomotopyResult carlsson_pi1(const FiniteGroupPtr& pi);

/// NG_2 modulo the d_3-images of the six pairing types, at one bound.
struct Pi2Stage {
  int bound = 0;
  std::size_t arguments = 0;  // NG_2 words used
  std::size_t images = 0;     // distinct nontrivial d_3 images
  /// Longest Schreier generator of NG_2, in syllables; below it the
  /// arguments do not even generate NG_2.
  int generator_length = 0;
  bool covers_generators() const { return bound >= generator_length; }
  AbelianInvariants moore_invariants;  // NG_2 alone, from the Schreier relators
  AbelianInvariants invariants;
};

/// One pipeline stage; abelian pi only.
Pi2Stage carlsson_pi2_stage(const FiniteGroupPtr& pi, int bound);

/// Runs stages at `bound` and `bound + 1`; stable when they agree and the
/// first already reaches every Schreier generator.
HomotopyResult carlsson_pi2(const FiniteGroupPtr& pi, int bound);

struct TensorSquare {
  FiniteGroupPtr pi;
  /// Generator g*|pi|+h is g (x) h.
  Presentation presentation;
  /// kappa(g (x) h) = [g, h].
  FiniteHomomorphism kappa;
  bool kappa_well_defined = false;
  /// From coset enumeration over the trivial subgroup; null when undecided.
  FiniteGroupPtr group;
  std::size_t coset_bound = 0;

  int generator(Index g, Index h) const { return static_cast<int>(g * pi->order() + h); }
  std::optional<std::size_t> order() const;
};

TensorSquare tensor_square(const FiniteGroupPtr& pi, std::size_t max_cosets = 1000000);

/// Invariants of the bilinear presentation of an abelian pi, by SNF.
AbelianInvariants bilinear_tensor_invariants(const FiniteGroup& pi);

/// J_2(pi) = Ker kappa. Abelian pi: the tensor square itself. Otherwise only
/// the order is reported.
HomotopyResult j2(const TensorSquare& t);

}  // namespace moore
