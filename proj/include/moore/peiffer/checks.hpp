#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moore/peiffer/pairing.hpp"
#include "moore/simplicial_core/models.hpp"

namespace moore {

struct TheoremAReport {
  int n = 0;
  std::size_t moore_size = 0;        // |NG_n|
  std::size_t degenerate_size = 0;   // |D_n|
  std::size_t peiffer_size = 0;      // |N_n|
  std::size_t generators = 0;        // distinct nontrivial pairing values
  std::size_t moore_cap_d = 0;       // |NG_n ∩ D_n|
  std::size_t peiffer_cap_d = 0;     // |N_n ∩ D_n|
  bool sets_equal = false;
  bool boundary_images_equal = false;
  bool level_is_degenerate = false;  // D_n = G_n
  /// d NG_n = d N_n; meaningful when level_is_degenerate.
  bool brown_loday = false;
  bool ok() const { return sets_equal && boundary_images_equal; }
};

/// Both sides of NG_n ∩ D_n = N_n ∩ D_n as element sets of a finite level.
TheoremAReport theorem_A_check(const SimplicialGroupModel& m, int n);

struct CrossedComplexReport {
  bool pairings_vanish = true;
  std::optional<PeifferGenerator> witness;
  /// NG_n ∩ D_n = 1 for 2 <= n <= nmax (finite levels only).
  std::optional<bool> intersections_trivial;
  std::optional<int> nontrivial_level;
  bool agree() const { return !intersections_trivial || *intersections_trivial == pairings_vanish; }
};

CrossedComplexReport crossed_complex_check(const SimplicialGroupModel& m, int nmax,
                                           const ArgumentSource& src = {});

/// F_{(0)(1)}(x, x) in dimension n+1 for a Moore cycle x of level n; throws
/// DomainError unless x is a cycle, and Error if the result is not one.
PeifferGenerator eta(const SimplicialGroupModel& m, int n, const GroupElement& x);

/// k with p_k(v) != v among the k the fixed-point statements cover, for
/// v = [s_alpha x, s_beta y]: k <= i_1, or k > i_l + 1, or k > j_m + 1.
std::optional<int> commutator_fixed_point_failure(const SimplicialGroupModel& m, const PeifferPair& pair,
                                   const GroupElement& x, const GroupElement& y);

/// Recomputes p_l ... p_1 v as v prod s_i(z_i)^-1 and checks d_j z_i = 1 for j < i.
bool projection_shape_holds(const SimplicialGroupModel& m, const PeifferPair& pair, const GroupElement& x,
                   const GroupElement& y, int l);

/// s_a x s_b y s_a x^-1 = s_{a∩b}(s_a' x s_b' y s_a' x^-1) with a' ∩ b' empty.
bool degenerate_conjugation_holds(const SimplicialGroupModel& m, const SurjTuple& a, const SurjTuple& b,
                   const GroupElement& x, const GroupElement& y);

/// The tuple a' with s_{a∩b} s_{a'} = s_a.
SurjTuple conjugation_reindex(const SurjTuple& a, const SurjTuple& common);

struct CarlssonReport {
  std::size_t cases = 0;
  std::size_t expansion_failures = 0;    // F_{(0)(1)}(g,h) word
  std::size_t conjugation_failures = 0;  // corrected conjugation identity
  std::size_t printed_form_failures = 0; // F(kg,h) F(kg,ghg^-1), for the record
  std::size_t boundary_failures = 0;     // d_2 F(h,g) = [g,h]
  bool level_structure = false;          // NH_1 = pi, H_2 free on two copies
};

/// Exhaustive over g, h, k in pi.
CarlssonReport carlsson_identities(const CarlssonModel& m);

}  // namespace moore
