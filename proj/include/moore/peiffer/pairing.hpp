#pragma once

#include <random>
#include <vector>

#include "moore/fp_group/errors.hpp"
#include "moore/simplicial_core/model.hpp"
#include "moore/simplex_maps/surj_tuple.hpp"

namespace moore {

/// An argument of a pairing failed the Moore membership test.
class MooreMembershipError : public DomainError {
 public:
  MooreMembershipError(std::string argument, int level, int face);
  const std::string& argument() const { return argument_; }
  int level() const { return level_; }
  int face() const { return face_; }

 private:
  std::string argument_;
  int level_;
  int face_;
};

/// p_j(z) = z s_j d_j(z)^-1 for 0 <= j <= n-1.
GroupElement p_j(const SimplicialGroupModel& m, int n, int j, const GroupElement& z);
/// p = p_{n-1} ... p_0 (p_0 applied first).
GroupElement p_full(const SimplicialGroupModel& m, int n, const GroupElement& z);

struct PeifferGenerator {
  int n = 0;
  PeifferPair pair;
  GroupElement x;
  GroupElement y;
  GroupElement value;
};

/// F_{alpha,beta}(x, y) = p[s_alpha x, s_beta y]. Throws MooreMembershipError
/// unless x in NG_{n-#alpha} and y in NG_{n-#beta}.
PeifferGenerator F(const SimplicialGroupModel& m, const PeifferPair& pair, const GroupElement& x,
                   const GroupElement& y);

/// Where pairing arguments come from. Finite Moore levels are always used
/// exhaustively; infinite ones use known generators, all kernel words up to
/// `syllable_bound` (level 2 of the Carlsson model), and `samples` random
/// elements pushed into NG by p.
struct ArgumentSource {
  int syllable_bound = 2;
  int samples = 16;
  unsigned seed = 7;
  /// Cap on arguments per level after deduplication.
  std::size_t max_arguments = 4096;
};

/// Candidate elements of NG_m.
std::vector<GroupElement> moore_arguments(const SimplicialGroupModel& m, int level,
                                          const ArgumentSource& src = {});

/// One generator per (pair, x, y), deduplicated by value; identity values dropped.
std::vector<PeifferGenerator> peiffer_generators(const SimplicialGroupModel& m, int n,
                                                 const ArgumentSource& src = {});

}  // namespace moore
