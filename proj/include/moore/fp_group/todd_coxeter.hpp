#pragma once

#include <cstdint>
#include <vector>

#include "moore/fp_group/presentation.hpp"

namespace moore {

struct CosetTable {
  enum class Status { closed, undecided_at_bound };
  Status status = Status::undecided_at_bound;
  std::size_t index = 0;
  /// index x (2 * generators); column 2k is generator k, 2k+1 its inverse.
  std::vector<std::uint32_t> table;
  std::size_t columns = 0;
  /// Largest number of simultaneously allocated cosets.
  std::size_t peak = 0;

  std::uint32_t act(std::uint32_t coset, Letter l) const {
    int k = letter_gen(l);
    return table[coset * columns + 2 * k + (l < 0 ? 1 : 0)];
  }
  std::uint32_t trace(std::uint32_t coset, const Word& w) const {
    for (Letter l : w) coset = act(coset, l);
    return coset;
  }
};

/// HLT coset enumeration with a fixed scan order. On success the table is
/// renumbered so coset 0 is the subgroup and cosets appear in order of
/// first definition.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                        std::size_t max_cosets);

}  // namespace moore
