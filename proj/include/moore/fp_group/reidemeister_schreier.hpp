#pragma once

#include <vector>

#include "moore/fp_group/presentation.hpp"

namespace moore {

/// Kernel of an onto map from a presented group to a finite group, with the
/// Schreier transversal built by breadth-first search over the target.
class SchreierKernel {
 public:
  /// Throws DomainError if the map is not onto or does not kill a relator.
  SchreierKernel(Presentation source, FiniteHomomorphism onto);

  const Presentation& source() const { return source_; }
  const FiniteHomomorphism& map() const { return onto_; }
  /// Presentation of the kernel on the nontrivial Schreier generators.
  const Presentation& kernel() const { return kernel_; }
  std::size_t index() const { return reps_.size(); }
  /// Transversal word for each target element.
  const std::vector<Word>& transversal() const { return reps_; }
  /// Word in the source generators for kernel generator k.
  const Word& generator_word(int k) const { return gen_words_.at(k); }

  /// Rewrites w, read from coset `start`, into kernel generators. Throws
  /// DomainError unless w returns to `start` (i.e. start-conjugate of w lies
  /// in the kernel).
  Word rewrite(const Word& w, Index start = 0) const;
  /// Exponent-sum vector of rewrite(w, start).
  std::vector<long long> rewrite_abelian(const Word& w, Index start = 0) const;

 private:
  int schreier_index(Index coset, int gen) const {
    return index_[coset * source_.generators.size() + gen];
  }

  Presentation source_;
  FiniteHomomorphism onto_;
  Presentation kernel_;
  std::vector<Word> reps_;
  std::vector<int> index_;  // -1 for tree edges
  std::vector<Word> gen_words_;
};

/// Kernel presentation of `onto`.
Presentation reidemeister_schreier(const Presentation& pres, const FiniteHomomorphism& onto);

}  // namespace moore
