#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moore/fp_group/finite_group.hpp"

namespace moore {

/// Generator k (zero-based) is the letter k+1, its inverse -(k+1).
using Letter = int;
using Word = std::vector<Letter>;

inline Letter gen_letter(int k) { return k + 1; }
inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
Word inverse_word(const Word& w);
/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);
Word word_commutator(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Throws DomainError if a relator mentions an undeclared generator.
  void validate() const;
  std::string format_word(const Word& w) const;
  std::string to_string() const;
};

/// Parses `gens: a, b ; rels: a^2, b^2, (a*b)^3`. Words use `*`, `^k`,
/// `^-1`, parentheses and `[u,v]` (= u v u^-1 v^-1); `1` is the empty word.
Presentation parse_presentation(std::string_view text);
Word parse_word(const Presentation& p, std::string_view text);

/// Multiplication-table presentation: one generator per non-identity
/// element, relators x y (xy)^-1.
Presentation table_presentation(const FiniteGroup& g);

/// Map from a presented group to a finite group given by generator images.
struct FiniteHomomorphism {
  FiniteGroupPtr target;
  std::vector<Index> images;

  Index evaluate(const Word& w) const;
  bool preserves_relators(const Presentation& p) const;
  bool is_onto() const;
};

}  // namespace moore
