#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "moore/fp_group/finite_group.hpp"

namespace moore {

struct Syllable {
  int copy = 0;
  Index element = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Reduced word: no identity syllables, no two adjacent syllables in the
/// same copy. The empty word is the identity.
using FreeProductWord = std::vector<Syllable>;

/// Free product of `copies` copies of one finite group.
class FreeProduct {
 public:
  FreeProduct(FiniteGroupPtr factor, int copies);

  const FiniteGroupPtr& factor() const { return factor_; }
  int copies() const { return copies_; }

  /// Throws DomainError on a copy index outside [0, copies).
  FreeProductWord reduce(const FreeProductWord& w) const;
  FreeProductWord mul(const FreeProductWord& a, const FreeProductWord& b) const;
  FreeProductWord inverse(const FreeProductWord& a) const;
  FreeProductWord commutator(const FreeProductWord& a, const FreeProductWord& b) const;

  /// Syllables written `label@copy` joined by `*`; the empty word is `e`.
  std::string format(const FreeProductWord& w) const;
  FreeProductWord parse(std::string_view text) const;

 private:
  void append(FreeProductWord& out, Syllable s) const;

  FiniteGroupPtr factor_;
  int copies_;
};

using FreeProductPtr = std::shared_ptr<const FreeProduct>;

}  // namespace moore
