#pragma once

#include <functional>
#include <string>
#include <variant>

#include "moore/fp_group/finite_group.hpp"
#include "moore/fp_group/free_product.hpp"

namespace moore {

/// Either a finite group or a free product of finite groups. Two handles are
/// the same group iff they point to the same object.
class GroupHandle {
 public:
  GroupHandle() = default;
  GroupHandle(FiniteGroupPtr g) : rep_(std::move(g)) {}
  GroupHandle(FreeProductPtr g) : rep_(std::move(g)) {}

  bool is_finite() const { return std::holds_alternative<FiniteGroupPtr>(rep_); }
  const FiniteGroupPtr& finite() const { return std::get<FiniteGroupPtr>(rep_); }
  const FreeProductPtr& product() const { return std::get<FreeProductPtr>(rep_); }
  const void* id() const;

  friend bool operator==(const GroupHandle& a, const GroupHandle& b) {
    return a.id() == b.id();
  }

 private:
  std::variant<FiniteGroupPtr, FreeProductPtr> rep_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FiniteGroupPtr g, Index i);
  GroupElement(FreeProductPtr g, FreeProductWord w);
  static GroupElement identity(const GroupHandle& h);

  GroupHandle handle() const;
  bool is_finite() const { return std::holds_alternative<Finite>(rep_); }
  Index index() const { return std::get<Finite>(rep_).index; }
  const FreeProductWord& word() const { return std::get<Product>(rep_).word; }
  const FiniteGroupPtr& finite_group() const { return std::get<Finite>(rep_).group; }
  const FreeProductPtr& product_group() const { return std::get<Product>(rep_).group; }

  bool is_identity() const;
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  struct Finite {
    FiniteGroupPtr group;
    Index index;
  };
  struct Product {
    FreeProductPtr group;
    FreeProductWord word;
  };
  std::variant<Finite, Product> rep_;
};

/// Throw GroupMismatch unless both operands share a handle.
GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
/// a b a^-1 b^-1
GroupElement commutator(const GroupElement& a, const GroupElement& b);
/// g x g^-1
GroupElement conjugate(const GroupElement& g, const GroupElement& x);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const { return e.hash(); }
};

}  // namespace moore
