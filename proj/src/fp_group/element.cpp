#include "moore/fp_group/element.hpp"

#include "moore/fp_group/errors.hpp"

namespace moore {

const void* GroupHandle::id() const {
  return std::visit([](const auto& p) -> const void* { return p.get(); }, rep_);
}

GroupElement::GroupElement(FiniteGroupPtr g, Index i) : rep_(Finite{std::move(g), i}) {
  if (i >= finite_group()->order()) throw DomainError("element index out of range");
}

GroupElement::GroupElement(FreeProductPtr g, FreeProductWord w)
    : rep_(Product{g, g->reduce(w)}) {}

GroupElement GroupElement::identity(const GroupHandle& h) {
  if (h.is_finite()) return GroupElement(h.finite(), 0);
  return GroupElement(h.product(), {});
}

GroupHandle GroupElement::handle() const {
  if (is_finite()) return GroupHandle(finite_group());
  return GroupHandle(product_group());
}

bool GroupElement::is_identity() const {
  return is_finite() ? index() == 0 : word().empty();
}

std::string GroupElement::to_string() const {
  return is_finite() ? finite_group()->label(index()) : product_group()->format(word());
}

std::size_t GroupElement::hash() const {
  if (is_finite()) return std::hash<Index>{}(index());
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& s : word())
    h = (h ^ (static_cast<std::size_t>(s.copy) * 1315423911u + s.element)) * 0x100000001b3ull;
  return h;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.is_finite() != b.is_finite()) return false;
  if (a.is_finite())
    return a.finite_group() == b.finite_group() && a.index() == b.index();
  return a.product_group() == b.product_group() && a.word() == b.word();
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.is_finite() && b.is_finite()) return a.index() < b.index();
  if (!a.is_finite() && !b.is_finite()) return a.word() < b.word();
  return a.is_finite();
}

namespace {
void check(const GroupElement& a, const GroupElement& b) {
  if (!(a.handle() == b.handle()))
    throw GroupMismatch("operands belong to different groups");
}
}  // namespace

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  check(a, b);
  if (a.is_finite())
    return GroupElement(a.finite_group(), a.finite_group()->mul(a.index(), b.index()));
  return GroupElement(a.product_group(), a.product_group()->mul(a.word(), b.word()));
}

GroupElement inverse(const GroupElement& a) {
  if (a.is_finite())
    return GroupElement(a.finite_group(), a.finite_group()->inverse(a.index()));
  return GroupElement(a.product_group(), a.product_group()->inverse(a.word()));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
  return mul(mul(g, x), inverse(g));
}

}  // namespace moore
