#include <set>

#include "moore/fp_group/errors.hpp"

#include "moore/fp_group/todd_coxeter.hpp"
#include "moore/homotopy/homotopy.hpp"

namespace moore {

std::optional<std::size_t> TensorSquare::order() const {
  if (!group) return std::nullopt;
  return group->order();
}

TensorSquare tensor_square(const FiniteGroupPtr& pi, std::size_t max_cosets) {
  if (pi->order() > 8) throw DomainError("tensor_square supports |pi| <= 8");
  const auto& g = *pi;
  const Index q = static_cast<Index>(g.order());
  TensorSquare t;
  t.pi = pi;
  t.coset_bound = max_cosets;
  auto& p = t.presentation;
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b) p.generators.push_back(g.label(a) + "(x)" + g.label(b));
  auto sym = [&](Index a, Index b) { return gen_letter(t.generator(a, b)); };
  std::set<Word> seen;
  auto add = [&](Word w) {
    w = free_reduce(w);
    if (!w.empty() && seen.insert(w).second) p.relators.push_back(std::move(w));
  };
  for (Index a = 0; a < q; ++a)
    for (Index a2 = 0; a2 < q; ++a2)
      for (Index h = 0; h < q; ++h) {
        // a a2 (x) h = (^a a2 (x) ^a h)(a (x) h)
        add({-sym(g.mul(a, a2), h), sym(g.conjugate(a, a2), g.conjugate(a, h)), sym(a, h)});
        // h (x) a a2 = (h (x) a)(^a h (x) ^a a2)
        add({-sym(h, g.mul(a, a2)), sym(h, a), sym(g.conjugate(a, h), g.conjugate(a, a2))});
      }

  t.kappa.target = pi;
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b) t.kappa.images.push_back(g.commutator(a, b));
  t.kappa_well_defined = t.kappa.preserves_relators(p);

  auto table = todd_coxeter(p, {}, max_cosets);
  if (table.status == CosetTable::Status::closed) {
    FiniteGroup::RegularAction act;
    act.generator_names = p.generators;
    act.order = table.index;
    act.columns.assign(table.table.begin(), table.table.end());
    t.group = FiniteGroup::from_regular_action(std::move(act), g.name() + "(x)" + g.name());
  }
  return t;
}

AbelianInvariants bilinear_tensor_invariants(const FiniteGroup& pi) {
  if (!pi.is_abelian()) throw DomainError("bilinear tensor oracle needs abelian pi");
  const std::size_t q = pi.order();
  std::vector<std::vector<long long>> rows;
  auto col = [&](Index a, Index b) { return a * q + b; };
  for (Index a = 0; a < q; ++a)
    for (Index a2 = 0; a2 < q; ++a2)
      for (Index h = 0; h < q; ++h) {
        std::vector<long long> r(q * q, 0), s(q * q, 0);
        r[col(pi.mul(a, a2), h)] += 1;
        r[col(a, h)] -= 1;
        r[col(a2, h)] -= 1;
        s[col(h, pi.mul(a, a2))] += 1;
        s[col(h, a)] -= 1;
        s[col(h, a2)] -= 1;
        rows.push_back(std::move(r));
        rows.push_back(std::move(s));
      }
  return invariants_from_matrix(rows, q * q);
}

HomotopyResult j2(const TensorSquare& t) {
  HomotopyResult r;
  r.degree = 3;
  r.method = HomotopyResult::Method::enumeration;
  if (!t.group) {
    r.method = HomotopyResult::Method::undecided_at_bound;
    r.bound = static_cast<int>(t.coset_bound);
    return r;
  }
  if (!t.kappa_well_defined) throw Error("kappa does not respect the tensor relators");
  const auto& pi = *t.pi;
  if (pi.is_abelian()) {
    if (!t.group->is_abelian()) throw Error("tensor square of an abelian group is nonabelian");
    r.invariants = finite_abelian_invariants(*t.group);
    r.order = t.group->order();
    return r;
  }
  std::vector<Index> comms;
  for (Index a = 0; a < pi.order(); ++a)
    for (Index b = 0; b < pi.order(); ++b) comms.push_back(pi.commutator(a, b));
  auto image = subgroup_closure(t.pi, comms);
  r.order = t.group->order() / image.size();
  r.structure_known = false;
  return r;
}

}  // namespace moore
