#include "moore/peiffer/checks.hpp"

#include <set>

#include "moore/simplicial_core/moore.hpp"

namespace moore {

TheoremAReport theorem_A_check(const SimplicialGroupModel& m, int n) {
  if (n < 2) throw DomainError("degenerate intersection check needs n >= 2");
  auto h = m.level(n);
  if (!h.is_finite()) throw Unsupported("degenerate intersection check needs finite levels");
  const auto& g = h.finite();
  TheoremAReport r;
  r.n = n;
  auto ng = moore_level(m, n);
  auto d = degenerate_subgroup(m, n);
  const auto& dn = *d.finite;
  auto gens = peiffer_generators(m, n);
  std::vector<Index> vals;
  for (const auto& p : gens) vals.push_back(p.value.index());
  auto nn = normal_closure_finite(g, vals);
  r.moore_size = ng.elements.size();
  r.degenerate_size = dn.size();
  r.peiffer_size = nn.size();
  r.generators = gens.size();
  r.level_is_degenerate = dn.size() == g->order();

  std::set<Index> a, b, da, db, dng, dnn;
  for (const auto& x : ng.elements) {
    dng.insert(m.face(n, n, x).index());
    if (dn.contains(x.index())) a.insert(x.index());
  }
  for (Index x : nn.elements()) {
    dnn.insert(m.face(n, n, GroupElement(g, x)).index());
    if (dn.contains(x)) b.insert(x);
  }
  for (Index x : a) da.insert(m.face(n, n, GroupElement(g, x)).index());
  for (Index x : b) db.insert(m.face(n, n, GroupElement(g, x)).index());
  r.moore_cap_d = a.size();
  r.peiffer_cap_d = b.size();
  r.sets_equal = a == b;
  r.boundary_images_equal = da == db;
  r.brown_loday = dng == dnn;
  return r;
}

CrossedComplexReport crossed_complex_check(const SimplicialGroupModel& m, int nmax,
                                           const ArgumentSource& src) {
  CrossedComplexReport r;
  bool finite = true;
  for (int n = 2; n <= nmax; ++n) finite = finite && m.is_finite(n);
  if (finite) r.intersections_trivial = true;
  for (int n = 2; n <= nmax; ++n) {
    auto gens = peiffer_generators(m, n, src);
    if (!gens.empty() && r.pairings_vanish) {
      r.pairings_vanish = false;
      r.witness = gens.front();
    }
    if (finite && !r.nontrivial_level) {
      auto ng = moore_level(m, n);
      auto d = degenerate_subgroup(m, n);
      for (const auto& x : ng.elements)
        if (!x.is_identity() && d.finite->contains(x.index())) {
          r.intersections_trivial = false;
          r.nontrivial_level = n;
          break;
        }
    }
  }
  return r;
}

PeifferGenerator eta(const SimplicialGroupModel& m, int n, const GroupElement& x) {
  if (n < 1) throw DomainError("eta needs n >= 1");
  if (auto f = moore_failure(m, n, x)) throw MooreMembershipError("x", n, *f);
  if (!m.face(n, n, x).is_identity()) throw DomainError("eta: argument is not a Moore cycle");
  PeifferPair pair{n + 1, SurjTuple(n + 1, {0}), SurjTuple(n + 1, {1})};
  auto g = F(m, pair, x, x);
  if (!m.face(n + 1, n + 1, g.value).is_identity())
    throw Error("eta(x) is not a Moore cycle for x = " + m.format_element(x));
  return g;
}

std::optional<int> commutator_fixed_point_failure(const SimplicialGroupModel& m, const PeifferPair& pair,
                                   const GroupElement& x, const GroupElement& y) {
  const int n = pair.n;
  auto ai = pair.alpha.indices(), bi = pair.beta.indices();
  int i1 = ai.back(), il = ai.front(), jm = bi.front();
  auto v = commutator(apply_degeneracy_tuple(m, pair.alpha, x), apply_degeneracy_tuple(m, pair.beta, y));
  for (int k = 0; k < n; ++k) {
    bool covered = k <= i1 || k > il + 1 || k > jm + 1;
    if (covered && !(p_j(m, n, k, v) == v)) return k;
  }
  return std::nullopt;
}

bool projection_shape_holds(const SimplicialGroupModel& m, const PeifferPair& pair, const GroupElement& x,
                   const GroupElement& y, int l) {
  const int n = pair.n;
  auto v = commutator(apply_degeneracy_tuple(m, pair.alpha, x), apply_degeneracy_tuple(m, pair.beta, y));
  GroupElement u = v;
  GroupElement tail = m.identity(n);
  for (int i = 1; i <= l; ++i) {
    auto z = m.face(n, i, u);
    for (int j = 0; j < i; ++j)
      if (!m.face(n - 1, j, z).is_identity()) return false;
    auto s = m.degeneracy(n - 1, i, z);
    u = mul(u, inverse(s));
    tail = mul(tail, inverse(s));
  }
  GroupElement direct = v;
  for (int i = 1; i <= l; ++i) direct = p_j(m, n, i, direct);
  return direct == u && u == mul(v, tail);
}

SurjTuple conjugation_reindex(const SurjTuple& a, const SurjTuple& common) {
  const int t = common.length();
  for (const auto& cand : enumerate_S(a.dim() - t))
    if (cand.length() == a.length() - t && gamma_star(common, cand) == a) return cand;
  throw DomainError("no reindexing of " + a.to_string() + " through " + common.to_string());
}

bool degenerate_conjugation_holds(const SimplicialGroupModel& m, const SurjTuple& a, const SurjTuple& b,
                   const GroupElement& x, const GroupElement& y) {
  auto sa = apply_degeneracy_tuple(m, a, x);
  auto lhs = conjugate(sa, apply_degeneracy_tuple(m, b, y));
  auto common = intersect(a, b);
  auto a2 = conjugation_reindex(a, common), b2 = conjugation_reindex(b, common);
  if (a2.mask() & b2.mask()) return false;
  auto z = conjugate(apply_degeneracy_tuple(m, a2, x), apply_degeneracy_tuple(m, b2, y));
  return lhs == apply_degeneracy_tuple(m, common, z);
}

CarlssonReport carlsson_identities(const CarlssonModel& m) {
  CarlssonReport r;
  const auto& pi = *m.pi();
  const Index q = static_cast<Index>(pi.order());
  PeifferPair p01{2, SurjTuple(2, {0}), SurjTuple(2, {1})};
  auto sigma = [&](Index g) { return m.smash(1, g, 0); };
  auto w2 = [&](Index g, int i) { return m.smash(2, g, i); };
  auto Fv = [&](Index g, Index h) { return F(m, p01, sigma(g), sigma(h)).value; };

  auto nh1 = moore_level(m, 1);
  bool free2 = m.product_level(2)->copies() == 2 && m.product_level(1)->copies() == 1;
  r.level_structure = nh1.exhaustive && nh1.elements.size() == q && free2;

  for (Index g = 0; g < q; ++g)
    for (Index h = 0; h < q; ++h) {
      auto f = Fv(g, h);
      // (g x1)(h x0)(g^-1 x1)(g h^-1 g^-1 x0)
      auto expect = mul(mul(w2(g, 1), w2(h, 0)),
                        mul(w2(pi.inverse(g), 1), w2(pi.conjugate(g, pi.inverse(h)), 0)));
      if (!(f == expect)) ++r.expansion_failures;
      // d_2 F(h, g) = [g, h] sigma
      if (!(m.face(2, 2, Fv(h, g)) == sigma(pi.commutator(g, h)))) ++r.boundary_failures;
      for (Index k = 0; k < q; ++k) {
        ++r.cases;
        auto lhs = conjugate(w2(k, 1), f);
        Index kg = pi.mul(k, g), ghg = pi.conjugate(g, h);
        if (!(lhs == mul(Fv(kg, h), inverse(Fv(k, ghg))))) ++r.conjugation_failures;
        if (!(lhs == mul(Fv(kg, h), Fv(kg, ghg)))) ++r.printed_form_failures;
      }
    }
  return r;
}

}  // namespace moore
