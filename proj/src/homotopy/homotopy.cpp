#include "moore/homotopy/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "moore/peiffer/pairing.hpp"
#include "moore/simplicial_core/moore.hpp"

namespace moore {

std::string HomotopyResult::method_name() const {
  switch (method) {
    case Method::enumeration: return "enumeration";
    case Method::rs_snf: return "rs_snf";
    case Method::undecided_at_bound: return "undecided_at_bound";
  }
  return "?";
}

std::string HomotopyResult::to_string() const {
  if (!structure_known) return "order " + (order ? std::to_string(*order) : std::string("?"));
  if (abelian) return invariants.to_string();
  return "nonabelian of order " + (order ? std::to_string(*order) : std::string("?"));
}

namespace {

// Quotient of the subgroup `big` by its normal subgroup `small` as a table group.
FiniteGroupPtr quotient_group(const Subgroup& big, const Subgroup& small) {
  const auto& g = *big.ambient();
  std::map<Index, Index> coset_of;  // element -> coset number
  std::vector<Index> reps;
  auto add_coset = [&](Index x) {
    Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index s : small.elements()) coset_of[g.mul(x, s)] = c;
  };
  add_coset(FiniteGroup::identity());
  for (Index x : big.elements())
    if (!coset_of.count(x)) add_coset(x);
  std::vector<std::vector<Index>> table(reps.size(), std::vector<Index>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = coset_of.at(g.mul(reps[a], reps[b]));
  std::vector<std::string> labels;
  for (Index r : reps) labels.push_back(g.label(r));
  return FiniteGroup::from_table(table, labels, "quotient");
}

HomotopyResult from_group(int n, FiniteGroupPtr q) {
  HomotopyResult r;
  r.degree = n;
  r.order = q->order();
  r.abelian = q->is_abelian();
  if (r.abelian) r.invariants = finite_abelian_invariants(*q);
  r.group = std::move(q);
  return r;
}

}  // namespace

HomotopyResult homotopy_finite(const SimplicialGroupModel& m, int n) {
  if (n < 0) throw DomainError("homotopy degree must be >= 0");
  if (n + 1 > m.max_dim()) throw DomainError("model too short for degree " + std::to_string(n));
  for (int k = std::max(0, n - 1); k <= n + 1; ++k)
    if (!m.is_finite(k)) throw Unsupported("homotopy_finite needs finite levels");
  const auto& gn = m.level(n).finite();
  auto ng = moore_level(m, n);
  std::vector<Index> cycles;
  for (const auto& x : ng.elements)
    if (n == 0 || boundary(m, n, x).is_identity()) cycles.push_back(x.index());
  auto ker = subgroup_closure(gn, cycles);
  if (ker.size() != cycles.size()) throw Error("Moore cycles do not form a subgroup");
  std::vector<Index> bounds;
  for (const auto& y : moore_level(m, n + 1).elements) bounds.push_back(boundary(m, n + 1, y).index());
  auto im = subgroup_closure(gn, bounds);
  for (Index b : im.elements())
    if (!ker.contains(b)) throw Error("a boundary is not a cycle in degree " + std::to_string(n));
  if (!is_normalized_by(im, ker.elements()))
    throw Error("boundaries are not normal in the cycles in degree " + std::to_string(n));
  return from_group(n, quotient_group(ker, im));
}

HomotopyResult carlsson_pi1(const FiniteGroupPtr& pi) {
  if (pi->order() > 64) throw DomainError("carlsson_pi1 supports |pi| <= 64");
  std::vector<Index> comms;
  for (Index g = 0; g < pi->order(); ++g)
    for (Index h = 0; h < pi->order(); ++h) comms.push_back(pi->commutator(g, h));
  auto boundaries = normal_closure_finite(pi, comms);
  auto all = subgroup_closure(pi, generating_set(*pi));
  auto r = from_group(1, quotient_group(all, boundaries));
  r.method = HomotopyResult::Method::enumeration;
  return r;
}

namespace {

// Reduced level-2 words of 1..bound syllables lying in NG_2.
std::vector<GroupElement> moore2_words(const CarlssonModel& m, int bound) {
  const auto& pi = *m.pi();
  const auto& h2 = m.product_level(2);
  std::vector<GroupElement> out;
  FreeProductWord w;
  // track (d_0, d_1) images: copy 0 maps to (1, g), copy 1 to (g, g)
  auto rec = [&](auto& self, int last, Index a, Index b) -> void {
    if (!w.empty() && a == 0 && b == 0) out.emplace_back(h2, w);
    if (static_cast<int>(w.size()) == bound) return;
    for (int c = 0; c < 2; ++c) {
      if (c == last) continue;
      for (Index g = 1; g < pi.order(); ++g) {
        w.push_back({c, g});
        self(self, c, c == 0 ? a : pi.mul(a, g), pi.mul(b, g));
        w.pop_back();
      }
    }
  };
  rec(rec, -1, 0, 0);
  return out;
}

}  // namespace

Pi2Stage carlsson_pi2_stage(const FiniteGroupPtr& pi, int bound) {
  if (!pi->is_abelian()) throw Unsupported("carlsson_pi2 supports abelian pi only");
  if (pi->order() > 8) throw DomainError("carlsson_pi2 supports |pi| <= 8");
  if (bound < 1) throw DomainError("syllable bound must be >= 1");
  CarlssonModel m(pi, 3);
  auto kernel = m.moore2_kernel();
  const std::size_t cols = kernel.kernel().generators.size();
  RelationLattice lattice(cols);
  for (const auto& r : kernel.kernel().relators) {
    std::vector<long long> row(cols, 0);
    for (Letter l : r) row[letter_gen(l)] += l > 0 ? 1 : -1;
    lattice.add(row);
  }
  Pi2Stage st;
  st.bound = bound;
  st.moore_invariants = lattice.invariants();

  // d_2 vanishes on NG_2 for abelian pi, so every element of NG_2 is a cycle
  for (int k = 0; k < static_cast<int>(cols); ++k) {
    auto g = m.kernel_generator(kernel, k);
    if (!m.face(2, 2, g).is_identity()) throw Error("d_2 does not vanish on the Moore generators");
    st.generator_length = std::max(st.generator_length, static_cast<int>(g.word().size()));
  }

  std::vector<GroupElement> ones;
  for (Index g = 1; g < pi->order(); ++g) ones.push_back(m.smash(1, g, 0));
  auto twos = moore2_words(m, bound);
  st.arguments = twos.size();

  auto pair = [](std::vector<int> a, std::vector<int> b) {
    return PeifferPair{3, SurjTuple(3, std::move(a)), SurjTuple(3, std::move(b))};
  };
  const auto p10_2 = pair({1, 0}, {2}), p20_1 = pair({2, 0}, {1}), p0_21 = pair({0}, {2, 1});
  const auto p0_1 = pair({0}, {1}), p0_2 = pair({0}, {2}), p1_2 = pair({1}, {2});

  std::set<FreeProductWord> images;
  auto record = [&](const PeifferPair& p, const GroupElement& x, const GroupElement& y) {
    auto v = m.face(3, 3, F(m, p, x, y).value);
    if (!v.is_identity()) images.insert(v.word());
  };
  for (const auto& x : ones)
    for (const auto& y : twos) {
      record(p10_2, x, y);
      record(p20_1, x, y);
      record(p0_21, y, x);
    }
  for (const auto& x : twos)
    for (const auto& y : twos) {
      record(p0_1, x, y);
      record(p0_2, x, y);
      record(p1_2, x, y);
    }
  st.images = images.size();
  for (const auto& w : images) {
    auto letters = m.to_letters(w);
    for (Index t = 0; t < kernel.index(); ++t) lattice.add(kernel.rewrite_abelian(letters, t));
  }
  st.invariants = lattice.invariants();
  return st;
}

HomotopyResult carlsson_pi2(const FiniteGroupPtr& pi, int bound) {
  auto a = carlsson_pi2_stage(pi, bound);
  auto b = carlsson_pi2_stage(pi, bound + 1);
  HomotopyResult r;
  r.degree = 2;
  r.invariants = b.invariants;
  r.order = b.invariants.order() ? std::optional<std::size_t>(*b.invariants.order()) : std::nullopt;
  r.bound = bound;
  r.stable = a.covers_generators() && a.invariants == b.invariants;
  r.method = *r.stable ? HomotopyResult::Method::rs_snf : HomotopyResult::Method::undecided_at_bound;
  return r;
}

}  // namespace moore
