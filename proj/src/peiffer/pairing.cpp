#include "moore/peiffer/pairing.hpp"

#include <functional>
#include <unordered_set>

#include "moore/simplicial_core/models.hpp"
#include "moore/simplicial_core/moore.hpp"

namespace moore {

MooreMembershipError::MooreMembershipError(std::string argument, int level, int face)
    : DomainError("argument " + argument + " is not in NG_" + std::to_string(level) + ": d_" +
                  std::to_string(face) + " is nontrivial"),
      argument_(std::move(argument)),
      level_(level),
      face_(face) {}

GroupElement p_j(const SimplicialGroupModel& m, int n, int j, const GroupElement& z) {
  if (j < 0 || j > n - 1)
    throw DomainError("p_" + std::to_string(j) + " undefined on level " + std::to_string(n));
  return mul(z, inverse(m.degeneracy(n - 1, j, m.face(n, j, z))));
}

GroupElement p_full(const SimplicialGroupModel& m, int n, const GroupElement& z) {
  GroupElement v = z;
  for (int j = 0; j < n; ++j) v = p_j(m, n, j, v);
  return v;
}

PeifferGenerator F(const SimplicialGroupModel& m, const PeifferPair& pair, const GroupElement& x,
                   const GroupElement& y) {
  const int n = pair.n;
  const int lx = n - pair.alpha.length(), ly = n - pair.beta.length();
  if (auto f = moore_failure(m, lx, x)) throw MooreMembershipError("x", lx, *f);
  if (auto f = moore_failure(m, ly, y)) throw MooreMembershipError("y", ly, *f);
  auto c = commutator(apply_degeneracy_tuple(m, pair.alpha, x), apply_degeneracy_tuple(m, pair.beta, y));
  return {n, pair, x, y, p_full(m, n, c)};
}

std::vector<GroupElement> moore_arguments(const SimplicialGroupModel& m, int level,
                                          const ArgumentSource& src) {
  auto ml = moore_level(m, level);
  if (ml.exhaustive) return ml.elements;
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  auto add = [&](const GroupElement& g) {
    if (out.size() < src.max_arguments && seen.insert(g).second) out.push_back(g);
  };
  add(m.identity(level));
  for (const auto& g : ml.generators) add(g);
  if (auto* c = dynamic_cast<const CarlssonModel*>(&m); c && level == 2) {
    // all reduced words of syllable length <= bound lying in NG_2
    const auto& pi = *c->pi();
    std::function<void(FreeProductWord&)> rec = [&](FreeProductWord& w) {
      if (!w.empty()) {
        GroupElement e(c->product_level(2), w);
        if (in_moore(m, 2, e)) add(e);
      }
      if (static_cast<int>(w.size()) == src.syllable_bound) return;
      for (int copy = 0; copy < 2; ++copy) {
        if (!w.empty() && w.back().copy == copy) continue;
        for (Index g = 1; g < pi.order(); ++g) {
          w.push_back({copy, g});
          rec(w);
          w.pop_back();
        }
      }
    };
    FreeProductWord w;
    rec(w);
  }
  std::mt19937 rng(src.seed + static_cast<unsigned>(level));
  for (int k = 0; k < src.samples; ++k) add(p_full(m, level, m.random_element(level, rng)));
  return out;
}

std::vector<PeifferGenerator> peiffer_generators(const SimplicialGroupModel& m, int n,
                                                 const ArgumentSource& src) {
  std::vector<PeifferGenerator> out;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<std::vector<GroupElement>> args(n + 1);
  std::vector<char> have(n + 1, 0);
  auto arguments = [&](int level) -> const std::vector<GroupElement>& {
    if (!have[level]) {
      args[level] = moore_arguments(m, level, src);
      have[level] = 1;
    }
    return args[level];
  };
  for (const auto& pair : enumerate_P(n)) {
    const auto& xs = arguments(n - pair.alpha.length());
    const auto& ys = arguments(n - pair.beta.length());
    for (const auto& x : xs)
      for (const auto& y : ys) {
        if (x.is_identity() || y.is_identity()) continue;
        auto g = F(m, pair, x, y);
        if (g.value.is_identity()) continue;
        if (seen.insert(g.value).second) out.push_back(std::move(g));
      }
  }
  return out;
}

}  // namespace moore
