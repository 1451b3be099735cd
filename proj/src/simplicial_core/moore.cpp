#include "moore/simplicial_core/moore.hpp"

#include "moore/fp_group/errors.hpp"
#include "moore/simplicial_core/models.hpp"

namespace moore {

std::optional<int> moore_failure(const SimplicialGroupModel& m, int n, const GroupElement& x) {
  for (int i = 0; i < n; ++i)
    if (!m.face(n, i, x).is_identity()) return i;
  return std::nullopt;
}

MooreLevel moore_level(const SimplicialGroupModel& m, int n) {
  MooreLevel out;
  out.n = n;
  auto h = m.level(n);
  if (h.is_finite()) {
    const auto& g = h.finite();
    if (g->order() > max_elements())
      throw ResourceError("level " + std::to_string(n) + " exceeds the element bound");
    for (Index x = 0; x < g->order(); ++x) {
      GroupElement e(g, x);
      if (in_moore(m, n, e)) out.elements.push_back(e);
    }
    out.generators = out.elements;
    out.exhaustive = true;
  } else if (auto* c = dynamic_cast<const CarlssonModel*>(&m)) {
    if (n <= 1) {
      // G_0 is trivial and d_0 kills all of G_1 = pi
      out.elements.push_back(m.identity(n));
      for (Index g = 1; n == 1 && g < c->pi()->order(); ++g) out.elements.push_back(c->smash(1, g, 0));
      out.generators = out.elements;
      out.exhaustive = true;
    } else if (n == 2) {
      auto k = c->moore2_kernel();
      for (std::size_t i = 0; i < k.kernel().generators.size(); ++i)
        out.generators.push_back(c->kernel_generator(k, static_cast<int>(i)));
    }
  }
  return out;
}

GroupElement boundary(const SimplicialGroupModel& m, int n, const GroupElement& x) {
  if (auto f = moore_failure(m, n, x))
    throw DomainError("element is not in NG_" + std::to_string(n) + ": d_" + std::to_string(*f) +
                      " is nontrivial");
  return m.face(n, n, x);
}

DegenerateSubgroup degenerate_subgroup(const SimplicialGroupModel& m, int n) {
  DegenerateSubgroup out;
  out.n = n;
  if (n < 1) return out;
  for (const auto& t : m.generators(n - 1))
    for (int i = 0; i < n; ++i) out.generators.push_back(m.degeneracy(n - 1, i, t));
  auto h = m.level(n);
  if (h.is_finite()) {
    Subgroup s(h.finite());
    for (const auto& g : out.generators) s.add_generator(g.index());
    out.finite = std::move(s);
  }
  return out;
}

std::pair<GroupElement, GroupElement> theta(const SimplicialGroupModel& m, int n,
                                            const GroupElement& g) {
  if (n < 1) throw DomainError("theta needs n >= 1");
  auto s = m.degeneracy(n - 1, 0, m.face(n, 0, g));
  return {mul(g, inverse(s)), s};
}

const GroupElement& Decomposition::at(const SurjTuple& alpha) const {
  for (const auto& [a, x] : components)
    if (a == alpha) return x;
  throw DomainError("no component " + alpha.to_string());
}

namespace {

// g in level n with d_i g = 1 for i < j; returns masks (over n) -> component.
void decompose_rec(const SimplicialGroupModel& m, int n, int j, const GroupElement& g,
                   std::vector<std::pair<std::uint32_t, GroupElement>>& out) {
  if (n == j) {
    out.push_back({0u, g});
    return;
  }
  auto r = m.face(n, j, g);
  auto k = mul(g, inverse(m.degeneracy(n - 1, j, r)));
  decompose_rec(m, n, j + 1, k, out);
  std::vector<std::pair<std::uint32_t, GroupElement>> sub;
  decompose_rec(m, n - 1, j, r, sub);
  for (auto& [mask, v] : sub) out.push_back({(mask << 1) | (1u << j), std::move(v)});
}

}  // namespace

Decomposition decompose(const SimplicialGroupModel& m, int n, const GroupElement& g) {
  if (n < 0 || n > kMaxPosetDim) throw DomainError("decompose: dimension out of range");
  std::vector<std::pair<std::uint32_t, GroupElement>> raw;
  decompose_rec(m, n, 0, g, raw);
  Decomposition d;
  d.n = n;
  std::vector<GroupElement*> by_rank(std::size_t{1} << n, nullptr);
  for (auto& [mask, v] : raw) by_rank[rank_in_S(SurjTuple::from_mask(n, mask))] = &v;
  auto order = enumerate_S(n);
  for (std::size_t r = 0; r < order.size(); ++r) d.components.push_back({order[r], *by_rank[r]});
  return d;
}

GroupElement reconstruct(const SimplicialGroupModel& m, const Decomposition& d) {
  GroupElement g = d.moore_part();
  for (std::size_t r = 1; r < d.components.size(); ++r)
    g = mul(g, apply_degeneracy_tuple(m, d.components[r].first, d.components[r].second));
  return g;
}

std::vector<GroupElement> sample_level(const SimplicialGroupModel& m, int n, int samples,
                                       std::mt19937& rng, std::size_t exhaustive_limit) {
  auto h = m.level(n);
  std::vector<GroupElement> out;
  if (h.is_finite() && h.finite()->order() <= exhaustive_limit) {
    for (Index x = 0; x < h.finite()->order(); ++x) out.push_back(GroupElement(h.finite(), x));
    return out;
  }
  out = m.generators(n);
  out.push_back(m.identity(n));
  for (int k = 0; k < samples; ++k) out.push_back(m.random_element(n, rng));
  return out;
}

ValidationReport validate(const SimplicialGroupModel& m, int nmax, int samples, unsigned seed) {
  if (nmax > m.max_dim()) throw DomainError("validate: nmax beyond max_dim");
  ValidationReport rep;
  std::mt19937 rng(seed);
  auto fail = [&](std::string id, int n, int i, int j, const GroupElement& x) {
    rep.violations.push_back({std::move(id), n, i, j, m.format_element(x)});
  };
  for (int n = 0; n <= nmax; ++n) {
    auto xs = sample_level(m, n, samples, rng);
    for (const auto& x : xs) {
      // d_i d_j = d_{j-1} d_i, i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i) {
            ++rep.checks;
            if (!(m.face(n - 1, i, m.face(n, j, x)) == m.face(n - 1, j - 1, m.face(n, i, x))))
              fail("d_i d_j = d_{j-1} d_i", n, i, j, x);
          }
      if (n + 1 <= nmax)
        for (int j = 0; j <= n; ++j) {
          auto sx = m.degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            ++rep.checks;
            auto lhs = m.face(n + 1, i, sx);
            if (i < j) {
              if (!(lhs == m.degeneracy(n - 1, j - 1, m.face(n, i, x))))
                fail("d_i s_j = s_{j-1} d_i", n, i, j, x);
            } else if (i == j || i == j + 1) {
              if (!(lhs == x)) fail("d_j s_j = d_{j+1} s_j = id", n, i, j, x);
            } else {
              if (!(lhs == m.degeneracy(n - 1, j, m.face(n, i - 1, x))))
                fail("d_i s_j = s_j d_{i-1}", n, i, j, x);
            }
          }
        }
      if (n + 2 <= nmax)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i) {
            ++rep.checks;
            auto lhs = m.degeneracy(n + 1, i, m.degeneracy(n, j, x));
            auto rhs = m.degeneracy(n + 1, j + 1, m.degeneracy(n, i, x));
            if (!(lhs == rhs)) fail("s_i s_j = s_{j+1} s_i", n, i, j, x);
          }
    }
    // homomorphism property on pairs of samples
    std::size_t limit = std::min<std::size_t>(xs.size(), 48);
    for (std::size_t a = 0; a < limit; ++a)
      for (std::size_t b = 0; b < limit; ++b) {
        auto ab = mul(xs[a], xs[b]);
        for (int i = 0; n >= 1 && i <= n; ++i) {
          ++rep.checks;
          if (!(m.face(n, i, ab) == mul(m.face(n, i, xs[a]), m.face(n, i, xs[b]))))
            fail("d_i homomorphism", n, i, i, ab);
        }
        for (int i = 0; n + 1 <= nmax && i <= n; ++i) {
          ++rep.checks;
          if (!(m.degeneracy(n, i, ab) == mul(m.degeneracy(n, i, xs[a]), m.degeneracy(n, i, xs[b]))))
            fail("s_i homomorphism", n, i, i, ab);
        }
      }
  }
  return rep;
}

}  // namespace moore
