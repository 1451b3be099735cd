#include "moore/simplicial_core/model.hpp"

#include "moore/fp_group/closure.hpp"
#include "moore/fp_group/errors.hpp"

namespace moore {

void SimplicialGroupModel::check_face(int n, int i) const {
  if (n < 1 || n > max_dim() || i < 0 || i > n)
    throw DomainError("face d_" + std::to_string(i) + " undefined on level " + std::to_string(n) +
                      " of " + name() + " (max_dim " + std::to_string(max_dim()) + ")");
}

void SimplicialGroupModel::check_degeneracy(int n, int i) const {
  if (n < 0 || n + 1 > max_dim() || i < 0 || i > n)
    throw DomainError("degeneracy s_" + std::to_string(i) + " undefined on level " +
                      std::to_string(n) + " of " + name() + " (max_dim " +
                      std::to_string(max_dim()) + ")");
}

GroupElement SimplicialGroupModel::parse_element(int n, std::string_view text) const {
  auto h = level(n);
  if (h.is_finite()) {
    auto x = h.finite()->find(text);
    if (!x) throw DomainError("unknown element '" + std::string(text) + "' in level " + std::to_string(n));
    return GroupElement(h.finite(), *x);
  }
  return GroupElement(h.product(), h.product()->parse(text));
}

GroupElement SimplicialGroupModel::random_element(int n, std::mt19937& rng, int length) const {
  auto gens = generators(n);
  GroupElement x = identity(n);
  if (gens.empty()) return x;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution flip(0.5);
  const int len = std::uniform_int_distribution<int>(0, length)(rng);
  for (int k = 0; k < len; ++k) {
    const auto& g = gens[pick(rng)];
    x = mul(x, flip(rng) ? g : inverse(g));
  }
  return x;
}

FiniteModel::FiniteModel(Data d) : data_(std::move(d)) {
  const int top = max_dim();
  if (top < 0) throw DomainError("model has no levels");
  if (static_cast<int>(data_.faces.size()) != top + 1 ||
      static_cast<int>(data_.degeneracies.size()) != top + 1)
    throw DomainError("model map tables have the wrong shape");
  generators_.resize(top + 1);
  for (int n = 0; n <= top; ++n)
    for (Index x : generating_set(*data_.levels[n]))
      generators_[n].push_back(GroupElement(data_.levels[n], x));
}

GroupHandle FiniteModel::level(int n) const { return GroupHandle(finite_level(n)); }

const FiniteGroupPtr& FiniteModel::finite_level(int n) const {
  if (n < 0 || n > max_dim())
    throw DomainError("level " + std::to_string(n) + " beyond max_dim " +
                      std::to_string(max_dim()) + " of " + name());
  return data_.levels[n];
}

GroupElement FiniteModel::face(int n, int i, const GroupElement& g) const {
  check_face(n, i);
  if (!(g.handle() == level(n))) throw GroupMismatch("element is not in level " + std::to_string(n));
  return GroupElement(data_.levels[n - 1], data_.faces[n][i][g.index()]);
}

GroupElement FiniteModel::degeneracy(int n, int i, const GroupElement& g) const {
  check_degeneracy(n, i);
  if (!(g.handle() == level(n))) throw GroupMismatch("element is not in level " + std::to_string(n));
  return GroupElement(data_.levels[n + 1], data_.degeneracies[n][i][g.index()]);
}

std::vector<GroupElement> FiniteModel::generators(int n) const {
  finite_level(n);
  return generators_[n];
}

GroupElement FiniteModel::parse_element(int n, std::string_view text) const {
  return SimplicialGroupModel::parse_element(n, text);
}

GroupElement apply_degeneracy_tuple(const SimplicialGroupModel& m, const SurjTuple& alpha,
                                    const GroupElement& x) {
  int level = alpha.dim() - alpha.length();
  GroupElement y = x;
  for (int i = 0; i < alpha.dim(); ++i)
    if (alpha.contains(i)) y = m.degeneracy(level++, i, y);
  return y;
}

}  // namespace moore
