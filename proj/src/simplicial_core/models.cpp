#include "moore/simplicial_core/models.hpp"

#include "moore/fp_group/closure.hpp"
#include "moore/fp_group/errors.hpp"
#include "moore/fp_group/groups.hpp"

namespace moore {

namespace {

std::vector<Index> identity_map(std::size_t n) {
  std::vector<Index> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Index>(i);
  return v;
}

}  // namespace

ModelPtr constant_model(FiniteGroupPtr pi, int nmax) {
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  FiniteModel::Data d;
  d.name = "constant:" + pi->name();
  d.levels.assign(nmax + 1, pi);
  d.faces.resize(nmax + 1);
  d.degeneracies.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    if (n >= 1) d.faces[n].assign(n + 1, identity_map(pi->order()));
    if (n < nmax) d.degeneracies[n].assign(n + 1, identity_map(pi->order()));
  }
  return std::make_shared<FiniteModel>(std::move(d));
}

ModelPtr cech_nerve(FiniteGroupPtr pi, int nmax) {
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  FiniteModel::Data d;
  d.name = "cech:" + pi->name();
  for (int n = 0; n <= nmax; ++n) d.levels.push_back(FiniteGroup::direct_power(pi, n + 1));
  d.faces.resize(nmax + 1);
  d.degeneracies.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    const auto& g = *d.levels[n];
    if (n >= 1) {
      d.faces[n].assign(n + 1, std::vector<Index>(g.order()));
      for (Index x = 0; x < g.order(); ++x) {
        auto c = g.coordinates(x);
        for (int i = 0; i <= n; ++i) {
          auto e = c;
          e.erase(e.begin() + i);
          d.faces[n][i][x] = d.levels[n - 1]->from_coordinates(e);
        }
      }
    }
    if (n < nmax) {
      d.degeneracies[n].assign(n + 1, std::vector<Index>(g.order()));
      for (Index x = 0; x < g.order(); ++x) {
        auto c = g.coordinates(x);
        for (int i = 0; i <= n; ++i) {
          auto e = c;
          e.insert(e.begin() + i, c[i]);
          d.degeneracies[n][i][x] = d.levels[n + 1]->from_coordinates(e);
        }
      }
    }
  }
  return std::make_shared<FiniteModel>(std::move(d));
}

CarlssonModel::CarlssonModel(FiniteGroupPtr pi, int nmax) : pi_(std::move(pi)), nmax_(nmax) {
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  for (int n = 0; n <= nmax; ++n) levels_.push_back(std::make_shared<FreeProduct>(pi_, n));
}

GroupHandle CarlssonModel::level(int n) const { return GroupHandle(product_level(n)); }

const FreeProductPtr& CarlssonModel::product_level(int n) const {
  if (n < 0 || n > nmax_)
    throw DomainError("level " + std::to_string(n) + " beyond max_dim " + std::to_string(nmax_) +
                      " of " + name());
  return levels_[n];
}

FreeProductWord CarlssonModel::face_word(int n, int k, const FreeProductWord& w) {
  FreeProductWord out;
  for (const auto& s : w) {
    // d_k x_i: the threshold moves down when k <= i and collapses to the
    // basepoint for x_0 under d_0 and x_{n-1} under d_n.
    if (k <= s.copy) {
      if (s.copy == 0) continue;
      out.push_back({s.copy - 1, s.element});
    } else {
      if (s.copy == n - 1) continue;
      out.push_back(s);
    }
  }
  return out;
}

FreeProductWord CarlssonModel::degeneracy_word(int k, const FreeProductWord& w) {
  FreeProductWord out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back({k <= s.copy ? s.copy + 1 : s.copy, s.element});
  return out;
}

GroupElement CarlssonModel::face(int n, int i, const GroupElement& g) const {
  check_face(n, i);
  if (!(g.handle() == level(n))) throw GroupMismatch("element is not in level " + std::to_string(n));
  return GroupElement(levels_[n - 1], face_word(n, i, g.word()));
}

GroupElement CarlssonModel::degeneracy(int n, int i, const GroupElement& g) const {
  check_degeneracy(n, i);
  if (!(g.handle() == level(n))) throw GroupMismatch("element is not in level " + std::to_string(n));
  return GroupElement(levels_[n + 1], degeneracy_word(i, g.word()));
}

std::vector<GroupElement> CarlssonModel::generators(int n) const {
  std::vector<GroupElement> out;
  for (int i = 0; i < n; ++i)
    for (Index g : generating_set(*pi_)) out.push_back(smash(n, g, i));
  return out;
}

GroupElement CarlssonModel::smash(int n, Index g, int i) const {
  return GroupElement(product_level(n), FreeProductWord{{i, g}});
}

Presentation CarlssonModel::level_presentation(int n) const {
  product_level(n);
  Presentation p;
  const Index m = static_cast<Index>(pi_->order());
  for (int i = 0; i < n; ++i)
    for (Index g = 1; g < m; ++g) p.generators.push_back(pi_->label(g) + "@" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (Index a = 1; a < m; ++a)
      for (Index b = 1; b < m; ++b) {
        Word w{gen_letter(i * (m - 1) + a - 1), gen_letter(i * (m - 1) + b - 1)};
        Index c = pi_->mul(a, b);
        if (c != 0) w.push_back(-gen_letter(i * (m - 1) + c - 1));
        p.relators.push_back(w);
      }
  return p;
}

Word CarlssonModel::to_letters(const FreeProductWord& w) const {
  const int m = static_cast<int>(pi_->order());
  Word out;
  for (const auto& s : w) out.push_back(gen_letter(s.copy * (m - 1) + static_cast<int>(s.element) - 1));
  return out;
}

FreeProductWord CarlssonModel::from_letters(const Word& w) const {
  const int m = static_cast<int>(pi_->order());
  FreeProductWord out;
  for (Letter l : w) {
    int g = letter_gen(l);
    Index e = static_cast<Index>(g % (m - 1) + 1);
    out.push_back({g / (m - 1), l > 0 ? e : pi_->inverse(e)});
  }
  return out;
}

SchreierKernel CarlssonModel::moore2_kernel() const {
  auto pres = level_presentation(2);
  auto target = FiniteGroup::direct_power(pi_, 2);
  FiniteHomomorphism phi{target, {}};
  // a level-1 element is a word of at most one syllable in copy 0
  auto value = [](const GroupElement& e) { return e.word().empty() ? Index{0} : e.word()[0].element; };
  for (std::size_t k = 0; k < pres.generators.size(); ++k) {
    GroupElement x(product_level(2), from_letters({gen_letter(static_cast<int>(k))}));
    std::vector<Index> c{value(face(2, 0, x)), value(face(2, 1, x))};
    phi.images.push_back(target->from_coordinates(c));
  }
  return SchreierKernel(std::move(pres), std::move(phi));
}

GroupElement CarlssonModel::kernel_generator(const SchreierKernel& k, int gen) const {
  return GroupElement(product_level(2), from_letters(k.generator_word(gen)));
}

ModelPtr carlsson_circle(FiniteGroupPtr pi, int nmax) {
  return std::make_shared<CarlssonModel>(std::move(pi), nmax);
}

ModelPtr corrupt_face(const FiniteModel& m, int n, int i, int j) {
  auto d = m.data();
  if (n < 1 || n > m.max_dim() || i > n || j > n || i < 0 || j < 0)
    throw DomainError("no such face to corrupt");
  d.faces[n][i] = d.faces[n][j];
  d.name += "!corrupt";
  return std::make_shared<FiniteModel>(std::move(d));
}

ModelPtr model_by_name(std::string_view selector, int nmax) {
  auto colon = selector.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("model selector '" + std::string(selector) + "' needs the form kind:group");
  auto kind = selector.substr(0, colon);
  auto rest = selector.substr(colon + 1);
  if (kind == "constant") return constant_model(group_by_name(rest), nmax);
  if (kind == "cech") return cech_nerve(group_by_name(rest), nmax);
  if (kind == "carlsson") return carlsson_circle(group_by_name(rest), nmax);
  if (kind == "nilcarlsson") {
    int nclass = 2;
    auto c2 = rest.find(':');
    if (c2 != std::string_view::npos) {
      try {
        nclass = std::stoi(std::string(rest.substr(c2 + 1)));
      } catch (const std::exception&) {
        throw DomainError("bad nilpotency class in '" + std::string(selector) + "'");
      }
      rest = rest.substr(0, c2);
    }
    return nilpotent_carlsson(group_by_name(rest), nclass, nmax);
  }
  throw DomainError("unknown model kind '" + std::string(kind) + "'");
}

}  // namespace moore
