#include <deque>
#include <functional>

#include "moore/fp_group/closure.hpp"
#include "moore/fp_group/errors.hpp"
#include "moore/simplicial_core/models.hpp"

namespace moore {

namespace {

constexpr std::size_t kDefaultMaxCosets = 2'000'000;

int generator_of(const FiniteGroup& pi, Syllable s) {
  return s.copy * static_cast<int>(pi.order() - 1) + static_cast<int>(s.element) - 1;
}

std::uint32_t trace_syllables(const CosetTable& t, const FiniteGroup& pi, const FreeProductWord& w) {
  std::uint32_t c = 0;
  for (const auto& s : w) c = t.act(c, gen_letter(generator_of(pi, s)));
  return c;
}

Presentation level_presentation(const FiniteGroup& pi, int copies, int nclass) {
  Presentation p;
  const Index m = static_cast<Index>(pi.order());
  for (int i = 0; i < copies; ++i)
    for (Index g = 1; g < m; ++g) p.generators.push_back(pi.label(g) + "@" + std::to_string(i));
  auto letter = [&](int i, Index g) { return gen_letter(generator_of(pi, {i, g})); };
  for (int i = 0; i < copies; ++i)
    for (Index a = 1; a < m; ++a)
      for (Index b = 1; b < m; ++b) {
        Word w{letter(i, a), letter(i, b)};
        Index c = pi.mul(a, b);
        if (c != 0) w.push_back(-letter(i, c));
        p.relators.push_back(w);
      }
  std::vector<Word> ys;
  for (int i = 0; i < copies; ++i)
    for (Index g : generating_set(pi)) ys.push_back({letter(i, g)});
  // left-normed commutators of weight nclass + 1 in the generators
  std::function<void(const Word&, int)> extend = [&](const Word& acc, int weight) {
    if (weight == nclass + 1) {
      if (!acc.empty()) p.relators.push_back(acc);
      return;
    }
    for (const auto& y : ys) extend(word_commutator(acc, y), weight + 1);
  };
  if (!ys.empty())
    for (const auto& y : ys) extend(y, 1);
  return p;
}

}  // namespace

NilpotentCarlssonModel::Built NilpotentCarlssonModel::build(const FiniteGroupPtr& pi, int nclass,
                                                            int nmax, std::size_t max_cosets) {
  std::vector<CosetTable> tables;
  if (nclass < 1) throw DomainError("nilpotency class must be at least 1");
  if (nmax < 0) throw DomainError("nmax must be non-negative");
  Data d;
  d.name = "nilcarlsson:" + pi->name() + ":" + std::to_string(nclass);
  for (int n = 0; n <= nmax; ++n) {
    auto pres = level_presentation(*pi, n, nclass);
    auto t = todd_coxeter(pres, {}, max_cosets);
    if (t.status != CosetTable::Status::closed)
      throw ResourceError("coset enumeration for level " + std::to_string(n) + " of " + d.name +
                          " did not close within " + std::to_string(max_cosets) + " cosets");
    if (t.index > max_elements())
      throw ResourceError("level " + std::to_string(n) + " of " + d.name + " has order " +
                          std::to_string(t.index) + ", above the element bound");
    FiniteGroup::RegularAction act;
    act.generator_names = pres.generators;
    act.order = t.index;
    act.columns = t.table;
    if (n == 0) act.columns.clear();
    d.levels.push_back(FiniteGroup::from_regular_action(std::move(act), d.name + "[" + std::to_string(n) + "]"));
    tables.push_back(std::move(t));
  }

  // Extends generator images to every element along a spanning tree.
  auto extend = [&](int n, const FiniteGroupPtr& target, const std::vector<Index>& gen_image) {
    const auto& t = tables[n];
    std::vector<Index> img(t.index, 0);
    std::vector<char> seen(t.index, 0);
    seen[0] = 1;
    std::deque<std::uint32_t> q{0};
    while (!q.empty()) {
      auto e = q.front();
      q.pop_front();
      for (std::size_t c = 0; c < t.columns; ++c) {
        auto f = t.table[e * t.columns + c];
        if (seen[f]) continue;
        seen[f] = 1;
        Index gi = gen_image[c / 2];
        img[f] = target->mul(img[e], c % 2 ? target->inverse(gi) : gi);
        q.push_back(f);
      }
    }
    return img;
  };

  const Index m = static_cast<Index>(pi->order());
  d.faces.resize(nmax + 1);
  d.degeneracies.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    for (int k = 0; n >= 1 && k <= n; ++k) {
      std::vector<Index> gi;
      for (int i = 0; i < n; ++i)
        for (Index g = 1; g < m; ++g)
          gi.push_back(trace_syllables(tables[n - 1], *pi,
                                       CarlssonModel::face_word(n, k, {{i, g}})));
      d.faces[n].push_back(extend(n, d.levels[n - 1], gi));
    }
    for (int k = 0; n < nmax && k <= n; ++k) {
      std::vector<Index> gi;
      for (int i = 0; i < n; ++i)
        for (Index g = 1; g < m; ++g)
          gi.push_back(trace_syllables(tables[n + 1], *pi,
                                       CarlssonModel::degeneracy_word(k, {{i, g}})));
      d.degeneracies[n].push_back(extend(n, d.levels[n + 1], gi));
    }
  }
  return {std::move(d), std::move(tables)};
}

NilpotentCarlssonModel::NilpotentCarlssonModel(FiniteGroupPtr pi, int nclass, int nmax,
                                               std::size_t max_cosets)
    : NilpotentCarlssonModel(pi, nclass, build(pi, nclass, nmax, max_cosets)) {}

NilpotentCarlssonModel::NilpotentCarlssonModel(FiniteGroupPtr pi, int nclass, Built b)
    : FiniteModel(std::move(b.data)), pi_(std::move(pi)), class_(nclass), tables_(std::move(b.tables)) {}

std::string NilpotentCarlssonModel::format_element(const GroupElement& g) const {
  std::string label = g.to_string();
  if (label == "e") return label;
  FreeProductWord w;
  std::size_t start = 0;
  while (start <= label.size()) {
    auto end = label.find('*', start);
    if (end == std::string::npos) end = label.size();
    std::string tok = label.substr(start, end - start);
    bool inv = tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0;
    if (inv) tok.resize(tok.size() - 3);
    auto at = tok.rfind('@');
    Index x = *pi_->find(tok.substr(0, at));
    w.push_back({std::stoi(tok.substr(at + 1)), inv ? pi_->inverse(x) : x});
    start = end + 1;
  }
  int n = 0;
  for (const auto& s : w) n = std::max(n, s.copy + 1);
  return FreeProduct(pi_, n).format(FreeProduct(pi_, n).reduce(w));
}

std::string NilpotentCarlssonModel::name() const { return FiniteModel::name(); }

GroupElement NilpotentCarlssonModel::from_word(int n, const FreeProductWord& w) const {
  FreeProduct fp(pi_, n);
  auto r = fp.reduce(w);
  return GroupElement(finite_level(n), trace_syllables(tables_.at(n), *pi_, r));
}

GroupElement NilpotentCarlssonModel::parse_element(int n, std::string_view text) const {
  FreeProduct fp(pi_, n);
  return from_word(n, fp.parse(text));
}

ModelPtr nilpotent_carlsson(FiniteGroupPtr pi, int nclass, int nmax) {
  return std::make_shared<NilpotentCarlssonModel>(std::move(pi), nclass, nmax, kDefaultMaxCosets);
}

}  // namespace moore
