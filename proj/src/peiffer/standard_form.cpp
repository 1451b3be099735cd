#include "moore/peiffer/standard_form.hpp"

#include <deque>
#include <unordered_map>

#include "moore/simplicial_core/moore.hpp"

namespace moore {

GroupElement evaluate(const SimplicialGroupModel& m, int n, const DegeneracyWord& w) {
  GroupElement g = m.identity(n);
  for (const auto& f : w) g = mul(g, m.degeneracy(n - 1, f.i, f.h));
  return g;
}

DegeneracyWord parse_degeneracy_word(const SimplicialGroupModel& m, int n, std::string_view text) {
  DegeneracyWord out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 's') throw DomainError("degeneracy word: expected 's<i>(...)' at " + std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos >= text.size() || text[pos] != '(')
      throw DomainError("degeneracy word: expected 's<i>(' at " + std::to_string(start));
    int i = std::stoi(std::string(text.substr(start, pos - start)));
    int depth = 0;
    std::size_t open = pos;
    for (; pos < text.size(); ++pos) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')' && --depth == 0) break;
    }
    if (pos >= text.size()) throw DomainError("degeneracy word: unbalanced parentheses");
    auto inner = text.substr(open + 1, pos - open - 1);
    ++pos;
    if (i < 0 || i > n - 1) throw DomainError("degeneracy s_" + std::to_string(i) + " invalid into level " + std::to_string(n));
    out.push_back({i, m.parse_element(n - 1, inner)});
    skip();
  }
  return out;
}

std::optional<DegeneracyWord> degeneracy_word_for(const SimplicialGroupModel& m, int n,
                                                  const GroupElement& g, std::size_t limit) {
  std::vector<DegeneracyFactor> gens;
  for (const auto& t : m.generators(n - 1))
    for (int i = 0; i < n; ++i) {
      gens.push_back({i, t});
      gens.push_back({i, inverse(t)});
    }
  struct Node {
    std::size_t parent;
    int gen;
  };
  std::vector<Node> nodes{{0, -1}};
  std::vector<GroupElement> values{m.identity(n)};
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen{{values[0], 0}};
  auto path = [&](std::size_t k) {
    DegeneracyWord w;
    while (nodes[k].gen >= 0) {
      w.push_back(gens[nodes[k].gen]);
      k = nodes[k].parent;
    }
    return DegeneracyWord(w.rbegin(), w.rend());
  };
  if (g.is_identity()) return DegeneracyWord{};
  for (std::size_t head = 0; head < values.size() && values.size() < limit; ++head)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto v = mul(values[head], m.degeneracy(n - 1, gens[k].i, gens[k].h));
      if (seen.count(v)) continue;
      seen.emplace(v, nodes.size());
      nodes.push_back({head, static_cast<int>(k)});
      values.push_back(v);
      if (v == g) return path(nodes.size() - 1);
    }
  return std::nullopt;
}

GroupElement StandardFormCertificate::nu_product() const {
  GroupElement g = GroupElement::identity(input.handle());
  for (const auto& f : nu) {
    auto v = f.exponent > 0 ? f.generator.value : inverse(f.generator.value);
    g = mul(g, conjugate(f.conjugator, v));
  }
  return g;
}

GroupElement StandardFormCertificate::reconstruct(const SimplicialGroupModel& m) const {
  GroupElement g = nu_product();
  for (const auto& [a, x] : components) g = mul(g, apply_degeneracy_tuple(m, a, x));
  return g;
}

bool StandardFormCertificate::components_trivial() const {
  for (const auto& c : components)
    if (!c.second.is_identity()) return false;
  return true;
}

namespace {

struct Factor {
  SurjTuple alpha;
  GroupElement x;
  GroupElement value;
};

class Rewriter {
 public:
  Rewriter(const SimplicialGroupModel& m, int n, std::size_t max_steps)
      : m_(m), n_(n), max_steps_(max_steps) {}

  Factor make(const SurjTuple& a, const GroupElement& x) {
    return {a, x, apply_degeneracy_tuple(m_, a, x)};
  }

  // Inserts a at the front of the sorted list; `left` is the product of
  // everything standing to the left of the list.
  void insert(Factor a, const GroupElement& left) {
    if (++steps_ > max_steps_)
      throw ResourceError("standard form exceeded " + std::to_string(max_steps_) +
                          " steps (" + std::to_string(nu_.size()) + " pairing factors emitted, " +
                          std::to_string(list_.size()) + " sorted factors)");
    if (list_.empty() || a.alpha < list_.front().alpha) {
      list_.push_front(std::move(a));
      return;
    }
    if (a.alpha == list_.front().alpha) {
      auto& b = list_.front();
      GroupElement x = mul(a.x, b.x);
      if (x.is_identity()) {
        list_.pop_front();
      } else {
        b.x = x;
        b.value = mul(a.value, b.value);
      }
      return;
    }
    // a > b: a b = [a,b] b a, and [a,b] = F * (factors below b).
    Factor b = std::move(list_.front());
    list_.pop_front();
    auto c = commutator(a.value, b.value);
    auto d = decompose(m_, n_, c);
    const auto& f = d.moore_part();
    if (!f.is_identity()) {
      if (a.alpha.mask() & b.alpha.mask())
        throw Error("swap of overlapping " + a.alpha.to_string() + " past " + b.alpha.to_string() +
                    " left a nontrivial Moore part");
      auto gen = F(m_, PeifferPair{n_, a.alpha, b.alpha}, a.x, b.x);
      if (!(gen.value == f)) throw Error("pairing value differs from the Moore part of the swap");
      nu_.push_back({left, std::move(gen), 1});
    }
    std::vector<Factor> r;
    for (std::size_t k = 1; k < d.components.size(); ++k) {
      const auto& [alpha, x] = d.components[k];
      if (x.is_identity()) continue;
      if (!(alpha < a.alpha))
        throw Error("swap of " + a.alpha.to_string() + " produced a factor of type " + alpha.to_string());
      r.push_back(make(alpha, x));
    }
    GroupElement lr = left;
    std::vector<GroupElement> prefix{left};
    for (const auto& x : r) {
      lr = mul(lr, x.value);
      prefix.push_back(lr);
    }
    insert(std::move(a), mul(lr, b.value));
    insert(std::move(b), lr);
    for (std::size_t k = r.size(); k-- > 0;) insert(std::move(r[k]), prefix[k]);
  }

  std::deque<Factor> list_;
  std::vector<NuFactor> nu_;
  std::size_t steps_ = 0;

 private:
  const SimplicialGroupModel& m_;
  int n_;
  std::size_t max_steps_;
};

}  // namespace

StandardFormCertificate standard_form(const SimplicialGroupModel& m, int n, const DegeneracyWord& w,
                                      std::size_t max_steps) {
  if (n < 1) throw DomainError("standard form needs n >= 1");
  Rewriter rw(m, n, max_steps);
  // Each s_i(h) splits into increasing factors s_i s_beta(x_beta).
  std::vector<Factor> flat;
  for (const auto& f : w) {
    if (f.i < 0 || f.i > n - 1) throw DomainError("degeneracy index out of range");
    auto d = decompose(m, n - 1, f.h);
    SurjTuple gamma(n, {f.i});
    for (const auto& [beta, x] : d.components) {
      if (x.is_identity()) continue;
      auto alpha = gamma_star(gamma, beta);
      flat.push_back(rw.make(alpha, x));
    }
  }
  std::vector<GroupElement> prefix{m.identity(n)};
  for (const auto& f : flat) prefix.push_back(mul(prefix.back(), f.value));

  StandardFormCertificate cert;
  cert.n = n;
  cert.input = evaluate(m, n, w);
  for (std::size_t k = flat.size(); k-- > 0;) rw.insert(flat[k], prefix[k]);
  cert.nu = std::move(rw.nu_);
  cert.steps = rw.steps_;
  for (const auto& a : enumerate_S(n)) {
    if (a.is_empty()) continue;
    GroupElement x = m.identity(n - a.length());
    for (const auto& f : rw.list_)
      if (f.alpha == a) x = f.x;
    cert.components.push_back({a, x});
  }
  if (!(cert.reconstruct(m) == cert.input))
    throw Error("standard form certificate does not reconstruct its input");
  return cert;
}

}  // namespace moore
