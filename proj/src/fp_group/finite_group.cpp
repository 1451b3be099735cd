#include "moore/fp_group/finite_group.hpp"

#include <deque>
#include <sstream>

#include "moore/fp_group/errors.hpp"

namespace moore {

namespace {

constexpr std::size_t kAssociativityCheckLimit = 256;
constexpr std::size_t kMaterializeLimit = 1024;

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

FiniteGroupPtr FiniteGroup::from_table(
    const std::vector<std::vector<Index>>& table,
    std::vector<std::string> labels, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("group table is empty");
  if (n > max_elements())
    throw ResourceError("group order " + std::to_string(n) +
                        " exceeds the element bound");
  TableRep rep;
  rep.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw DomainError("group table row " + std::to_string(a) +
                        " has wrong length");
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      Index v = table[a][b];
      if (v >= n) throw DomainError("group table entry out of range");
      if (seen[v]) throw DomainError("group table row " + std::to_string(a) +
                                     " is not a permutation");
      seen[v] = 1;
      rep.table[a * n + b] = v;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      Index v = rep.table[a * n + b];
      if (seen[v]) throw DomainError("group table column " +
                                     std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (rep.table[a] != a || rep.table[a * n] != a)
      throw DomainError("index 0 is not the identity");
  if (n <= kAssociativityCheckLimit) {
    const auto& t = rep.table;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (t[ab * n + c] != t[a * n + t[b * n + c]])
            throw DomainError("group table is not associative at (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              "," + std::to_string(c) + ")");
      }
  }
  if (!labels.empty() && labels.size() != n)
    throw DomainError("label count does not match group order");
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->name_ = std::move(name);
  g->labels_ = std::move(labels);
  g->rep_ = std::move(rep);
  g->finish();
  return g;
}

FiniteGroupPtr FiniteGroup::direct_power(FiniteGroupPtr base, int factors) {
  if (!base || factors < 1) throw DomainError("direct power needs factors >= 1");
  std::size_t n = 1;
  for (int i = 0; i < factors; ++i) {
    n *= base->order();
    if (n > max_elements())
      throw ResourceError("direct power " + base->name() + "^" +
                          std::to_string(factors) + " exceeds the element bound");
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->name_ = base->name() + "^" + std::to_string(factors);
  g->factors_ = factors;
  g->base_ = std::move(base);
  g->rep_ = PowerRep{};
  g->finish();
  return g;
}

FiniteGroupPtr FiniteGroup::from_regular_action(RegularAction action,
                                                std::string name) {
  const std::size_t n = action.order;
  const std::size_t cols = 2 * action.generator_names.size();
  if (action.columns.size() != n * cols)
    throw DomainError("regular action has wrong size");
  if (n > max_elements())
    throw ResourceError("group order " + std::to_string(n) +
                        " exceeds the element bound");
  ActionRep rep;
  rep.words.assign(n, {});
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::deque<Index> queue{0};
  while (!queue.empty()) {
    Index e = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < cols; ++c) {
      Index f = action.columns[e * cols + c];
      if (!seen[f]) {
        seen[f] = 1;
        rep.words[f] = rep.words[e];
        rep.words[f].push_back(static_cast<std::uint16_t>(c));
        queue.push_back(f);
      }
    }
  }
  for (char s : seen)
    if (!s) throw DomainError("regular action is not transitive");

  std::vector<std::string> labels(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (rep.words[e].empty()) {
      labels[e] = "e";
      continue;
    }
    std::string s;
    for (auto c : rep.words[e]) {
      if (!s.empty()) s += "*";
      s += action.generator_names[c / 2];
      if (c % 2) s += "^-1";
    }
    labels[e] = std::move(s);
  }
  rep.action = std::move(action);

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->name_ = std::move(name);
  g->labels_ = std::move(labels);
  g->rep_ = std::move(rep);
  if (n <= kMaterializeLimit) {
    TableRep t;
    t.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.table[a * n + b] = g->mul(a, b);
    g->rep_ = std::move(t);
  }
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  if (auto* a = std::get_if<ActionRep>(&rep_)) {
    for (std::size_t e = 0; e < order_; ++e) {
      Index cur = 0;
      const auto& w = a->words[e];
      const std::size_t cols = 2 * a->action.generator_names.size();
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = a->action.columns[cur * cols + (*it ^ 1u)];
      inverse_[e] = cur;
    }
  } else if (std::holds_alternative<PowerRep>(rep_)) {
    for (std::size_t e = 0; e < order_; ++e) {
      auto c = coordinates(static_cast<Index>(e));
      for (auto& x : c) x = base_->inverse(x);
      inverse_[e] = from_coordinates(c);
    }
  } else {
    const auto& t = std::get<TableRep>(rep_).table;
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        if (t[a * order_ + b] == 0) {
          inverse_[a] = static_cast<Index>(b);
          break;
        }
  }

  if (std::holds_alternative<PowerRep>(rep_)) {
    abelian_ = base_->is_abelian();
  } else if (auto* a = std::get_if<ActionRep>(&rep_)) {
    const std::size_t k = a->action.generator_names.size();
    const std::size_t cols = 2 * k;
    std::vector<Index> gens;
    for (std::size_t c = 0; c < cols; c += 2) gens.push_back(a->action.columns[c]);
    abelian_ = true;
    for (auto x : gens)
      for (auto y : gens)
        if (mul(x, y) != mul(y, x)) abelian_ = false;
  } else {
    abelian_ = true;
    for (std::size_t a = 0; a < order_ && abelian_; ++a)
      for (std::size_t b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) {
          abelian_ = false;
          break;
        }
  }

  if (!std::holds_alternative<PowerRep>(rep_))
    for (std::size_t e = 0; e < order_; ++e)
      by_label_.emplace(labels_[e], static_cast<Index>(e));
}

Index FiniteGroup::mul(Index a, Index b) const {
  if (auto* t = std::get_if<TableRep>(&rep_)) return t->table[a * order_ + b];
  if (auto* r = std::get_if<ActionRep>(&rep_)) {
    const std::size_t cols = 2 * r->action.generator_names.size();
    Index cur = a;
    for (auto c : r->words[b]) cur = r->action.columns[cur * cols + c];
    return cur;
  }
  const std::size_t m = base_->order();
  Index out = 0;
  std::size_t place = 1;
  for (int i = 0; i < factors_; ++i) {
    Index x = static_cast<Index>(a % m), y = static_cast<Index>(b % m);
    out += static_cast<Index>(base_->mul(x, y) * place);
    a /= m;
    b /= m;
    place *= m;
  }
  return out;
}

Index FiniteGroup::commutator(Index a, Index b) const {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

Index FiniteGroup::conjugate(Index g, Index x) const {
  return mul(mul(g, x), inverse(g));
}

Index FiniteGroup::power(Index a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Index r = 0;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::string FiniteGroup::label(Index a) const {
  if (std::holds_alternative<PowerRep>(rep_)) {
    std::string s = "(";
    auto c = coordinates(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += base_->label(c[i]);
    }
    return s + ")";
  }
  return labels_.at(a);
}

std::optional<Index> FiniteGroup::find(std::string_view label) const {
  std::string l = trim(label);
  if (std::holds_alternative<PowerRep>(rep_)) {
    if (l.size() < 2 || l.front() != '(' || l.back() != ')') return std::nullopt;
    auto parts = split_top_level(std::string_view(l).substr(1, l.size() - 2), ',');
    if (parts.size() != static_cast<std::size_t>(factors_)) return std::nullopt;
    std::vector<Index> c;
    for (auto& p : parts) {
      auto x = base_->find(p);
      if (!x) return std::nullopt;
      c.push_back(*x);
    }
    return from_coordinates(c);
  }
  auto it = by_label_.find(l);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<Index> FiniteGroup::coordinates(Index a) const {
  if (!base_) return {a};
  std::vector<Index> c(factors_);
  const std::size_t m = base_->order();
  for (int i = 0; i < factors_; ++i) {
    c[i] = static_cast<Index>(a % m);
    a /= m;
  }
  return c;
}

Index FiniteGroup::from_coordinates(std::span<const Index> coords) const {
  if (!base_) return coords.empty() ? 0 : coords[0];
  if (coords.size() != static_cast<std::size_t>(factors_))
    throw DomainError("wrong number of coordinates");
  Index out = 0;
  std::size_t place = 1;
  for (auto c : coords) {
    out += static_cast<Index>(c * place);
    place *= base_->order();
  }
  return out;
}

}  // namespace moore
