#include "moore/fp_group/todd_coxeter.hpp"

#include <deque>

#include "moore/fp_group/errors.hpp"

namespace moore {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

struct BoundHit {};

class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t max_cosets)
      : cols_(2 * gens), max_(max_cosets) {
    new_coset();
  }

  static int column(Letter l) { return 2 * letter_gen(l) + (l < 0 ? 1 : 0); }
  static int inverse_column(int c) { return c ^ 1; }

  std::uint32_t& at(std::uint32_t c, int x) { return table_[c * cols_ + x]; }
  bool live(std::uint32_t c) const { return parent_[c] == c; }
  std::size_t allocated() const { return parent_.size(); }

  std::uint32_t new_coset() {
    if (parent_.size() >= max_) throw BoundHit{};
    auto c = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kNone);
    ++live_count_;
    return c;
  }

  void define(std::uint32_t c, int x) {
    auto d = new_coset();
    at(c, x) = d;
    at(d, inverse_column(x)) = c;
  }

  std::uint32_t rep(std::uint32_t k) {
    std::uint32_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      auto next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l, std::deque<std::uint32_t>& q) {
    auto a = rep(k), b = rep(l);
    if (a == b) return;
    auto lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    --live_count_;
    q.push_back(hi);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::deque<std::uint32_t> q;
    merge(a, b, q);
    while (!q.empty()) {
      auto g = q.front();
      q.pop_front();
      for (int x = 0; x < static_cast<int>(cols_); ++x) {
        auto d = at(g, x);
        if (d == kNone) continue;
        at(d, inverse_column(x)) = kNone;
        auto mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), q);
        } else if (at(nu, inverse_column(x)) != kNone) {
          merge(mu, at(nu, inverse_column(x)), q);
        } else {
          at(mu, x) = nu;
          at(nu, inverse_column(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t a, const std::vector<int>& w) {
    if (w.empty()) return;
    std::uint32_t f = a, b = a;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != kNone) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_column(w[j])) != kNone)
        b = at(b, inverse_column(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inverse_column(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::size_t live_count_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw DomainError("max_cosets must be at least 1");
  pres.validate();
  auto columns_of = [](const Word& w) {
    std::vector<int> c;
    for (Letter l : free_reduce(w)) c.push_back(Enumerator::column(l));
    return c;
  };
  std::vector<std::vector<int>> rels, subs;
  for (const auto& r : pres.relators) rels.push_back(columns_of(r));
  for (const auto& s : subgroup_gens) subs.push_back(columns_of(s));

  const std::size_t cols = 2 * pres.generators.size();
  CosetTable out;
  out.columns = cols;
  Enumerator e(pres.generators.size(), max_cosets);
  try {
    for (const auto& s : subs) e.scan_and_fill(0, s);
    for (std::uint32_t c = 0; c < e.allocated(); ++c) {
      for (const auto& r : rels) {
        if (!e.live(c)) break;
        e.scan_and_fill(c, r);
      }
      for (int x = 0; x < static_cast<int>(cols); ++x)
        if (e.live(c) && e.at(c, x) == kNone) e.define(c, x);
    }
  } catch (const BoundHit&) {
    out.status = CosetTable::Status::undecided_at_bound;
    out.peak = e.allocated();
    return out;
  }
  out.peak = e.allocated();

  std::vector<std::uint32_t> number(e.allocated(), kNone);
  std::uint32_t next = 0;
  for (std::uint32_t c = 0; c < e.allocated(); ++c)
    if (e.live(c)) number[c] = next++;
  out.index = next;
  out.table.assign(out.index * cols, kNone);
  for (std::uint32_t c = 0; c < e.allocated(); ++c) {
    if (!e.live(c)) continue;
    for (std::size_t x = 0; x < cols; ++x) {
      auto d = e.at(c, static_cast<int>(x));
      if (d == kNone) throw Error("coset enumeration left an undefined entry");
      out.table[number[c] * cols + x] = number[e.rep(d)];
    }
  }
  out.status = CosetTable::Status::closed;
  return out;
}

}  // namespace moore
