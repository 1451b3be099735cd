#include "moore/fp_group/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <type_traits>

#include "moore/fp_group/errors.hpp"

namespace moore {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// floor division
BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t to_i64(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw ResourceError("invariant factor does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

// Converts elementary divisors (prime powers) into the invariant-factor chain.
std::vector<std::int64_t> chain_from_prime_powers(std::map<std::int64_t, std::vector<std::int64_t>> by_prime) {
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> out(len, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
  return out;
}

}  // namespace

std::optional<std::int64_t> AbelianInvariants::order() const {
  if (free_rank) return std::nullopt;
  std::int64_t o = 1;
  for (auto d : torsion) o *= d;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "1";
  std::string s;
  for (auto d : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(d));
  for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
  return s;
}

std::vector<std::int64_t> AbelianInvariants::as_list() const {
  std::vector<std::int64_t> v = torsion;
  v.insert(v.end(), free_rank, 0);
  return v;
}

namespace {

struct Overflow {};

std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw Overflow{};
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// a - q * b
BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t t, r;
  if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &r)) throw Overflow{};
  return r;
}

template <class T>
void negate(std::vector<T>& v) {
  for (auto& x : v) {
    if constexpr (std::is_same_v<T, std::int64_t>)
      if (x == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    x = -x;
  }
}

// Echelon insertion. Pivot rows about to change are saved in `journal` first.
template <class T>
void insert_row(std::vector<std::optional<std::vector<T>>>& pivots, std::vector<T> v,
                std::vector<std::pair<std::size_t, std::optional<std::vector<T>>>>* journal) {
  const std::size_t n = pivots.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    auto& slot = pivots[c];
    if (journal) journal->emplace_back(c, slot);
    if (!slot) {
      if (v[c] < 0) negate(v);
      slot = std::move(v);
      return;
    }
    auto& p = *slot;
    // Euclid on the pivot column, keeping both rows in the lattice.
    while (v[c] != 0) {
      T q = fdiv(p[c], v[c]);
      for (std::size_t k = c; k < n; ++k) p[k] = sub_mul(p[k], q, v[k]);
      std::swap(p, v);
    }
    if (p[c] < 0) negate(p);
    // Keep entries to the right of the pivot small.
    for (std::size_t k = c + 1; k < n; ++k)
      if (pivots[k] && p[k] != 0) {
        T q = fdiv(p[k], (*pivots[k])[k]);
        if (q != 0)
          for (std::size_t m = k; m < n; ++m) p[m] = sub_mul(p[m], q, (*pivots[k])[m]);
      }
  }
}

}  // namespace

void RelationLattice::add(const std::vector<long long>& row) {
  if (row.size() != columns_) throw DomainError("relation row has the wrong length");
  if (!big_) {
    std::vector<std::pair<std::size_t, std::optional<std::vector<std::int64_t>>>> journal;
    try {
      insert_row(small_, std::vector<std::int64_t>(row.begin(), row.end()), &journal);
      return;
    } catch (const Overflow&) {
      for (auto it = journal.rbegin(); it != journal.rend(); ++it) small_[it->first] = std::move(it->second);
      promote();
    }
  }
  add(std::vector<BigInt>(row.begin(), row.end()));
}

void RelationLattice::add(std::vector<BigInt> v) {
  if (v.size() != columns_) throw DomainError("relation row has the wrong length");
  promote();
  insert_row(pivots_, std::move(v), static_cast<std::vector<std::pair<std::size_t, std::optional<std::vector<BigInt>>>>*>(nullptr));
}

void RelationLattice::promote() {
  if (big_) return;
  big_ = true;
  for (std::size_t c = 0; c < columns_; ++c)
    if (small_[c]) pivots_[c] = std::vector<BigInt>(small_[c]->begin(), small_[c]->end());
  small_.clear();
}

std::size_t RelationLattice::rank() const {
  std::size_t r = 0;
  for (const auto& p : pivots_) r += p.has_value();
  for (const auto& p : small_) r += p.has_value();
  return r;
}

AbelianInvariants RelationLattice::invariants() const {
  std::vector<std::vector<BigInt>> m;
  for (const auto& p : pivots_)
    if (p) m.push_back(*p);
  for (const auto& p : small_)
    if (p) m.emplace_back(p->begin(), p->end());
  AbelianInvariants out;
  out.free_rank = columns_ - m.size();
  if (m.empty()) return out;
  for (const auto& d : smith_diagonal(std::move(m)))
    if (d != 1) out.torsion.push_back(to_i64(d));
  return out;
}

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  if (m.empty()) return diag;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the remaining block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs_big(m[i][j]) < abs_big(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) {
        BigInt q = fdiv(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (m[t][j] != 0) {
        BigInt q = fdiv(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
    if (!clean) continue;
    // Pivot must divide the rest of the block.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs_big(m[t][t]));
    ++t;
  }
  return diag;
}

AbelianInvariants invariants_from_matrix(const std::vector<std::vector<long long>>& rows,
                                         std::size_t columns) {
  RelationLattice lat(columns);
  for (const auto& r : rows) lat.add(r);
  return lat.invariants();
}

AbelianInvariants abelian_invariants(const Presentation& pres) {
  pres.validate();
  RelationLattice lat(pres.generators.size());
  for (const auto& r : pres.relators) {
    std::vector<long long> v(pres.generators.size(), 0);
    for (Letter l : r) v[letter_gen(l)] += l > 0 ? 1 : -1;
    lat.add(v);
  }
  return lat.invariants();
}

AbelianInvariants finite_abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw DomainError("group is not abelian");
  std::int64_t n = static_cast<std::int64_t>(g.order());
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  std::int64_t rest = n;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // count[k] = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i))
    std::vector<int> logs{0};
    std::int64_t pk = 1;
    for (;;) {
      pk *= p;
      std::int64_t c = 0;
      for (Index x = 0; x < g.order(); ++x)
        if (g.power(x, pk) == 0) ++c;
      int l = 0;
      while (c > 1) {
        c /= p;
        ++l;
      }
      if (l == logs.back()) break;
      logs.push_back(l);
    }
    // number of cyclic factors of exponent >= k is logs[k] - logs[k-1]
    std::vector<int> at_least;
    for (std::size_t k = 1; k < logs.size(); ++k) at_least.push_back(logs[k] - logs[k - 1]);
    at_least.push_back(0);
    for (std::size_t k = 0; k + 1 < at_least.size(); ++k) {
      int exactly = at_least[k] - at_least[k + 1];
      std::int64_t q = 1;
      for (std::size_t i = 0; i <= k; ++i) q *= p;
      for (int i = 0; i < exactly; ++i) by_prime[p].push_back(q);
    }
  }
  AbelianInvariants out;
  out.torsion = chain_from_prime_powers(std::move(by_prime));
  return out;
}

AbelianInvariants quotient_invariants(const Subgroup& n) {
  const auto& g = *n.ambient();
  // Coset labels by the least element of each coset.
  std::vector<Index> coset(g.order(), 0xffffffffu);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset[x] != 0xffffffffu) continue;
    Index id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index h : n.elements()) coset[g.mul(x, h)] = id;
  }
  std::vector<std::vector<Index>> table(reps.size(), std::vector<Index>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = coset[g.mul(reps[a], reps[b])];
  auto q = FiniteGroup::from_table(table, {}, g.name() + "/N");
  return finite_abelian_invariants(*q);
}

}  // namespace moore
