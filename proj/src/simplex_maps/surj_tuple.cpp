#include "moore/simplex_maps/surj_tuple.hpp"

#include <algorithm>
#include <bit>

#include "moore/fp_group/errors.hpp"

namespace moore {

SurjTuple::SurjTuple(int dim, const std::vector<int>& indices) : dim_(dim) {
  if (dim < 0 || dim > 31) throw DomainError("tuple dimension out of range");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    int i = indices[k];
    if (i < 0 || i >= dim)
      throw DomainError("index " + std::to_string(i) + " outside [0, " + std::to_string(dim) + ")");
    if (k > 0 && indices[k - 1] <= i) throw DomainError("tuple indices must strictly decrease");
    mask_ |= 1u << i;
  }
}

SurjTuple SurjTuple::from_mask(int dim, std::uint32_t mask) {
  if (dim < 0 || dim > 31 || (dim < 32 && (mask >> dim) != 0))
    throw DomainError("mask does not fit the dimension");
  SurjTuple t;
  t.dim_ = dim;
  t.mask_ = mask;
  return t;
}

int SurjTuple::length() const { return std::popcount(mask_); }

std::vector<int> SurjTuple::indices() const {
  std::vector<int> v;
  for (int i = dim_ - 1; i >= 0; --i)
    if (contains(i)) v.push_back(i);
  return v;
}

std::string SurjTuple::to_string() const {
  std::string s = "(";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

std::strong_ordering compare(const SurjTuple& a, const SurjTuple& b) {
  if (a.dim() != b.dim()) throw DomainError("comparing tuples of different dimensions");
  std::uint32_t x = a.mask(), y = b.mask();
  while (x && y) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j ? std::strong_ordering::greater : std::strong_ordering::less;
    x &= x - 1;
    y &= y - 1;
  }
  if (x) return std::strong_ordering::greater;
  if (y) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

SurjTuple intersect(const SurjTuple& a, const SurjTuple& b) {
  if (a.dim() != b.dim()) throw DomainError("intersecting tuples of different dimensions");
  return SurjTuple::from_mask(a.dim(), a.mask() & b.mask());
}

std::vector<SurjTuple> enumerate_S(int n) {
  if (n < 0) throw DomainError("negative dimension");
  if (n > kMaxPosetDim)
    throw ResourceError("S(" + std::to_string(n) + ") is too large to enumerate");
  std::vector<SurjTuple> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) out.push_back(SurjTuple::from_mask(n, m));
  std::sort(out.begin(), out.end(), [](const SurjTuple& a, const SurjTuple& b) { return a < b; });
  return out;
}

std::size_t rank_in_S(const SurjTuple& a) {
  thread_local std::vector<std::vector<std::uint32_t>> cache;
  const int n = a.dim();
  if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(n + 1);
  auto& ranks = cache[n];
  if (ranks.empty()) {
    auto s = enumerate_S(n);
    ranks.resize(s.size());
    for (std::size_t r = 0; r < s.size(); ++r) ranks[s[r].mask()] = static_cast<std::uint32_t>(r);
  }
  return ranks[a.mask()];
}

std::vector<PeifferPair> enumerate_P(int n) {
  auto s = enumerate_S(n);
  std::vector<PeifferPair> out;
  for (std::size_t a = 1; a < s.size(); ++a)
    for (std::size_t b = 1; b < a; ++b)
      if ((s[a].mask() & s[b].mask()) == 0) out.push_back({n, s[a], s[b]});
  for (const auto& p : out)
    if ((p.alpha.mask() & p.beta.mask()) || !(p.beta < p.alpha) || p.beta.is_empty())
      throw Error("pair enumeration produced an invalid pair");
  return out;
}

SurjTuple normalize_degeneracy_string(int base_dim, std::vector<int> ops, std::mt19937* rng) {
  const int k = static_cast<int>(ops.size());
  // s_{ops[j]} acts on dimension base_dim + (k - 1 - j)
  for (int j = 0; j < k; ++j) {
    int d = base_dim + (k - 1 - j);
    if (ops[j] < 0 || ops[j] > d)
      throw DomainError("degeneracy s_" + std::to_string(ops[j]) + " invalid on dimension " +
                        std::to_string(d));
  }
  for (;;) {
    std::vector<int> sites;
    for (int j = 0; j + 1 < k; ++j)
      if (ops[j] <= ops[j + 1]) sites.push_back(j);
    if (sites.empty()) break;
    int j = sites.front();
    if (rng) j = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(*rng)];
    int a = ops[j], b = ops[j + 1];
    ops[j] = b + 1;
    ops[j + 1] = a;
  }
  return SurjTuple(base_dim + k, ops);
}

SurjTuple gamma_star(const SurjTuple& gamma, const SurjTuple& alpha) {
  if (alpha.dim() != gamma.dim() - gamma.length())
    throw DomainError("gamma_* needs alpha over the source dimension of gamma");
  auto ops = gamma.indices();
  auto a = alpha.indices();
  ops.insert(ops.end(), a.begin(), a.end());
  return normalize_degeneracy_string(alpha.dim() - alpha.length(), ops);
}

}  // namespace moore
