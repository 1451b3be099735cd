#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace moore {

/// An element (i_l, ..., i_1) of S(n): the degeneracy string
/// s_{i_l} ... s_{i_1} from level n-l to level n, with i_l > ... > i_1.
class SurjTuple {
 public:
  SurjTuple() = default;
  /// Indices high-to-low; throws DomainError unless strictly decreasing in [0, dim).
  SurjTuple(int dim, const std::vector<int>& indices);
  static SurjTuple from_mask(int dim, std::uint32_t mask);
  static SurjTuple empty(int dim) { return from_mask(dim, 0); }

  int dim() const { return dim_; }
  std::uint32_t mask() const { return mask_; }
  int length() const;
  bool is_empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  /// High-to-low, as written.
  std::vector<int> indices() const;
  /// "(2,1)"; the empty tuple prints as "()".
  std::string to_string() const;

  friend bool operator==(const SurjTuple&, const SurjTuple&) = default;

 private:
  int dim_ = 0;
  std::uint32_t mask_ = 0;
};

/// The total order of S(n): compare index lists from i_1 upward; at the
/// first difference the tuple with the smaller index is greater; a proper
/// prefix is smaller. Throws DomainError on a dimension mismatch.
std::strong_ordering compare(const SurjTuple& a, const SurjTuple& b);
inline bool operator<(const SurjTuple& a, const SurjTuple& b) { return compare(a, b) < 0; }

SurjTuple intersect(const SurjTuple& a, const SurjTuple& b);
inline int length(const SurjTuple& a) { return a.length(); }

constexpr int kMaxPosetDim = 16;

/// All 2^n tuples in increasing order. ResourceError for n > 16.
std::vector<SurjTuple> enumerate_S(int n);
/// Position of a within enumerate_S(a.dim()).
std::size_t rank_in_S(const SurjTuple& a);

struct PeifferPair {
  int n = 0;
  SurjTuple alpha;
  SurjTuple beta;
  std::string to_string() const { return alpha.to_string() + beta.to_string(); }
  friend bool operator==(const PeifferPair&, const PeifferPair&) = default;
};

/// Non-empty disjoint (alpha, beta) with beta < alpha, ordered by alpha then beta.
std::vector<PeifferPair> enumerate_P(int n);

/// Normal form of s_{ops[0]} s_{ops[1]} ... applied to a simplex of
/// dimension base_dim, using s_i s_j = s_{j+1} s_i for i <= j. With an rng,
/// the rewrite site is chosen at random.
SurjTuple normalize_degeneracy_string(int base_dim, std::vector<int> ops,
                                      std::mt19937* rng = nullptr);

/// The tuple with s_{gamma_*(alpha)} = s_gamma s_alpha. Requires
/// alpha.dim() == gamma.dim() - gamma.length().
SurjTuple gamma_star(const SurjTuple& gamma, const SurjTuple& alpha);

}  // namespace moore
