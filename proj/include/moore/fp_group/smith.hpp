#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moore/fp_group/closure.hpp"
#include "moore/fp_group/presentation.hpp"

namespace moore {

using BigInt = boost::multiprecision::cpp_int;

/// Z^free_rank + sum Z/d_i with 1 < d_1 | d_2 | ...
struct AbelianInvariants {
  std::vector<std::int64_t> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  /// Product of the torsion, or nullopt when infinite.
  std::optional<std::int64_t> order() const;
  /// e.g. "Z/2 + Z/4 + Z", or "1" for the trivial group.
  std::string to_string() const;
  /// Torsion coefficients followed by one 0 per free summand.
  std::vector<std::int64_t> as_list() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Integer row lattice kept in echelon form as rows are added.
class RelationLattice {
 public:
  explicit RelationLattice(std::size_t columns)
      : columns_(columns), pivots_(columns), small_(columns) {}

  void add(const std::vector<long long>& row);
  void add(std::vector<BigInt> row);
  std::size_t columns() const { return columns_; }
  std::size_t rank() const;
  /// Invariants of Z^columns / lattice.
  AbelianInvariants invariants() const;

 private:
  // Rows live in small_ until a 64-bit overflow, then move to pivots_ for good.
  void promote();

  std::size_t columns_;
  std::vector<std::optional<std::vector<BigInt>>> pivots_;
  std::vector<std::optional<std::vector<std::int64_t>>> small_;
  bool big_ = false;
};

/// Diagonal of the Smith normal form (nonzero entries, ascending divisibility).
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

AbelianInvariants invariants_from_matrix(const std::vector<std::vector<long long>>& rows,
                                         std::size_t columns);

/// Invariants of the abelianization of a presented group.
AbelianInvariants abelian_invariants(const Presentation& pres);

/// Invariants of a finite abelian group, from counts of p-power torsion.
AbelianInvariants finite_abelian_invariants(const FiniteGroup& g);

/// Invariants of g / n, which must be abelian.
AbelianInvariants quotient_invariants(const Subgroup& n);

}  // namespace moore
