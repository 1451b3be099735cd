#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace moore {

using Index = std::uint32_t;

/// A finite group with elements 0..order-1 and identity 0.
///
/// Three storage backends share one interface: an explicit multiplication
/// table, a direct power of a table group (coordinate-wise arithmetic, used
/// for the Cech nerve levels), and the right-regular action of a coset
/// table (used for quotients too large to tabulate).
class FiniteGroup {
 public:
  /// Right-regular action: row `e` of `columns` holds e*x for each column x.
  /// Column 2k is generator k and column 2k+1 its inverse.
  struct RegularAction {
    std::vector<std::string> generator_names;
    std::vector<Index> columns;  // order x (2 * generator_names.size())
    std::size_t order = 0;
  };

  /// Validates the Latin-square property and identity at index 0; checks
  /// associativity on all triples when order <= 256.
  static std::shared_ptr<const FiniteGroup> from_table(
      const std::vector<std::vector<Index>>& table,
      std::vector<std::string> labels = {}, std::string name = {});

  static std::shared_ptr<const FiniteGroup> direct_power(
      std::shared_ptr<const FiniteGroup> base, int factors);

  /// Materializes a table when the order is small enough, otherwise keeps
  /// the action and multiplies by tracing words.
  static std::shared_ptr<const FiniteGroup> from_regular_action(
      RegularAction action, std::string name);

  std::size_t order() const { return order_; }
  static constexpr Index identity() { return 0; }
  Index mul(Index a, Index b) const;
  Index inverse(Index a) const { return inverse_[a]; }
  /// a b a^-1 b^-1
  Index commutator(Index a, Index b) const;
  /// g x g^-1
  Index conjugate(Index g, Index x) const;
  Index power(Index a, long long k) const;
  std::size_t element_order(Index a) const;
  bool is_abelian() const { return abelian_; }

  std::string label(Index a) const;
  std::optional<Index> find(std::string_view label) const;
  const std::string& name() const { return name_; }

  /// Number of direct factors (1 unless built by direct_power).
  int factors() const { return factors_; }
  const std::shared_ptr<const FiniteGroup>& base() const { return base_; }
  std::vector<Index> coordinates(Index a) const;
  Index from_coordinates(std::span<const Index> coords) const;

 private:
  FiniteGroup() = default;
  void finish();

  struct TableRep {
    std::vector<Index> table;  // row-major order x order
  };
  struct PowerRep {};
  struct ActionRep {
    RegularAction action;
    std::vector<std::vector<std::uint16_t>> words;  // column words from 0
  };

  std::size_t order_ = 0;
  std::string name_;
  std::vector<Index> inverse_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> by_label_;
  bool abelian_ = false;
  int factors_ = 1;
  std::shared_ptr<const FiniteGroup> base_;
  std::variant<TableRep, PowerRep, ActionRep> rep_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace moore
