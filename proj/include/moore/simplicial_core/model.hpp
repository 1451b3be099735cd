#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "moore/fp_group/element.hpp"
#include "moore/simplex_maps/surj_tuple.hpp"

namespace moore {

/// Levels G_0..G_max_dim with faces d_i: G_n -> G_{n-1} and degeneracies
/// s_i: G_n -> G_{n+1}, 0 <= i <= n. Asking beyond max_dim is a DomainError.
class SimplicialGroupModel {
 public:
  virtual ~SimplicialGroupModel() = default;

  virtual std::string name() const = 0;
  virtual int max_dim() const = 0;
  virtual GroupHandle level(int n) const = 0;
  virtual GroupElement face(int n, int i, const GroupElement& g) const = 0;
  virtual GroupElement degeneracy(int n, int i, const GroupElement& g) const = 0;
  /// Generating set of G_n.
  virtual std::vector<GroupElement> generators(int n) const = 0;
  virtual GroupElement parse_element(int n, std::string_view text) const;
  virtual std::string format_element(const GroupElement& g) const { return g.to_string(); }

  bool is_finite(int n) const { return level(n).is_finite(); }
  GroupElement identity(int n) const { return GroupElement::identity(level(n)); }
  /// Product of up to `length` random generators and inverses; the length is
  /// itself random so that elements of odd word length are reachable.
  GroupElement random_element(int n, std::mt19937& rng, int length = 8) const;

 protected:
  void check_face(int n, int i) const;
  void check_degeneracy(int n, int i) const;
};

using ModelPtr = std::shared_ptr<const SimplicialGroupModel>;

/// Model whose levels are finite groups and whose maps are index arrays.
class FiniteModel : public SimplicialGroupModel {
 public:
  struct Data {
    std::string name;
    std::vector<FiniteGroupPtr> levels;
    // faces[n][i][x] for 1 <= n; degeneracies[n][i][x] for n < max_dim
    std::vector<std::vector<std::vector<Index>>> faces;
    std::vector<std::vector<std::vector<Index>>> degeneracies;
  };

  explicit FiniteModel(Data d);

  std::string name() const override { return data_.name; }
  int max_dim() const override { return static_cast<int>(data_.levels.size()) - 1; }
  GroupHandle level(int n) const override;
  const FiniteGroupPtr& finite_level(int n) const;
  GroupElement face(int n, int i, const GroupElement& g) const override;
  GroupElement degeneracy(int n, int i, const GroupElement& g) const override;
  Index face_index(int n, int i, Index x) const { return data_.faces[n][i][x]; }
  Index degeneracy_index(int n, int i, Index x) const { return data_.degeneracies[n][i][x]; }
  std::vector<GroupElement> generators(int n) const override;
  GroupElement parse_element(int n, std::string_view text) const override;
  const Data& data() const { return data_; }

 private:
  Data data_;
  std::vector<std::vector<GroupElement>> generators_;
};

/// s_alpha x = s_{i_l} ... s_{i_1} x with x in level alpha.dim() - #alpha.
GroupElement apply_degeneracy_tuple(const SimplicialGroupModel& m, const SurjTuple& alpha,
                                    const GroupElement& x);

}  // namespace moore
