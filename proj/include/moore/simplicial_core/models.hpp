#pragma once

#include <string_view>

#include "moore/simplicial_core/model.hpp"
#include "moore/fp_group/free_product.hpp"
#include "moore/fp_group/reidemeister_schreier.hpp"
#include "moore/fp_group/todd_coxeter.hpp"

namespace moore {

/// K(pi, 0): every level pi, every map the identity.
ModelPtr constant_model(FiniteGroupPtr pi, int nmax);

/// G_n = pi^(n+1); d_i deletes coordinate i, s_i repeats it.
ModelPtr cech_nerve(FiniteGroupPtr pi, int nmax);

/// pi smash S^1: level n is the free product of n copies of pi, copy i
/// holding g^x_i where x_i is the threshold map [n] -> [1] with first 1 at i+1.
class CarlssonModel : public SimplicialGroupModel {
 public:
  CarlssonModel(FiniteGroupPtr pi, int nmax);

  std::string name() const override { return "carlsson:" + pi_->name(); }
  int max_dim() const override { return nmax_; }
  GroupHandle level(int n) const override;
  const FreeProductPtr& product_level(int n) const;
  GroupElement face(int n, int i, const GroupElement& g) const override;
  GroupElement degeneracy(int n, int i, const GroupElement& g) const override;
  std::vector<GroupElement> generators(int n) const override;
  const FiniteGroupPtr& pi() const { return pi_; }

  /// Syllable rules on words.
  static FreeProductWord face_word(int n, int i, const FreeProductWord& w);
  static FreeProductWord degeneracy_word(int i, const FreeProductWord& w);
  /// The element g^x_i of level n.
  GroupElement smash(int n, Index g, int i) const;

  /// Level n presented on one generator per syllable (i, g), g != 1,
  /// numbered i * (|pi| - 1) + g - 1, with the multiplication table of each copy.
  Presentation level_presentation(int n) const;
  Word to_letters(const FreeProductWord& w) const;
  FreeProductWord from_letters(const Word& w) const;
  /// NG_2 as the kernel of (d_0, d_1): G_2 -> pi x pi.
  SchreierKernel moore2_kernel() const;
  GroupElement kernel_generator(const SchreierKernel& k, int gen) const;

 private:
  FiniteGroupPtr pi_;
  int nmax_;
  std::vector<FreeProductPtr> levels_;
};

ModelPtr carlsson_circle(FiniteGroupPtr pi, int nmax);

/// H_n / Gamma_{c+1}(H_n) for the Carlsson model H; levels built by coset
/// enumeration. Elements are written as Carlsson words.
class NilpotentCarlssonModel : public FiniteModel {
 public:
  NilpotentCarlssonModel(FiniteGroupPtr pi, int nclass, int nmax, std::size_t max_cosets);

  std::string name() const override;
  GroupElement parse_element(int n, std::string_view text) const override;
  std::string format_element(const GroupElement& g) const override;
  /// Image of a Carlsson word of level n.
  GroupElement from_word(int n, const FreeProductWord& w) const;
  int nilpotency_class() const { return class_; }

 private:
  struct Built {
    Data data;
    std::vector<CosetTable> tables;
  };
  static Built build(const FiniteGroupPtr& pi, int nclass, int nmax, std::size_t max_cosets);
  NilpotentCarlssonModel(FiniteGroupPtr pi, int nclass, Built b);
  FiniteGroupPtr pi_;
  int class_;
  std::vector<CosetTable> tables_;
};

ModelPtr nilpotent_carlsson(FiniteGroupPtr pi, int nclass, int nmax);

/// Copy of a finite model with d_i on level n replaced by d_j (negative control).
ModelPtr corrupt_face(const FiniteModel& m, int n, int i, int j);

/// Resolves `constant:<g>`, `cech:<g>`, `carlsson:<g>`, `nilcarlsson:<g>[:<class>]`.
ModelPtr model_by_name(std::string_view selector, int nmax);

}  // namespace moore
