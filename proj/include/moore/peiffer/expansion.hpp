#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "moore/simplicial_core/model.hpp"
#include "moore/simplex_maps/surj_tuple.hpp"

namespace moore {

/// s_{ops[0]} s_{ops[1]} ... v_dim with ops strictly decreasing; v is 'x' or 'y'.
struct SymAtom {
  std::vector<int> ops;
  char var = 'x';
  int dim = 0;
  int level() const { return dim + static_cast<int>(ops.size()); }
  friend bool operator==(const SymAtom&, const SymAtom&) = default;
};

struct SymCommutator {
  SymAtom left;
  SymAtom right;
  friend bool operator==(const SymCommutator&, const SymCommutator&) = default;
};

/// Product of commutators, left to right.
using SymExpr = std::vector<SymCommutator>;

/// d_k of an atom whose argument lies in NG_dim; nullopt when it is trivial.
std::optional<SymAtom> sym_face(const SymAtom& a, int k);
SymAtom sym_degeneracy(const SymAtom& a, int k);
/// p_k applied to a product of commutators, with [a,a] and adjacent
/// inverse pairs cancelled.
SymExpr sym_p(const SymExpr& e, int k);

/// p[s_alpha x, s_beta y] as a word in commutators of degenerate arguments.
SymExpr expand_pairing(const PeifferPair& pair);

std::string atom_latex(const SymAtom& a);
/// `[s_1s_0x_1, s_2y_2]{~}[s_2y_2, s_2s_0x_1]`
std::string expr_latex(const SymExpr& e);
/// `F_{(1,0)(2)}(x_1, y_2) = ...`
std::string pairing_latex(const PeifferPair& pair, const SymExpr& e);
std::string pairing_text(const PeifferPair& pair, const SymExpr& e);
nlohmann::json pairing_json(const PeifferPair& pair, const SymExpr& e);

/// Reads the latex form back (whitespace, `{~}` and braces around indices ignored).
SymExpr parse_sym_expr(std::string_view text);

/// Value of the expression with x, y substituted in a model.
GroupElement evaluate(const SimplicialGroupModel& m, const SymExpr& e, const GroupElement& x,
                      const GroupElement& y);

}  // namespace moore
