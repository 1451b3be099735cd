#include "moore/peiffer/expansion.hpp"

#include <cctype>

#include "moore/fp_group/errors.hpp"

namespace moore {

std::optional<SymAtom> sym_face(const SymAtom& a, int k) {
  SymAtom out = a;
  for (std::size_t idx = 0; idx < out.ops.size(); ++idx) {
    int i = out.ops[idx];
    if (k == i || k == i + 1) {
      out.ops.erase(out.ops.begin() + static_cast<std::ptrdiff_t>(idx));
      return out;
    }
    if (k < i)
      out.ops[idx] = i - 1;
    else
      --k;
  }
  if (k < a.dim) return std::nullopt;
  throw Unsupported("d_" + std::to_string(k) + " of a Moore argument is not symbolic");
}

SymAtom sym_degeneracy(const SymAtom& a, int k) {
  std::vector<int> ops{k};
  ops.insert(ops.end(), a.ops.begin(), a.ops.end());
  SymAtom out = a;
  out.ops = normalize_degeneracy_string(a.dim, ops).indices();
  return out;
}

namespace {

SymExpr simplify(const SymExpr& e) {
  SymExpr out;
  for (const auto& c : e) {
    if (c.left == c.right) continue;
    if (!out.empty() && out.back().left == c.right && out.back().right == c.left) {
      out.pop_back();
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

SymExpr sym_p(const SymExpr& e, int k) {
  SymExpr back;
  for (const auto& c : e) {
    auto l = sym_face(c.left, k), r = sym_face(c.right, k);
    if (!l || !r) continue;
    back.push_back({sym_degeneracy(*l, k), sym_degeneracy(*r, k)});
  }
  SymExpr out = e;
  // (s_k d_k z)^-1 reverses the product and swaps each commutator
  for (auto it = back.rbegin(); it != back.rend(); ++it) out.push_back({it->right, it->left});
  return simplify(out);
}

SymExpr expand_pairing(const PeifferPair& pair) {
  const int n = pair.n;
  SymAtom x{pair.alpha.indices(), 'x', n - pair.alpha.length()};
  SymAtom y{pair.beta.indices(), 'y', n - pair.beta.length()};
  SymExpr e{{x, y}};
  for (int k = 0; k < n; ++k) e = sym_p(e, k);
  return e;
}

std::string atom_latex(const SymAtom& a) {
  std::string s;
  for (int i : a.ops) s += "s_" + std::to_string(i);
  return s + a.var + "_" + std::to_string(a.dim);
}

std::string expr_latex(const SymExpr& e) {
  if (e.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) s += "{~}";
    s += "[" + atom_latex(e[k].left) + ", " + atom_latex(e[k].right) + "]";
  }
  return s;
}

std::string pairing_latex(const PeifferPair& pair, const SymExpr& e) {
  const int n = pair.n;
  return "F_{" + pair.alpha.to_string() + pair.beta.to_string() + "}(x_" +
         std::to_string(n - pair.alpha.length()) + ", y_" + std::to_string(n - pair.beta.length()) +
         ") = " + expr_latex(e);
}

std::string pairing_text(const PeifferPair& pair, const SymExpr& e) {
  std::string s = pairing_latex(pair, e);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "{~}") == 0) {
      out += " ";
      i += 2;
    } else if (s[i] != '_' && s[i] != '{' && s[i] != '}') {
      out += s[i];
    }
  }
  return out;
}

nlohmann::json pairing_json(const PeifferPair& pair, const SymExpr& e) {
  auto atom = [](const SymAtom& a) {
    return nlohmann::json{{"s", a.ops}, {"var", std::string(1, a.var)}, {"dim", a.dim}};
  };
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& c : e) factors.push_back({{"left", atom(c.left)}, {"right", atom(c.right)}});
  return {{"alpha", pair.alpha.indices()},
          {"beta", pair.beta.indices()},
          {"factors", factors},
          {"latex", pairing_latex(pair, e)}};
}

SymExpr parse_sym_expr(std::string_view text) {
  std::string t;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "{~}") == 0) {
      i += 2;
      continue;
    }
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '~') continue;
    t.push_back(c);
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> SymAtom {
    throw DomainError("symbolic expression: " + what + " at " + std::to_string(pos));
  };
  auto number = [&] {
    if (pos >= t.size() || t[pos] != '_') fail("expected '_'");
    ++pos;
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) fail("expected index");
    return std::stoi(t.substr(start, pos - start));
  };
  auto atom = [&]() -> SymAtom {
    SymAtom a;
    while (pos < t.size() && t[pos] == 's') {
      ++pos;
      a.ops.push_back(number());
    }
    if (pos >= t.size() || (t[pos] != 'x' && t[pos] != 'y')) return fail("expected x or y");
    a.var = t[pos++];
    a.dim = number();
    return a;
  };
  SymExpr e;
  if (t == "1") return e;
  while (pos < t.size()) {
    if (t[pos] != '[') fail("expected '['");
    ++pos;
    SymAtom l = atom();
    if (pos >= t.size() || t[pos] != ',') fail("expected ','");
    ++pos;
    SymAtom r = atom();
    if (pos >= t.size() || t[pos] != ']') fail("expected ']'");
    ++pos;
    e.push_back({l, r});
  }
  return e;
}

GroupElement evaluate(const SimplicialGroupModel& m, const SymExpr& e, const GroupElement& x,
                      const GroupElement& y) {
  if (e.empty()) throw DomainError("cannot infer the level of an empty expression");
  auto value = [&](const SymAtom& a) {
    return apply_degeneracy_tuple(m, SurjTuple(a.level(), a.ops), a.var == 'x' ? x : y);
  };
  GroupElement g = m.identity(e.front().left.level());
  for (const auto& c : e) g = mul(g, commutator(value(c.left), value(c.right)));
  return g;
}

}  // namespace moore
