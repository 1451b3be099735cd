#include "moore/fp_group/free_product.hpp"

#include "moore/fp_group/errors.hpp"

namespace moore {

FreeProduct::FreeProduct(FiniteGroupPtr factor, int copies)
    : factor_(std::move(factor)), copies_(copies) {
  if (!factor_ || copies_ < 0) throw DomainError("invalid free product");
}

void FreeProduct::append(FreeProductWord& out, Syllable s) const {
  if (s.copy < 0 || s.copy >= copies_)
    throw DomainError("copy index " + std::to_string(s.copy) +
                      " outside free product of " + std::to_string(copies_) +
                      " copies");
  if (s.element >= factor_->order())
    throw DomainError("element index outside the factor group");
  if (s.element == FiniteGroup::identity()) return;
  if (!out.empty() && out.back().copy == s.copy) {
    Index m = factor_->mul(out.back().element, s.element);
    out.pop_back();
    if (m != FiniteGroup::identity()) out.push_back({s.copy, m});
    return;
  }
  out.push_back(s);
}

FreeProductWord FreeProduct::reduce(const FreeProductWord& w) const {
  FreeProductWord out;
  out.reserve(w.size());
  for (const auto& s : w) append(out, s);
  return out;
}

FreeProductWord FreeProduct::mul(const FreeProductWord& a,
                                 const FreeProductWord& b) const {
  FreeProductWord out = a;
  for (const auto& s : b) append(out, s);
  return out;
}

FreeProductWord FreeProduct::inverse(const FreeProductWord& a) const {
  FreeProductWord out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    out.push_back({it->copy, factor_->inverse(it->element)});
  return out;
}

FreeProductWord FreeProduct::commutator(const FreeProductWord& a,
                                        const FreeProductWord& b) const {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

std::string FreeProduct::format(const FreeProductWord& w) const {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& syl : w) {
    if (!s.empty()) s += "*";
    s += factor_->label(syl.element) + "@" + std::to_string(syl.copy);
  }
  return s;
}

FreeProductWord FreeProduct::parse(std::string_view text) const {
  FreeProductWord out;
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t.push_back(c);
  if (t.empty() || t == "e" || t == "1") return out;
  std::size_t pos = 0;
  int depth = 0;
  std::size_t start = 0;
  auto take = [&](std::string_view tok) {
    auto at = tok.rfind('@');
    if (at == std::string_view::npos)
      throw DomainError("syllable '" + std::string(tok) + "' lacks '@copy'");
    auto lbl = factor_->find(tok.substr(0, at));
    if (!lbl) throw DomainError("unknown element '" + std::string(tok.substr(0, at)) + "'");
    int copy;
    try {
      copy = std::stoi(std::string(tok.substr(at + 1)));
    } catch (const std::exception&) {
      throw DomainError("bad copy index in '" + std::string(tok) + "'");
    }
    append(out, {copy, *lbl});
  };
  for (; pos < t.size(); ++pos) {
    if (t[pos] == '(') ++depth;
    if (t[pos] == ')') --depth;
    if (t[pos] == '*' && depth == 0) {
      take(std::string_view(t).substr(start, pos - start));
      start = pos + 1;
    }
  }
  take(std::string_view(t).substr(start));
  return out;
}

}  // namespace moore
