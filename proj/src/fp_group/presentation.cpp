#include "moore/fp_group/presentation.hpp"

#include <cctype>
#include <map>

#include "moore/fp_group/closure.hpp"
#include "moore/fp_group/errors.hpp"

namespace moore {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word word_commutator(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  auto ai = inverse_word(a), bi = inverse_word(b);
  out.insert(out.end(), ai.begin(), ai.end());
  out.insert(out.end(), bi.begin(), bi.end());
  return free_reduce(out);
}

void Presentation::validate() const {
  const int k = static_cast<int>(generators.size());
  for (const auto& r : relators)
    for (Letter l : r)
      if (l == 0 || letter_gen(l) >= k)
        throw DomainError("relator mentions an undeclared generator");
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!s.empty()) s += "*";
    s += generators.at(letter_gen(w[i]));
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s;
}

std::string Presentation::to_string() const {
  std::string s = "gens: ";
  for (std::size_t i = 0; i < generators.size(); ++i)
    s += (i ? ", " : "") + generators[i];
  s += " ; rels: ";
  for (std::size_t i = 0; i < relators.size(); ++i)
    s += (i ? ", " : "") + format_word(relators[i]);
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(const std::map<std::string, int>& names, std::string_view s)
      : names_(names), s_(s) {}

  Word parse() {
    Word w = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return free_reduce(w);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw DomainError("word '" + std::string(s_) + "': " + msg);
  }

  Word expr() {
    Word w = term();
    while (accept('*')) {
      Word t = term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return w;
  }

  Word term() {
    Word a = atom();
    while (accept('^')) {
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long long e = std::stoll(std::string(s_.substr(start, pos_ - start)));
      Word base = neg ? inverse_word(a) : a;
      Word out;
      for (long long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
      a = std::move(out);
    }
    return a;
  }

  Word atom() {
    if (accept('(')) {
      Word w = expr();
      if (!accept(')')) fail("expected ')'");
      return w;
    }
    if (accept('[')) {
      Word u = expr();
      if (!accept(',')) fail("expected ','");
      Word v = expr();
      if (!accept(']')) fail("expected ']'");
      return word_commutator(u, v);
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected generator");
    std::string name(s_.substr(start, pos_ - start));
    if (name == "1") return {};
    auto it = names_.find(name);
    if (it == names_.end()) fail("unknown generator '" + name + "'");
    return {gen_letter(it->second)};
  }

  const std::map<std::string, int>& names_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::map<std::string, int> name_map(const Presentation& p) {
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < p.generators.size(); ++i) m[p.generators[i]] = static_cast<int>(i);
  return m;
}

}  // namespace

Word parse_word(const Presentation& p, std::string_view text) {
  auto names = name_map(p);
  return WordParser(names, text).parse();
}

Presentation parse_presentation(std::string_view text) {
  auto semi = text.find(';');
  std::string_view gens_part = text.substr(0, semi);
  std::string_view rels_part = semi == std::string_view::npos ? "" : text.substr(semi + 1);
  auto strip_key = [](std::string_view part, std::string_view key) {
    std::string t = trim(part);
    if (t.rfind(key, 0) == 0) t = trim(std::string_view(t).substr(key.size()));
    return t;
  };
  Presentation p;
  std::string g = strip_key(gens_part, "gens:");
  if (!g.empty())
    for (auto& name : split_list(g)) {
      std::string n = trim(name);
      if (n.empty()) throw DomainError("empty generator name");
      for (char c : n)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw DomainError("invalid generator name '" + n + "'");
      p.generators.push_back(n);
    }
  std::string r = strip_key(rels_part, "rels:");
  if (!r.empty())
    for (auto& rel : split_list(r)) p.relators.push_back(parse_word(p, rel));
  p.validate();
  return p;
}

Presentation table_presentation(const FiniteGroup& g) {
  Presentation p;
  for (Index a = 1; a < g.order(); ++a) p.generators.push_back("g" + std::to_string(a));
  for (Index a = 1; a < g.order(); ++a)
    for (Index b = 1; b < g.order(); ++b) {
      Index c = g.mul(a, b);
      Word w{gen_letter(a - 1), gen_letter(b - 1)};
      if (c != 0) w.push_back(-gen_letter(c - 1));
      p.relators.push_back(w);
    }
  return p;
}

Index FiniteHomomorphism::evaluate(const Word& w) const {
  Index x = 0;
  for (Letter l : w) {
    Index y = images.at(letter_gen(l));
    x = target->mul(x, l > 0 ? y : target->inverse(y));
  }
  return x;
}

bool FiniteHomomorphism::preserves_relators(const Presentation& p) const {
  if (images.size() != p.generators.size()) return false;
  for (const auto& r : p.relators)
    if (evaluate(r) != 0) return false;
  return true;
}

bool FiniteHomomorphism::is_onto() const {
  Subgroup h(target);
  for (Index x : images) h.add_generator(x);
  return h.size() == target->order();
}

}  // namespace moore
