#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "moore/fp_group/errors.hpp"
#include "moore/fp_group/groups.hpp"
#include "moore/simplex_maps/surj_tuple.hpp"
#include "moore/simplicial_core/models.hpp"

using namespace moore;

namespace {

std::string listing(int n) {
  std::string s;
  for (const auto& t : enumerate_S(n)) s += (s.empty() ? "" : " < ") + t.to_string();
  return s;
}

std::size_t binom(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("S(n) orders") {
  CHECK(listing(2) == "() < (1) < (0) < (1,0)");
  CHECK(listing(3) == "() < (2) < (1) < (2,1) < (0) < (2,0) < (1,0) < (2,1,0)");
  CHECK(listing(4) ==
        "() < (3) < (2) < (3,2) < (1) < (3,1) < (2,1) < (3,2,1) < (0) < (3,0) < (2,0) < (3,2,0) < "
        "(1,0) < (3,1,0) < (2,1,0) < (3,2,1,0)");
}

TEST_CASE("S(n) sizes by length") {
  for (int n = 0; n <= 12; ++n) {
    auto s = enumerate_S(n);
    CHECK(s.size() == (std::size_t{1} << n));
    std::vector<std::size_t> by_len(n + 1, 0);
    for (const auto& t : s) ++by_len[t.length()];
    for (int l = 0; l <= n; ++l) CHECK(by_len[l] == binom(n, l));
  }
  CHECK_THROWS_AS(enumerate_S(kMaxPosetDim + 1), ResourceError);
}

TEST_CASE("compare is a strict total order agreeing with the enumeration") {
  for (int n = 1; n <= 6; ++n) {
    auto s = enumerate_S(n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(rank_in_S(s[i]) == i);
      CHECK(compare(s[i], s[i]) == std::strong_ordering::equal);
      for (std::size_t j = 0; j < s.size(); ++j) CHECK((s[i] < s[j]) == (i < j));
    }
  }
  SurjTuple e3 = SurjTuple::empty(3), t2(3, {2}), t21(3, {2, 1}), t0(3, {0});
  CHECK(e3 < t2);
  CHECK(t21 < t0);
}

TEST_CASE("tuple construction and intersection") {
  CHECK_THROWS_AS(SurjTuple(3, {1, 2}), DomainError);
  CHECK_THROWS_AS(SurjTuple(3, {3}), DomainError);
  CHECK(intersect(SurjTuple(3, {2, 0}), SurjTuple(3, {1})).is_empty());
  CHECK(intersect(SurjTuple(3, {2, 1}), SurjTuple(3, {1, 0})) == SurjTuple(3, {1}));
  CHECK(length(SurjTuple(3, {2, 1, 0})) == 3);
  CHECK(SurjTuple(3, {2, 1}).indices() == std::vector<int>{2, 1});
}

TEST_CASE("P(n)") {
  auto p2 = enumerate_P(2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].alpha == SurjTuple(2, {0}));
  CHECK(p2[0].beta == SurjTuple(2, {1}));
  std::set<std::string> p3;
  for (const auto& p : enumerate_P(3)) p3.insert(p.to_string());
  CHECK(p3 == std::set<std::string>{"(1,0)(2)", "(2,0)(1)", "(0)(2,1)", "(0)(2)", "(1)(2)", "(0)(1)"});
  CHECK_FALSE(p3.count("(2,1)(0)"));
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_P(n)) {
      CHECK_FALSE(p.alpha.is_empty());
      CHECK_FALSE(p.beta.is_empty());
      CHECK((p.alpha.mask() & p.beta.mask()) == 0);
      CHECK(p.beta < p.alpha);
    }
}

TEST_CASE("degeneracy string normal form") {
  // s_0 s_0 = s_1 s_0
  CHECK(normalize_degeneracy_string(1, {0, 0}) == SurjTuple(3, {1, 0}));
  CHECK(normalize_degeneracy_string(0, {0}) == SurjTuple(1, {0}));
  CHECK_THROWS_AS(normalize_degeneracy_string(1, {3}), DomainError);
  std::mt19937 rng(5);
  for (int t = 0; t < 500; ++t) {
    int base = rng() % 3;
    std::vector<int> ops;
    int len = 1 + rng() % 4;
    int dim = base;
    for (int k = 0; k < len; ++k) ops.insert(ops.begin(), rng() % (++dim));
    // ops[0] is applied last; each op index must be valid at its level
    auto a = normalize_degeneracy_string(base, ops);
    auto b = normalize_degeneracy_string(base, ops, &rng);
    CHECK(a == b);
  }
}

TEST_CASE("normal form agrees with the maps of a model") {
  auto m = cech_nerve(symmetric_group_3(), 4);
  std::mt19937 rng(9);
  for (int t = 0; t < 300; ++t) {
    int base = rng() % 2;
    int len = 1 + rng() % (4 - base - 0);
    if (base + len > 4) len = 4 - base;
    std::vector<int> ops;
    int dim = base;
    for (int k = 0; k < len; ++k) ops.insert(ops.begin(), rng() % (++dim));
    auto x = m->random_element(base, rng);
    auto direct = x;
    int d = base;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) direct = m->degeneracy(d++, *it, direct);
    CHECK(apply_degeneracy_tuple(*m, normalize_degeneracy_string(base, ops), x) == direct);
  }
}

TEST_CASE("gamma_star") {
  CHECK(gamma_star(SurjTuple(2, {0}), SurjTuple(1, {0})) == SurjTuple(2, {1, 0}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_S(n)) {
      auto sub = enumerate_S(n - g.length());
      CHECK(gamma_star(g, SurjTuple::empty(n - g.length())) == g);
      if (g.is_empty())
        for (const auto& a : sub) CHECK(gamma_star(g, a) == a);
      for (const auto& a : sub)
        for (const auto& b : sub) CHECK(((b < a) || b == a) == (gamma_star(g, b) < gamma_star(g, a) ||
                                                                  gamma_star(g, b) == gamma_star(g, a)));
    }
}

TEST_CASE("gamma_star composes degeneracies in a model") {
  auto m = cech_nerve(cyclic_group(3), 4);
  std::mt19937 rng(2);
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_S(n))
      for (const auto& a : enumerate_S(n - g.length())) {
        int base = n - g.length() - a.length();
        auto x = m->random_element(base, rng);
        CHECK(apply_degeneracy_tuple(*m, gamma_star(g, a), x) ==
              apply_degeneracy_tuple(*m, g, apply_degeneracy_tuple(*m, a, x)));
      }
}
