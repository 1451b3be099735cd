#include <random>

#include "doctest.h"
#include "moore/fp_group/closure.hpp"
#include "moore/fp_group/errors.hpp"
#include "moore/fp_group/free_product.hpp"
#include "moore/fp_group/groups.hpp"
#include "moore/fp_group/reidemeister_schreier.hpp"
#include "moore/fp_group/smith.hpp"
#include "moore/fp_group/todd_coxeter.hpp"
#include "pinned_matrices.hpp"

using namespace moore;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  const Index n = static_cast<Index>(g.order());
  for (Index a = 0; a < n; ++a) {
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, g.inverse(a)) == 0);
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

}  // namespace

TEST_CASE("fixture groups satisfy the group axioms") {
  for (const char* name : {"z1", "z2", "z5", "s3", "k4", "d8", "q8"}) {
    auto g = group_by_name(name);
    INFO(name);
    check_group_axioms(*g);
  }
  CHECK(group_by_name("s3")->order() == 6);
  CHECK_FALSE(group_by_name("s3")->is_abelian());
  CHECK(group_by_name("k4")->is_abelian());
  CHECK(group_by_name("q8")->element_order(*group_by_name("q8")->find("i")) == 4);
}

TEST_CASE("direct powers and regular actions") {
  auto s3 = symmetric_group_3();
  auto p = FiniteGroup::direct_power(s3, 2);
  CHECK(p->order() == 36);
  check_group_axioms(*p);
  Index x = p->from_coordinates(std::vector<Index>{1, 4});
  CHECK(p->coordinates(x) == std::vector<Index>{1, 4});
  CHECK(p->find(p->label(x)) == x);

  // Z/3 acting on itself
  FiniteGroup::RegularAction act{{"a"}, {1, 2, 2, 0, 0, 1}, 3};
  auto z3 = FiniteGroup::from_regular_action(act, "z3r");
  CHECK(z3->order() == 3);
  CHECK(z3->is_abelian());
  check_group_axioms(*z3);
}

TEST_CASE("table validation rejects non-groups") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), DomainError);
  CHECK_NOTHROW(group_from_json(R"({"order": 2, "table": [[0,1],[1,0]]})"));
  CHECK_THROWS_AS(group_from_json(R"({"order": 3, "table": [[0,1],[1,0]]})"), DomainError);
}

TEST_CASE("free product reduction") {
  auto z2 = cyclic_group(2);
  FreeProduct fp(z2, 2);
  FreeProductWord a{{0, 1}}, b{{1, 1}};
  CHECK(fp.commutator({}, b).empty());
  auto c = fp.commutator(a, b);
  CHECK(c == FreeProductWord{{0, 1}, {1, 1}, {0, 1}, {1, 1}});
  CHECK(fp.mul(a, a).empty());
  CHECK(fp.reduce({{0, 1}, {1, 1}, {1, 1}, {0, 1}}).empty());

  auto z4 = cyclic_group(4);
  FreeProduct f4(z4, 2);
  CHECK(f4.reduce({{0, 1}, {1, 3}, {1, 1}, {0, 1}}) == FreeProductWord{{0, 2}});
  CHECK(f4.parse(f4.format({{0, 1}, {1, 3}})) == FreeProductWord{{0, 1}, {1, 3}});
  CHECK(f4.format({}) == "e");
  CHECK_THROWS_AS(f4.reduce({{2, 1}}), DomainError);
}

TEST_CASE("free product words: inverse and associativity on random words") {
  auto s3 = symmetric_group_3();
  FreeProduct fp(s3, 3);
  std::mt19937 rng(3);
  auto rand_word = [&] {
    FreeProductWord w;
    for (int i = 0; i < 6; ++i)
      w.push_back({static_cast<int>(rng() % 3), static_cast<Index>(rng() % 6)});
    return fp.reduce(w);
  };
  for (int t = 0; t < 200; ++t) {
    auto a = rand_word(), b = rand_word(), c = rand_word();
    CHECK(fp.mul(fp.mul(a, b), c) == fp.mul(a, fp.mul(b, c)));
    CHECK(fp.mul(a, fp.inverse(a)).empty());
    CHECK(fp.reduce(a) == a);
  }
}

TEST_CASE("group elements refuse mixed groups") {
  auto a = GroupElement(cyclic_group(2), 1);
  auto b = GroupElement(cyclic_group(2), 1);
  CHECK_THROWS_AS(mul(a, b), GroupMismatch);
  CHECK(mul(a, a).is_identity());
}

TEST_CASE("normal closure in S3") {
  auto s3 = symmetric_group_3();
  CHECK(normal_closure_finite(s3, {0}).size() == 1);
  CHECK(normal_closure_finite(s3, {*s3->find("(12)")}).size() == 6);
  auto a3 = normal_closure_finite(s3, {*s3->find("(123)")});
  CHECK(a3.size() == 3);
  CHECK(a3.contains(*s3->find("(132)")));
  CHECK(is_normalized_by(a3, generating_set(*s3)));
  CHECK_FALSE(is_normalized_by(subgroup_closure(s3, {*s3->find("(12)")}), generating_set(*s3)));
}

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("gens: a, b ; rels: a^2, b^2, (a*b)^3, [a,b]^-1");
  CHECK(p.generators.size() == 2);
  REQUIRE(p.relators.size() == 4);
  CHECK(p.relators[0] == Word{1, 1});
  CHECK(p.relators[2] == Word{1, 2, 1, 2, 1, 2});
  CHECK(p.relators[3] == Word{2, 1, -2, -1});
  CHECK(parse_word(p, "1").empty());
  CHECK(parse_word(p, "a^-2") == Word{-1, -1});
  CHECK_THROWS_AS(parse_presentation("gens: a ; rels: c"), DomainError);
}

TEST_CASE("coset enumeration") {
  CHECK(todd_coxeter(parse_presentation("gens: a ; rels: a"), {}, 100).index == 1);
  auto s3 = parse_presentation("gens: a, b ; rels: a^2, b^2, (a*b)^3");
  auto t = todd_coxeter(s3, {}, 1000);
  REQUIRE(t.status == CosetTable::Status::closed);
  CHECK(t.index == 6);
  CHECK(todd_coxeter(s3, {{1}}, 1000).index == 3);
  auto q8 = parse_presentation("gens: i, j ; rels: i^4, i^2*j^-2, j*i*j^-1*i");
  CHECK(todd_coxeter(q8, {}, 1000).index == 8);
  // Z is infinite: the bound is hit
  CHECK(todd_coxeter(parse_presentation("gens: a ; rels: "), {}, 50).status ==
        CosetTable::Status::undecided_at_bound);
}

TEST_CASE("coset table of a multiplication table presentation has the group order") {
  for (const char* name : {"s3", "k4", "d8", "q8"}) {
    auto g = group_by_name(name);
    CHECK(todd_coxeter(table_presentation(*g), {}, 10000).index == g->order());
  }
}

TEST_CASE("Reidemeister-Schreier") {
  auto z2 = cyclic_group(2);
  SchreierKernel k1(parse_presentation("gens: a ; rels: a^2"), {z2, {1}});
  CHECK(abelian_invariants(k1.kernel()).trivial());

  auto pres = parse_presentation("gens: a, b ; rels: a^2, b^2");
  auto v = FiniteGroup::direct_power(z2, 2);
  SchreierKernel k2(pres, {v, {v->from_coordinates(std::vector<Index>{1, 0}),
                               v->from_coordinates(std::vector<Index>{0, 1})}});
  CHECK(k2.index() == 4);
  auto inv = abelian_invariants(k2.kernel());
  CHECK(inv.torsion.empty());
  CHECK(inv.free_rank == 1);
  // (ab)^2 generates: killing it kills the kernel
  auto kp = k2.kernel();
  kp.relators.push_back(k2.rewrite({1, 2, 1, 2}));
  CHECK(abelian_invariants(kp).trivial());
  CHECK_THROWS_AS(k2.rewrite({1}), DomainError);

  SchreierKernel k3(pres, {z2, {1, 1}});
  auto inv3 = abelian_invariants(k3.kernel());
  CHECK(inv3.free_rank == 1);
  CHECK(inv3.torsion.empty());

  CHECK_THROWS_AS(SchreierKernel(pres, {v, {v->from_coordinates(std::vector<Index>{1, 0}), 0}}),
                  DomainError);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(parse_presentation("gens: a ; rels: ")).free_rank == 1);
  CHECK(abelian_invariants(parse_presentation("gens: a ; rels: a^4")).torsion == std::vector<std::int64_t>{4});
  auto p = abelian_invariants(parse_presentation("gens: a, b ; rels: a^2*b^-2, b^4"));
  CHECK(p.torsion == std::vector<std::int64_t>{2, 4});
  for (const auto& m : pinned_matrices()) {
    auto inv = invariants_from_matrix(m.rows, m.columns);
    CHECK(inv.torsion == m.torsion);
    CHECK(inv.free_rank == m.free_rank);
  }
}

TEST_CASE("invariant factors form a divisibility chain on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::size_t cols = 1 + rng() % 5, rows = rng() % 6;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& r : m)
      for (auto& x : r) x = static_cast<long long>(rng() % 13) - 6;
    auto inv = invariants_from_matrix(m, cols);
    for (std::size_t i = 0; i + 1 < inv.torsion.size(); ++i) CHECK(inv.torsion[i + 1] % inv.torsion[i] == 0);
    for (auto d : inv.torsion) CHECK(d > 1);
    // row order does not matter
    std::shuffle(m.begin(), m.end(), rng);
    CHECK(invariants_from_matrix(m, cols) == inv);
  }
}

TEST_CASE("large entries leave the 64-bit path without changing the answer") {
  const long long big = 3037000493LL;  // prime near sqrt(2^63)
  RelationLattice l(2);
  l.add(std::vector<long long>{big, 1});
  l.add(std::vector<long long>{1, big});
  l.add(std::vector<long long>{big * 2, 3});
  auto inv = l.invariants();
  // same lattice built from BigInt rows
  RelationLattice b(2);
  b.add(std::vector<BigInt>{big, 1});
  b.add(std::vector<BigInt>{1, big});
  b.add(std::vector<BigInt>{BigInt(big) * 2, 3});
  CHECK(inv == b.invariants());
}

TEST_CASE("finite abelian invariants by counting") {
  CHECK(finite_abelian_invariants(*klein_four()).torsion == std::vector<std::int64_t>{2, 2});
  CHECK(finite_abelian_invariants(*cyclic_group(12)).torsion == std::vector<std::int64_t>{12});
  auto s3 = symmetric_group_3();
  auto a3 = normal_closure_finite(s3, {*s3->find("(123)")});
  CHECK(quotient_invariants(a3).torsion == std::vector<std::int64_t>{2});
}

TEST_CASE("element bound is enforced") {
  CHECK(max_elements() >= 1);
}
