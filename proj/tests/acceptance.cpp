// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moore/fp_group/errors.hpp"
#include "moore/fp_group/groups.hpp"
#include "moore/fp_group/reidemeister_schreier.hpp"
#include "moore/fp_group/smith.hpp"
#include "moore/fp_group/todd_coxeter.hpp"
#include "moore/homotopy/homotopy.hpp"
#include "moore/peiffer/checks.hpp"
#include "moore/peiffer/expansion.hpp"
#include "moore/peiffer/standard_form.hpp"
#include "moore/simplicial_core/moore.hpp"
#include "printed_formulas.hpp"
#include "pinned_matrices.hpp"

using namespace moore;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && s >= budget_s) {
    o.pass = false;
    o.notes.push_back("over the time budget of " + std::to_string(budget_s) + " s");
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, s);
  for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
  std::fflush(stdout);
}

std::string listing(int n) {
  std::string s;
  for (const auto& t : enumerate_S(n)) s += (s.empty() ? "" : " < ") + t.to_string();
  return s;
}

// Every element of NG_level when the level is finite, else bounded words.
std::vector<GroupElement> all_moore(const SimplicialGroupModel& m, int level, std::size_t cap = 4096) {
  auto ml = moore_level(m, level);
  if (ml.exhaustive) return ml.elements;
  ArgumentSource src;
  src.syllable_bound = 4;
  src.max_arguments = cap;
  return moore_arguments(m, level, src);
}

// Printed right-hand sides against F on every pair of Moore arguments.
std::size_t expansion_mismatches(const SimplicialGroupModel& m, std::size_t& checked, std::size_t& nontrivial) {
  std::size_t bad = 0;
  for (const auto& f : printed_formulas()) {
    auto expr = parse_sym_expr(f.rhs);
    auto xs = all_moore(m, f.pair.n - f.pair.alpha.length());
    auto ys = all_moore(m, f.pair.n - f.pair.beta.length());
    for (const auto& x : xs)
      for (const auto& y : ys) {
        auto v = F(m, f.pair, x, y).value;
        ++checked;
        if (!v.is_identity()) ++nontrivial;
        if (!(evaluate(m, expr, x, y) == v)) ++bad;
      }
  }
  return bad;
}

struct CertStats {
  std::size_t words = 0, failures = 0, in_intersection = 0, nontrivial_in_intersection = 0;
};

CertStats certificates(const SimplicialGroupModel& m, int n, int count, unsigned seed) {
  CertStats st;
  std::mt19937 rng(seed);
  for (int t = 0; t < count; ++t) {
    DegeneracyWord w;
    int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) w.push_back({static_cast<int>(rng() % n), m.random_element(n - 1, rng)});
    auto c = standard_form(m, n, w);
    ++st.words;
    bool ok = c.input == evaluate(m, n, w) && c.reconstruct(m) == c.input;
    for (const auto& f : c.nu) ok = ok && in_moore(m, n, f.generator.value);
    if (in_moore(m, n, c.input)) {
      ++st.in_intersection;
      if (!c.input.is_identity()) ++st.nontrivial_in_intersection;
      ok = ok && c.components_trivial() && c.nu_product() == c.input;
    }
    if (!ok) ++st.failures;
  }
  return st;
}

std::string certificate_note(const std::string& sel, int n, const CertStats& s) {
  std::ostringstream o;
  o << sel << " n=" << n << ": " << s.words << " words, " << s.in_intersection << " in NG^D ("
    << s.nontrivial_in_intersection << " nontrivial), " << s.failures << " failures";
  return o.str();
}

}  // namespace

int main() {
  criterion(1, "S(n) orders and sizes", 1.0, [](Outcome& o) {
    o.require(listing(2) == "() < (1) < (0) < (1,0)", "S(2) listing");
    o.require(listing(3) == "() < (2) < (1) < (2,1) < (0) < (2,0) < (1,0) < (2,1,0)", "S(3) listing");
    o.require(listing(4) ==
                  "() < (3) < (2) < (3,2) < (1) < (3,1) < (2,1) < (3,2,1) < (0) < (3,0) < (2,0) < (3,2,0) < "
                  "(1,0) < (3,1,0) < (2,1,0) < (3,2,1,0)",
              "S(4) listing");
    for (int n = 0; n <= 12; ++n)
      o.require(enumerate_S(n).size() == (std::size_t{1} << n), "|S(" + std::to_string(n) + ")| = 2^n");
  });

  criterion(2, "pairing census P(2), P(3)", 1.0, [](Outcome& o) {
    std::set<std::string> listed, got;
    for (const auto& f : printed_formulas())
      if (f.pair.n == 3) listed.insert(f.pair.to_string());
    for (const auto& p : enumerate_P(3)) got.insert(p.to_string());
    o.require(enumerate_P(3).size() == 6 && got == listed, "P(3) equals the six listed pairs");
    auto p2 = enumerate_P(2);
    o.require(p2.size() == 1 && p2[0] == printed_formulas()[0].pair, "P(2) is the single pair (0)(1)");
  });

  criterion(3, "golden expansions on cech:s3", 30.0, [](Outcome& o) {
    for (const auto& f : printed_formulas())
      o.require(expand_pairing(f.pair) == parse_sym_expr(f.rhs), "symbolic " + f.pair.to_string());
    auto m = model_by_name("cech:s3", 3);
    std::size_t checked = 0, nontrivial = 0;
    auto bad = expansion_mismatches(*m, checked, nontrivial);
    o.require(bad == 0, std::to_string(bad) + " element mismatches on cech:s3");
    o.note("cech:s3: " + std::to_string(checked) + " argument pairs, " + std::to_string(nontrivial) +
           " nontrivial values");
    // the Cech nerve has trivial NG_n for n >= 2, so also run a level with nontrivial values
    for (const char* sel : {"nilcarlsson:s3", "nilcarlsson:z2:3"}) {
      auto n = model_by_name(sel, 3);
      std::size_t c = 0, nt = 0;
      auto b = expansion_mismatches(*n, c, nt);
      o.require(b == 0, std::to_string(b) + " element mismatches on " + sel);
      o.note(std::string(sel) + ": " + std::to_string(c) + " argument pairs, " + std::to_string(nt) +
             " nontrivial values");
    }
  });

  criterion(4, "NG^D = N^D on finite levels", 300.0, [](Outcome& o) {
    for (int n : {2, 3}) {
      auto s3 = theorem_A_check(*model_by_name("cech:s3", n), n);
      o.require(s3.ok(), "cech:s3 n=" + std::to_string(n));
      auto z4 = theorem_A_check(*model_by_name("cech:z4", n), n);
      o.require(z4.ok() && z4.moore_cap_d == 1 && z4.peiffer_cap_d == 1,
                "cech:z4 n=" + std::to_string(n) + " trivial on both sides");
      std::ostringstream s;
      s << "cech:s3 n=" << n << ": |G|=" << s3.degenerate_size << " |NG^D|=" << s3.moore_cap_d
        << " |N^D|=" << s3.peiffer_cap_d;
      o.note(s.str());
    }
    for (auto [sel, n] : {std::pair{"nilcarlsson:z2", 2}, std::pair{"nilcarlsson:z2:3", 3}}) {
      auto r = theorem_A_check(*model_by_name(sel, n), n);
      o.require(r.ok(), std::string(sel) + " n=" + std::to_string(n));
      o.note(std::string(sel) + " n=" + std::to_string(n) + ": |NG^D|=" + std::to_string(r.moore_cap_d) +
             " |N^D|=" + std::to_string(r.peiffer_cap_d));
    }
  });

  criterion(5, "standard form certificates", 0, [](Outcome& o) {
    auto m = model_by_name("cech:s3", 3);
    for (int n : {2, 3}) {
      auto s = certificates(*m, n, 1000, 100 + n);
      o.require(s.failures == 0, "cech:s3 n=" + std::to_string(n));
      o.note(certificate_note("cech:s3", n, s));
    }
    auto nil = model_by_name("nilcarlsson:z2:3", 3);
    for (int n : {2, 3}) {
      auto s = certificates(*nil, n, 1000, 200 + n);
      o.require(s.failures == 0, "nilcarlsson:z2:3 n=" + std::to_string(n));
      o.note(certificate_note("nilcarlsson:z2:3", n, s));
    }
    // every element of NG_3 in D_3, reached through a degeneracy word
    auto ng = moore_level(*nil, 3);
    auto d = degenerate_subgroup(*nil, 3);
    std::size_t hits = 0;
    for (const auto& g : ng.elements) {
      if (!d.finite->contains(g.index())) continue;
      auto w = degeneracy_word_for(*nil, 3, g);
      o.require(w.has_value(), "degeneracy word for " + nil->format_element(g));
      if (!w) continue;
      auto c = standard_form(*nil, 3, *w);
      o.require(c.components_trivial() && c.nu_product() == g, "N_3 product for " + nil->format_element(g));
      ++hits;
    }
    o.note("nilcarlsson:z2:3 n=3: all " + std::to_string(hits) + " elements of NG^D written as pairing products");
  });

  criterion(6, "crossed-complex criterion", 0, [](Outcome& o) {
    for (const char* sel : {"constant:s3", "cech:z4", "cech:k4"}) {
      auto r = crossed_complex_check(*model_by_name(sel, 3), 3);
      o.require(r.pairings_vanish, std::string(sel) + " should be a crossed complex");
      o.require(r.intersections_trivial && r.agree(), std::string(sel) + " agreement with NG^D");
    }
    auto s3 = crossed_complex_check(*model_by_name("cech:s3", 3), 3);
    o.require(s3.intersections_trivial && s3.agree(), "cech:s3 agreement with NG^D");
    o.require(!s3.pairings_vanish && s3.witness.has_value(), "cech:s3 false with witness");
    o.note(std::string("cech:s3: pairings ") + (s3.pairings_vanish ? "vanish" : "do not vanish") +
           ", NG^D " + (s3.intersections_trivial && *s3.intersections_trivial ? "trivial" : "nontrivial") +
           " through n=3");
    auto nil = crossed_complex_check(*model_by_name("nilcarlsson:s3", 3), 3);
    o.require(!nil.pairings_vanish && nil.witness && nil.agree(), "nilcarlsson:s3 false with witness");
    if (nil.witness) o.note("nilcarlsson:s3 witness " + nil.witness->pair.to_string());
  });

  criterion(7, "Carlsson model identities", 10.0, [](Outcome& o) {
    for (const char* g : {"z2", "z3", "z4", "k4"}) {
      CarlssonModel m(group_by_name(g), 3);
      auto r = carlsson_identities(m);
      std::string t = std::string("carlsson:") + g;
      o.require(r.level_structure, t + " NH_1 = pi and level 2 free on two copies");
      o.require(r.expansion_failures == 0, t + " F_(0)(1) word");
      o.require(r.conjugation_failures == 0, t + " conjugation identity");
      o.require(r.boundary_failures == 0, t + " boundary formula");
    }
  });

  criterion(8, "homotopy cross-oracle", 300.0, [](Outcome& o) {
    for (const char* g : {"z2", "z4", "s3", "k4"}) {
      auto pi = group_by_name(g);
      auto r = carlsson_pi1(pi);
      auto ab = abelian_invariants(table_presentation(*pi));
      o.require(r.invariants == ab, std::string("pi_1 for ") + g);
    }
    for (const char* g : {"z2", "z3", "z4", "k4"}) {
      auto pi = group_by_name(g);
      std::optional<HomotopyResult> r;
      for (int b = 1; b <= 6 && !r; ++b) {
        auto c = carlsson_pi2(pi, b);
        if (c.stable && *c.stable) r = c;
      }
      if (!r) {
        o.require(false, std::string("pi_2 for ") + g + " did not stabilize by bound 6");
        continue;
      }
      auto t = tensor_square(pi);
      auto j = j2(t);
      auto bil = bilinear_tensor_invariants(*pi);
      o.require(j.invariants == bil, std::string("coset enumeration vs bilinear SNF for ") + g);
      o.require(r->invariants == j.invariants, std::string("pi_2 vs J2 for ") + g);
      o.note(std::string(g) + ": pi_2 = " + r->invariants.to_string() + " stable at bound " +
             std::to_string(*r->bound) + ", J2 = " + j.invariants.to_string());
    }
  });

  criterion(9, "eta of Moore cycles", 0, [](Outcome& o) {
    std::size_t cycles = 0, bad = 0;
    for (const char* sel : {"cech:s3", "constant:s3", "nilcarlsson:z2", "nilcarlsson:s3", "nilcarlsson:z2:3",
                            "carlsson:z2", "carlsson:z3", "carlsson:s3"}) {
      auto m = model_by_name(sel, 3);
      for (int n = 1; n <= 2; ++n) {
        ArgumentSource src;
        src.syllable_bound = 3;
        src.samples = 64;
        for (const auto& x : moore_arguments(*m, n, src)) {
          if (!boundary(*m, n, x).is_identity()) continue;
          ++cycles;
          try {
            auto e = eta(*m, n, x);
            if (!boundary(*m, n + 1, e.value).is_identity() || !in_moore(*m, n + 1, e.value)) ++bad;
          } catch (const Error&) {
            ++bad;
          }
        }
      }
    }
    o.require(bad == 0, std::to_string(bad) + " cycles with a non-cycle image");
    o.require(cycles > 0, "no cycles sampled");
    o.note(std::to_string(cycles) + " Moore cycles");
  });

  criterion(10, "group engines", 0, [](Outcome& o) {
    auto s3 = parse_presentation("gens: a, b ; rels: a^2, b^2, (a*b)^3");
    auto t = todd_coxeter(s3, {}, 1000);
    o.require(t.status == CosetTable::Status::closed && t.index == 6, "coset enumeration index 6");
    auto z2 = cyclic_group(2);
    auto v = FiniteGroup::direct_power(z2, 2);
    SchreierKernel k(parse_presentation("gens: a, b ; rels: a^2, b^2"),
                     {v, {v->from_coordinates(std::vector<Index>{1, 0}),
                          v->from_coordinates(std::vector<Index>{0, 1})}});
    auto inv = abelian_invariants(k.kernel());
    o.require(inv.free_rank == 1 && inv.torsion.empty(), "kernel of Z/2*Z/2 -> Z/2xZ/2 is Z");
    std::size_t i = 0;
    for (const auto& m : pinned_matrices()) {
      auto r = invariants_from_matrix(m.rows, m.columns);
      o.require(r.torsion == m.torsion && r.free_rank == m.free_rank, "pinned matrix " + std::to_string(i));
      ++i;
    }
  });

  return failures == 0 ? 0 : 1;
}
