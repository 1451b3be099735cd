#include "cli.hpp"

#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moore/fp_group/groups.hpp"
#include "moore/homotopy/homotopy.hpp"
#include "moore/peiffer/checks.hpp"
#include "moore/peiffer/expansion.hpp"
#include "moore/peiffer/standard_form.hpp"
#include "moore/simplicial_core/moore.hpp"

namespace moore::cli {

using nlohmann::json;

namespace {

struct Options {
  int n = 2;
  int nmax = 3;
  int degree = 1;
  int bound = 5;
  int syllables = 2;
  std::string model;
  std::string pi;
  std::string word;
  std::string format = "text";
  bool json_flag = false;
};

json tuple_json(const SurjTuple& t) { return t.indices(); }

json invariants_json(const AbelianInvariants& a) { return a.as_list(); }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json_out() const { return o_.json_flag || o_.format == "json"; }

  void emit(json j) {
    json doc{{"schema", 1}};
    doc.update(j);
    out_ << doc.dump(2) << "\n";
  }

  int sposet() {
    auto s = enumerate_S(o_.n);
    if (json_out()) {
      json order = json::array();
      for (const auto& t : s) order.push_back(tuple_json(t));
      emit({{"n", o_.n}, {"size", s.size()}, {"order", order}});
      return kOk;
    }
    out_ << "S(" << o_.n << "):";
    for (std::size_t i = 0; i < s.size(); ++i) out_ << (i ? " < " : " ") << s[i].to_string();
    out_ << "\n";
    return kOk;
  }

  int pairs() {
    auto p = enumerate_P(o_.n);
    if (json_out()) {
      json arr = json::array();
      for (const auto& q : p) arr.push_back({{"alpha", tuple_json(q.alpha)}, {"beta", tuple_json(q.beta)}});
      emit({{"n", o_.n}, {"pairs", arr}});
      return kOk;
    }
    for (const auto& q : p) out_ << q.to_string() << "\n";
    return kOk;
  }

  int expand() {
    auto p = enumerate_P(o_.n);
    if (json_out()) {
      json arr = json::array();
      for (const auto& q : p) arr.push_back(pairing_json(q, expand_pairing(q)));
      emit({{"n", o_.n}, {"expansions", arr}});
      return kOk;
    }
    for (const auto& q : p) {
      auto e = expand_pairing(q);
      out_ << (o_.format == "latex" ? pairing_latex(q, e) : pairing_text(q, e)) << "\n";
    }
    return kOk;
  }

  int certify() {
    auto m = model_by_name(o_.model, o_.n);
    auto w = parse_degeneracy_word(*m, o_.n, o_.word);
    auto cert = standard_form(*m, o_.n, w);
    bool reconstructs = cert.reconstruct(*m) == cert.input;
    json comps = json::array();
    for (const auto& [alpha, x] : cert.components)
      comps.push_back({{"alpha", tuple_json(alpha)}, {"x", m->format_element(x)}});
    json nu = json::array();
    for (const auto& f : cert.nu)
      nu.push_back({{"conjugator", m->format_element(f.conjugator)},
                    {"alpha", tuple_json(f.generator.pair.alpha)},
                    {"beta", tuple_json(f.generator.pair.beta)},
                    {"x", m->format_element(f.generator.x)},
                    {"y", m->format_element(f.generator.y)},
                    {"value", m->format_element(f.generator.value)},
                    {"exponent", f.exponent}});
    emit({{"model", m->name()},
          {"n", o_.n},
          {"input", m->format_element(cert.input)},
          {"nu_product", m->format_element(cert.nu_product())},
          {"components", comps},
          {"nu", nu},
          {"steps", cert.steps},
          {"components_trivial", cert.components_trivial()},
          {"reconstructs", reconstructs}});
    return reconstructs ? kOk : kFailed;
  }

  int theorem_a() {
    auto m = model_by_name(o_.model, o_.n);
    auto r = theorem_A_check(*m, o_.n);
    if (json_out()) {
      emit({{"model", m->name()},
            {"n", r.n},
            {"moore", r.moore_size},
            {"degenerate", r.degenerate_size},
            {"peiffer", r.peiffer_size},
            {"generators", r.generators},
            {"moore_cap_d", r.moore_cap_d},
            {"peiffer_cap_d", r.peiffer_cap_d},
            {"sets_equal", r.sets_equal},
            {"boundary_images_equal", r.boundary_images_equal},
            {"level_is_degenerate", r.level_is_degenerate},
            {"brown_loday", r.brown_loday},
            {"ok", r.ok()}});
    } else {
      out_ << m->name() << " n=" << r.n << ": |NG|=" << r.moore_size << " |D|=" << r.degenerate_size
           << " |N|=" << r.peiffer_size << " |NG^D|=" << r.moore_cap_d << " |N^D|=" << r.peiffer_cap_d
           << "\n"
           << "sets " << (r.sets_equal ? "equal" : "differ") << ", boundary images "
           << (r.boundary_images_equal ? "equal" : "differ") << "\n";
    }
    return r.ok() ? kOk : kFailed;
  }

  int simplicial() {
    auto m = model_by_name(o_.model, o_.nmax);
    auto r = validate(*m, o_.nmax);
    if (json_out()) {
      json v = json::array();
      for (const auto& x : r.violations)
        v.push_back({{"identity", x.identity}, {"n", x.n}, {"i", x.i}, {"j", x.j}, {"witness", x.witness}});
      emit({{"model", m->name()}, {"nmax", o_.nmax}, {"checks", r.checks}, {"violations", v}, {"ok", r.ok()}});
    } else {
      out_ << m->name() << ": " << r.checks << " checks, " << r.violations.size() << " violations\n";
      if (!r.ok()) {
        const auto& x = r.violations.front();
        out_ << "witness: " << x.identity << " n=" << x.n << " i=" << x.i << " j=" << x.j << " at "
             << x.witness << "\n";
      }
    }
    return r.ok() ? kOk : kFailed;
  }

  int crossed() {
    auto m = model_by_name(o_.model, o_.nmax);
    ArgumentSource src;
    src.syllable_bound = o_.syllables;
    auto r = crossed_complex_check(*m, o_.nmax, src);
    json witness = nullptr;
    if (r.witness)
      witness = {{"n", r.witness->n},
                 {"alpha", tuple_json(r.witness->pair.alpha)},
                 {"beta", tuple_json(r.witness->pair.beta)},
                 {"x", m->format_element(r.witness->x)},
                 {"y", m->format_element(r.witness->y)},
                 {"value", m->format_element(r.witness->value)}};
    if (json_out()) {
      json inter = r.intersections_trivial ? json(*r.intersections_trivial) : json(nullptr);
      emit({{"model", m->name()},
            {"nmax", o_.nmax},
            {"crossed_complex", r.pairings_vanish},
            {"intersections_trivial", inter},
            {"agree", r.agree()},
            {"witness", witness}});
    } else {
      out_ << m->name() << ": pairings " << (r.pairings_vanish ? "vanish" : "do not vanish");
      if (r.intersections_trivial)
        out_ << ", NG^D " << (*r.intersections_trivial ? "trivial" : "nontrivial");
      out_ << "\n";
      if (r.witness) out_ << "witness: " << witness.dump() << "\n";
    }
    return r.pairings_vanish && r.agree() ? kOk : kFailed;
  }

  int homotopy() {
    std::string selector = o_.model;
    if (selector.find(':') == std::string::npos) {
      if (o_.pi.empty()) throw DomainError("--model " + selector + " needs --pi");
      selector += ":" + o_.pi;
    }
    HomotopyResult r;
    std::string name;
    if (selector.rfind("carlsson:", 0) == 0) {
      auto pi = group_by_name(selector.substr(9));
      name = "carlsson:" + pi->name();
      if (o_.degree == 1)
        r = carlsson_pi1(pi);
      else if (o_.degree == 2)
        r = carlsson_pi2(pi, o_.bound);
      else
        throw Unsupported("the Carlsson pipeline covers degrees 1 and 2");
    } else {
      auto m = model_by_name(selector, o_.degree + 1);
      name = m->name();
      r = homotopy_finite(*m, o_.degree);
    }
    if (json_out()) {
      json j{{"model", name},
             {"degree", r.degree},
             {"invariants", invariants_json(r.invariants)},
             {"method", r.method_name()}};
      if (r.order) j["order"] = *r.order;
      j["abelian"] = r.abelian;
      if (r.bound) j["bound"] = *r.bound;
      if (r.stable) j["stable"] = *r.stable;
      emit(j);
    } else {
      out_ << "pi_" << r.degree << "(" << name << ") = " << r.to_string() << " [" << r.method_name();
      if (r.bound) out_ << ", bound " << *r.bound << (*r.stable ? ", stable" : ", unstable");
      out_ << "]\n";
    }
    return r.method == HomotopyResult::Method::undecided_at_bound ? kUndecided : kOk;
  }

  int tensor() {
    auto pi = group_by_name(o_.pi);
    auto t = tensor_square(pi);
    auto j = j2(t);
    std::optional<AbelianInvariants> oracle;
    if (pi->is_abelian()) oracle = bilinear_tensor_invariants(*pi);
    std::optional<AbelianInvariants> tc;
    if (t.group && t.group->is_abelian()) tc = finite_abelian_invariants(*t.group);
    bool agree = !oracle || (tc && *tc == *oracle);
    if (json_out()) {
      json doc{{"pi", pi->name()},
               {"generators", t.presentation.generators.size()},
               {"relators", t.presentation.relators.size()},
               {"kappa_well_defined", t.kappa_well_defined}};
      doc["order"] = t.order() ? json(*t.order()) : json(nullptr);
      doc["invariants"] = tc ? invariants_json(*tc) : json(nullptr);
      doc["bilinear_invariants"] = oracle ? invariants_json(*oracle) : json(nullptr);
      doc["j2"] = {{"order", j.order ? json(*j.order) : json(nullptr)},
                   {"invariants", j.structure_known ? invariants_json(j.invariants) : json(nullptr)},
                   {"method", j.method_name()}};
      doc["agree"] = agree;
      emit(doc);
    } else {
      out_ << pi->name() << " (x) " << pi->name() << ": order "
           << (t.order() ? std::to_string(*t.order()) : std::string("undecided"));
      if (tc) out_ << " = " << tc->to_string();
      out_ << "\n";
      if (oracle) out_ << "bilinear oracle: " << oracle->to_string() << "\n";
      out_ << "J2 = " << j.to_string() << "\n";
    }
    if (!t.order()) return kUndecided;
    return agree && t.kappa_well_defined ? kOk : kFailed;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moore complexes, Peiffer pairings and homotopy of simplicial groups", "moore"};
  app.require_subcommand(1);
  Options o;
  std::function<int(Runner&)> action;
  const std::vector<std::string> formats{"text", "json", "latex"};

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember(formats));
    c->add_flag("--json", o.json_flag, "same as --format json");
  };
  auto add_n = [&](CLI::App* c) {
    c->add_option("--n", o.n, "dimension")->required()->check(CLI::Range(1, kMaxPosetDim));
  };
  auto add_model = [&](CLI::App* c) {
    c->add_option("--model", o.model, "constant:G, cech:G, carlsson:G or nilcarlsson:G[:c]")->required();
  };

  auto* sposet = app.add_subcommand("sposet", "the ordered set S(n)");
  add_n(sposet);
  add_format(sposet);
  sposet->callback([&] { action = &Runner::sposet; });

  auto* pairs = app.add_subcommand("pairs", "the pairing index set P(n)");
  add_n(pairs);
  add_format(pairs);
  pairs->callback([&] { action = &Runner::pairs; });

  auto* peiffer = app.add_subcommand("peiffer", "pairing expansions and certificates");
  peiffer->require_subcommand(1);
  auto* expand = peiffer->add_subcommand("expand", "symbolic expansion of every F in dimension n");
  add_n(expand);
  add_format(expand);
  expand->callback([&] { action = &Runner::expand; });
  auto* certify = peiffer->add_subcommand("certify", "standard form of a degeneracy word, as JSON");
  add_n(certify);
  add_model(certify);
  certify->add_option("--word", o.word, "e.g. s0(h)*s1(h')")->required();
  certify->callback([&] { action = &Runner::certify; });

  auto* verify = app.add_subcommand("verify", "checks on a model");
  verify->require_subcommand(1);
  auto* tha = verify->add_subcommand("theorem-a", "NG_n ^ D_n = N_n ^ D_n on a finite level");
  add_n(tha);
  add_model(tha);
  add_format(tha);
  tha->callback([&] { action = &Runner::theorem_a; });
  auto* simp = verify->add_subcommand("simplicial", "simplicial identities and homomorphism property");
  add_model(simp);
  simp->add_option("--nmax", o.nmax, "top level")->check(CLI::Range(1, 8));
  add_format(simp);
  simp->callback([&] { action = &Runner::simplicial; });
  auto* cc = verify->add_subcommand("crossed-complex", "vanishing of all pairings up to nmax");
  add_model(cc);
  cc->add_option("--nmax", o.nmax, "top level")->check(CLI::Range(2, 6));
  cc->add_option("--bound", o.syllables, "syllable bound for infinite Moore levels")->check(CLI::Range(1, 8));
  add_format(cc);
  cc->callback([&] { action = &Runner::crossed; });

  auto* hom = app.add_subcommand("homotopy", "homotopy group of a model");
  add_model(hom);
  hom->add_option("--pi", o.pi, "group when --model names only the kind");
  hom->add_option("--degree", o.degree, "degree")->required()->check(CLI::Range(0, 8));
  hom->add_option("--bound", o.bound, "syllable bound for the Carlsson pi_2 pipeline")->check(CLI::Range(1, 8));
  add_format(hom);
  hom->callback([&] { action = &Runner::homotopy; });

  auto* ten = app.add_subcommand("tensor", "nonabelian tensor square and J2");
  ten->add_option("--pi", o.pi, "group")->required();
  add_format(ten);
  ten->callback([&] { action = &Runner::tensor; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  Runner runner(o, out);
  try {
    return action(runner);
  } catch (const ResourceError& e) {
    err << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace moore::cli
