// heis-mcg: command-line front end.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heis_mcg/acceptance.hpp"
#include "heis_mcg/catalog.hpp"
#include "heis_mcg/cocycle.hpp"
#include "heis_mcg/heis_aut.hpp"
#include "heis_mcg/mapping_class.hpp"
#include "heis_mcg/relations.hpp"
#include "heis_mcg/report.hpp"
#include "heis_mcg/schroedinger.hpp"
#include "heis_mcg/winding.hpp"

namespace {

using namespace heis;

struct Globals {
  std::uint64_t seed = 42;
  std::string format = "plain";
  Format fmt() const { return format == "tsv" ? Format::tsv : Format::plain; }
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Out {
 public:
  explicit Out(Format f) : f_(f) {}
  void kv(std::string const& key, std::string const& value) const {
    if (f_ == Format::tsv) {
      std::cout << key << '\t' << value << '\n';
    } else {
      std::cout << key << ": " << value << '\n';
    }
  }
  // A single value, bare in plain mode.
  void value(std::string const& key, std::string const& v) const {
    if (f_ == Format::tsv) {
      std::cout << key << '\t' << v << '\n';
    } else {
      std::cout << v << '\n';
    }
  }

 private:
  Format f_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Catalog load_catalog(int genus, std::string const& file) {
  Catalog cat = Catalog::builtin(genus);
  if (!file.empty())
    for (auto& f : parse_catalog(read_file(file))) cat.add(std::move(f));
  return cat;
}

// Omega of a file holding either '+'/'-' events or an "x y" polyline.
int omega_from_file(std::string const& path) {
  std::string text = read_file(path);
  bool events = text.find_first_not_of("+- \t\r\n") == std::string::npos;
  return events ? event_sum(parse_events(text)) : upward_tangency_count(parse_polyline(text));
}

void print_subgroups(Out const& out, MappingClass const& f) {
  auto flags = classify_subgroups(f);
  out.kv("torelli", yes_no(flags.torelli));
  out.kv("earle_morita", yes_no(flags.earle_morita));
  out.kv("chillingworth", yes_no(flags.chillingworth));
  out.kv("witness", flags.inner_witness ? to_string(HeisenbergElement{0, *flags.inner_witness}) : "none");
}

Report selftest_report(std::vector<acceptance::Criterion> const& crit, std::string cmd) {
  Report rep;
  rep.command = std::move(cmd);
  for (auto const& c : crit) rep.append(c.checks);
  rep.sort();
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heisenberg group and mapping class group toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  if (char const* env = std::getenv("HEIS_MCG_SEED")) {
    try {
      G.seed = std::stoull(env);
    } catch (std::exception const&) {
      std::cerr << "error: HEIS_MCG_SEED is not an unsigned integer\n";
      return 2;
    }
  }
  app.add_option("--seed", G.seed, "seed for randomized checks (default $HEIS_MCG_SEED or 42)");
  app.add_option("--format", G.format, "output format")->check(CLI::IsMember({"plain", "tsv"}));

  int rc = 0;

  // heis mul|inv|conj|intersect|sharp
  auto* heis_cmd = app.add_subcommand("heis", "Heisenberg group arithmetic");
  heis_cmd->require_subcommand(1);
  std::string h1, h2;
  auto* hmul = heis_cmd->add_subcommand("mul", "h1 h2");
  hmul->add_option("h1", h1)->required();
  hmul->add_option("h2", h2)->required();
  hmul->callback([&] { Out(G.fmt()).value("product", to_string(heis_mul(parse_heisenberg(h1), parse_heisenberg(h2)))); });
  auto* hinv = heis_cmd->add_subcommand("inv", "h^-1");
  hinv->add_option("element", h1)->required();
  hinv->callback([&] { Out(G.fmt()).value("inverse", to_string(heis_inv(parse_heisenberg(h1)))); });
  auto* hconj = heis_cmd->add_subcommand("conj", "g h g^-1");
  hconj->add_option("g", h1)->required();
  hconj->add_option("element", h2)->required();
  hconj->callback([&] { Out(G.fmt()).value("conjugate", to_string(heis_conj(parse_heisenberg(h1), parse_heisenberg(h2)))); });
  auto* hint = heis_cmd->add_subcommand("intersect", "x.y of the homology parts");
  hint->add_option("x", h1)->required();
  hint->add_option("y", h2)->required();
  hint->callback([&] {
    Out(G.fmt()).value("intersection", std::to_string(intersect(parse_heisenberg(h1).x, parse_heisenberg(h2).x)));
  });
  auto* hsharp = heis_cmd->add_subcommand("sharp", "Poincare dual of a covector given as (0; c1,...,c2g)");
  hsharp->add_option("theta", h1)->required();
  hsharp->callback([&] {
    auto t = parse_heisenberg(h1);
    CohomologyClass theta(t.genus(), t.x.coeffs());
    Out out(G.fmt());
    out.kv("sharp", to_string(HeisenbergElement{0, poincare_sharp(theta)}));
    auto w = inner_witness(theta);
    out.kv("inner_witness", w ? to_string(HeisenbergElement{0, *w}) : "none");
  });

  // phi
  int genus = 1, strands = 2;
  std::string word;
  auto* phi_cmd = app.add_subcommand("phi", "evaluate phi on a braid word");
  phi_cmd->add_option("--genus", genus)->required();
  phi_cmd->add_option("--strands", strands)->required();
  phi_cmd->add_option("word", word, "e.g. \"s1 a2 b1'\"")->required();
  phi_cmd->callback([&] { Out(G.fmt()).value("phi", to_string(phi(parse_word(word, genus, strands)))); });

  // check-relations
  bool flip = false;
  auto* rel_cmd = app.add_subcommand("check-relations", "verify every defining relation under phi");
  rel_cmd->add_option("--genus", genus)->required();
  rel_cmd->add_option("--strands", strands)->required();
  rel_cmd->add_flag("--flip-sign", flip, "use a1.b1 = -1 (negative control)");
  rel_cmd->callback([&] {
    auto r = check_relations(genus, strands, flip ? FormSign::flipped : FormSign::standard);
    Report rep;
    rep.command = "check-relations --genus " + std::to_string(genus) + " --strands " + std::to_string(strands) +
                  (flip ? " --flip-sign" : "");
    for (auto const& [fam, n] : r.instances_checked) {
      bool fam_ok = !r.first_failure || r.first_failure->instance.family != fam;
      std::string detail = std::to_string(n) + " instances";
      if (!fam_ok) {
        auto const& f = *r.first_failure;
        detail += "; counterexample " + render(f.instance.lhs) + " = " + render(f.instance.rhs) + " gives " +
                  to_string(f.lhs_value) + " vs " + to_string(f.rhs_value);
      }
      rep.add(fam, fam_ok, detail);
    }
    rep.print(std::cout, G.fmt());
    rc = rep.exit_code();
  });

  // aut apply|compose|classify
  auto* aut_cmd = app.add_subcommand("aut", "automorphisms (S, d) of the Heisenberg group");
  aut_cmd->require_subcommand(1);
  std::string aut_file, aut_file2, element;
  auto* aapply = aut_cmd->add_subcommand("apply", "apply (S, d) to an element");
  aapply->add_option("--aut", aut_file, "matrix/covector file")->required();
  aapply->add_option("--element", element, "(k; p1,..,qg)")->required();
  aapply->callback([&] {
    HeisAut a = parse_heis_aut(read_file(aut_file));
    Out(G.fmt()).value("image", to_string(aut_apply(a, parse_heisenberg(element, a.genus()))));
  });
  auto* acompose = aut_cmd->add_subcommand("compose", "a2 o a1");
  acompose->add_option("--a2", aut_file, "applied second")->required();
  acompose->add_option("--a1", aut_file2, "applied first")->required();
  acompose->callback([&] {
    std::cout << format_heis_aut(aut_compose(parse_heis_aut(read_file(aut_file)), parse_heis_aut(read_file(aut_file2))));
  });
  auto* aclassify = aut_cmd->add_subcommand("classify", "identity, inner (with witness) or non-inner");
  aclassify->add_option("--aut", aut_file)->required();
  aclassify->callback([&] {
    AutClass c = classify_aut(parse_heis_aut(read_file(aut_file)));
    Out out(G.fmt());
    if (std::holds_alternative<AutIdentity>(c)) {
      out.kv("class", "identity");
    } else if (auto const* in = std::get_if<AutInner>(&c)) {
      out.kv("class", "inner");
      out.kv("witness", to_string(HeisenbergElement{0, in->witness}));
    } else {
      out.kv("class", "non-inner");
    }
  });

  // act / classify
  std::string cls, cword, catalog_file;
  bool show_aut = false, show_classify = false, show_delta = false, show_images = false;
  int mgenus = 2;
  auto resolve = [&]() -> MappingClass {
    Catalog cat = load_catalog(mgenus, catalog_file);
    if (!cls.empty()) return cat.get(cls);
    return parse_class_word(cword, cat);
  };
  auto* act_cmd = app.add_subcommand("act", "induced action of a mapping class");
  auto* act_cls = act_cmd->add_option("--class", cls, "catalog entry");
  auto* act_word = act_cmd->add_option("--word", cword, "\"NAME NAME' ...\", composed left to right as maps");
  act_cls->excludes(act_word);
  act_cmd->add_option("--genus", mgenus, "surface genus (default 2)");
  act_cmd->add_option("--catalog", catalog_file, "extra catalog entries");
  act_cmd->add_flag("--show-aut", show_aut, "print Psi(f) as (S, d)");
  act_cmd->add_flag("--classify", show_classify, "subgroup membership");
  act_cmd->add_flag("--delta", show_delta, "print delta_f");
  act_cmd->add_flag("--images", show_images, "print the Heisenberg images of the generators");
  act_cmd->callback([&] {
    if (cls.empty() && !act_word->count()) throw CLI::RequiredError("--class or --word");
    MappingClass f = resolve();
    Out out(G.fmt());
    bool any = show_aut || show_classify || show_delta || show_images;
    if (show_images || !any) {
      for (int j = 0; j < 2 * f.genus(); ++j) {
        HeisenbergElement gen{0, HomologyClass::basis(f.genus(), j)};
        out.kv(to_string(FreeLetter{j, false}, f.genus()), to_string(aut_apply(f.heis_aut(), gen)));
      }
    }
    if (show_delta) out.kv("delta", to_string(f.delta()));
    if (show_aut) std::cout << format_heis_aut(f.heis_aut());
    if (show_classify) print_subgroups(out, f);
  });
  auto* classify_cmd = app.add_subcommand("classify", "Torelli / Earle-Morita / Chillingworth membership");
  auto* cl_cls = classify_cmd->add_option("--class", cls);
  auto* cl_word = classify_cmd->add_option("--word", cword);
  cl_cls->excludes(cl_word);
  classify_cmd->add_option("--genus", mgenus);
  classify_cmd->add_option("--catalog", catalog_file);
  classify_cmd->callback([&] {
    if (cls.empty() && !cl_word->count()) throw CLI::RequiredError("--class or --word");
    print_subgroups(Out(G.fmt()), resolve());
  });

  // cocycle
  std::string kind = "morita", fword, gword;
  auto* coc_cmd = app.add_subcommand("cocycle", "evaluate a 2-cocycle");
  coc_cmd->add_option("--kind", kind)->check(CLI::IsMember({"morita", "torelli", "delta"}));
  coc_cmd->add_option("--f", fword)->required();
  coc_cmd->add_option("--g", gword)->required();
  coc_cmd->add_option("--genus", mgenus);
  coc_cmd->add_option("--catalog", catalog_file);
  coc_cmd->callback([&] {
    Catalog cat = load_catalog(mgenus, catalog_file);
    MappingClass f = parse_class_word(fword, cat), g = parse_class_word(gword, cat);
    Out out(G.fmt());
    if (kind == "torelli") {
      out.kv("torelli", std::to_string(torelli_cocycle(f, g)));
      return;
    }
    Int a = kind == "morita" ? morita_cocycle(f, g) : delta_cocycle(f, g);
    Int b = kind == "morita" ? morita_cocycle_rewritten(f, g) : delta_cocycle_rewritten(f, g);
    out.kv(kind, std::to_string(a));
    out.kv(kind + "_rewritten", std::to_string(b));
    out.kv("forms_agree", yes_no(a == b));
    if (a != b) rc = 1;
  });

  // lift
  Int fiber = 0;
  auto* lift_cmd = app.add_subcommand("lift", "lift a Torelli element to the pullback extension");
  lift_cmd->add_option("--f", fword)->required();
  lift_cmd->add_option("--m", fiber, "fiber coordinate");
  lift_cmd->add_option("--genus", mgenus);
  lift_cmd->add_option("--catalog", catalog_file);
  lift_cmd->callback([&] {
    Catalog cat = load_catalog(mgenus, catalog_file);
    PullbackElement e = lift_torelli(parse_class_word(fword, cat), fiber);
    Out out(G.fmt());
    out.kv("h", to_string(psi_tilde(e)));
    out.kv("constraint", satisfies_constraint(e.h(), e.f()) ? "ok" : "violated");
  });

  // winding / chillingworth
  std::string poly_file, events_file, before, after;
  auto* wind_cmd = app.add_subcommand("winding", "turning number / tangency count");
  auto* wp = wind_cmd->add_option("--polyline", poly_file, "one 'x y' per line");
  auto* we = wind_cmd->add_option("--events", events_file, "'+'/'-' tokens");
  wp->excludes(we);
  wind_cmd->callback([&] {
    Out out(G.fmt());
    if (!poly_file.empty()) {
      Polyline p = parse_polyline(read_file(poly_file));
      out.kv("turning_number", std::to_string(turning_number(p)));
      out.kv("tangency_count", std::to_string(upward_tangency_count(p)));
      out.kv("events", format_events(upward_tangencies(p)));
    } else if (!events_file.empty()) {
      out.kv("omega", std::to_string(event_sum(parse_events(read_file(events_file)))));
    } else {
      throw CLI::RequiredError("--polyline or --events");
    }
  });
  auto* chill_cmd = app.add_subcommand("chillingworth", "omega(after) - omega(before)");
  chill_cmd->add_option("--before", before, "events or polyline file for gamma")->required();
  chill_cmd->add_option("--after", after, "events or polyline file for f o gamma")->required();
  chill_cmd->callback([&] {
    int b = omega_from_file(before), a = omega_from_file(after);
    Out out(G.fmt());
    out.kv("omega_before", std::to_string(b));
    out.kv("omega_after", std::to_string(a));
    out.kv("pairing", std::to_string(chillingworth_pairing(b, a)));
  });

  // schroedinger selftest
  int sg = 1, sN = 256, sP = 4, shbar = 1;
  auto* sch_cmd = app.add_subcommand("schroedinger", "finite Schroedinger model");
  sch_cmd->require_subcommand(1);
  auto* sch_self = sch_cmd->add_subcommand("selftest", "unitarity, group law, character, intertwiners");
  sch_self->add_option("--g", sg)->check(CLI::IsMember({1}));
  sch_self->add_option("--N", sN);
  sch_self->add_option("--P", sP);
  sch_self->add_option("--hbar-index", shbar);
  sch_self->callback([&] {
    auto c = acceptance::schroedinger(G.seed, sN, sP, shbar);
    Report rep = selftest_report({c}, "schroedinger selftest --g 1 --N " + std::to_string(sN) + " --P " +
                                                  std::to_string(sP) + " --hbar-index " + std::to_string(shbar) +
                                                  " --seed " + std::to_string(G.seed));
    rep.print(std::cout, G.fmt());
    rc = rep.exit_code();
  });

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "run acceptance criteria 1-7");
  self_cmd->callback([&] {
    Report rep = selftest_report(acceptance::run_all(G.seed), "selftest --seed " + std::to_string(G.seed));
    rep.print(std::cout, G.fmt());
    rc = rep.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  } catch (heis::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
