#pragma once

// The acceptance criteria as executable checks.  Shared by the acceptance
// test binary and `heis-mcg selftest`.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "cocycle.hpp"
#include "mapping_class.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "schroedinger.hpp"
#include "winding.hpp"

namespace heis::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const {
    for (auto const& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({"c" + std::to_string(id) + "." + std::move(name), ok, std::move(detail)});
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

inline std::string secs(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << v << "s";
  return os.str();
}

inline void add_runtime(Criterion& c, Stopwatch const& sw, double limit) {
  c.seconds = sw.seconds();
  c.add("runtime", c.seconds < limit, secs(c.seconds) + " (limit " + secs(limit) + ")");
}

// Runs `body` and turns an escaping library error into a failed check.
template <typename F>
void guarded(Criterion& c, std::string const& name, F&& body) {
  try {
    body();
  } catch (std::exception const& e) {
    c.add(name, false, std::string("error: ") + e.what());
  }
}

inline std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq sq{seed, salt};
  return std::mt19937_64(sq);
}

}  // namespace detail

inline Criterion relation_suite() {
  Criterion c{1, "relation suite under phi", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "relations", [&] {
    for (int g = 1; g <= 3; ++g) {
      for (int n = 2; n <= 4; ++n) {
        auto rep = check_relations(g, n);
        std::string detail = std::to_string(rep.total()) + " instances";
        if (rep.first_failure) detail += ", first failure " + rep.first_failure->instance.family;
        c.add("relations.g" + std::to_string(g) + ".n" + std::to_string(n), rep.all_hold(), detail);
      }
    }
    auto neg = check_relations(1, 2, FormSign::flipped);
    bool scr = neg.first_failure && neg.first_failure->instance.family == "SCR";
    c.add("negative_control.flipped_sign", scr,
          neg.first_failure ? "first failure " + neg.first_failure->instance.family + ": " + to_string(neg.first_failure->lhs_value) +
                                  " vs " + to_string(neg.first_failure->rhs_value)
                            : "no failure");
  });
  detail::add_runtime(c, sw, 5.0);
  return c;
}

inline Criterion bounding_pair() {
  Criterion c{2, "bounding pair reproduction", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "bp", [&] {
    int g = 2;
    MappingClass bp = Catalog::builtin(g).get("BP");
    std::vector<HeisenbergElement> expected = {
        {2, HomologyClass::a(g, 1)}, {0, HomologyClass::a(g, 2)}, {0, HomologyClass::b(g, 1)}, {0, HomologyClass::b(g, 2)}};
    for (int j = 0; j < 2 * g; ++j) {
      HeisenbergElement gen{0, HomologyClass::basis(g, j)};
      HeisenbergElement img = aut_apply(bp.heis_aut(), gen);
      c.add("image." + to_string(gen), img == expected[static_cast<std::size_t>(j)], to_string(img));
    }
    c.add("delta", bp.delta() == 2 * CohomologyClass::a_star(g, 1), to_string(bp.delta()));
    auto flags = classify_subgroups(bp);
    c.add("torelli", flags.torelli);
    c.add("not_earle_morita", !flags.earle_morita);
    c.add("not_chillingworth", !flags.chillingworth);
    bool wit = flags.inner_witness && *flags.inner_witness == -HomologyClass::b(g, 1);
    c.add("witness", wit, flags.inner_witness ? to_string(*flags.inner_witness) : "none");
    bool conj = flags.inner_witness.has_value();
    for (int j = 0; j < 2 * g && conj; ++j) {
      HeisenbergElement gen{0, HomologyClass::basis(g, j)};
      conj = heis_conj({0, *flags.inner_witness}, gen) == aut_apply(bp.heis_aut(), gen);
    }
    c.add("witness_conjugation", conj, "checked on all 2g generators");
  });
  detail::add_runtime(c, sw, 1.0);
  return c;
}

inline Criterion crossed_hom(std::uint64_t seed) {
  Criterion c{3, "crossed-homomorphism law and Psi functoriality", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "sample", [&] {
    auto rng = detail::stream(seed, 3);
    Catalog cat = Catalog::builtin(2);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    int law_fail = 0, func_fail = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
      std::string wf = random_class_word(cat, len(rng), rng), wg = random_class_word(cat, len(rng), rng);
      MappingClass f = parse_class_word(wf, cat), g = parse_class_word(wg, cat);
      MappingClass gf = mcg_compose(g, f);
      if (!(gf.delta() == f.delta() + pullback(g.delta(), f.symplectic()))) {
        ++law_fail;
        if (first.empty()) first = "f=" + wf + " g=" + wg;
      }
      if (!(gf.heis_aut() == aut_compose(g.heis_aut(), f.heis_aut()))) ++func_fail;
    }
    c.add("crossed_hom_law", law_fail == 0, std::to_string(200 - law_fail) + "/200" + (first.empty() ? "" : ", first " + first));
    c.add("psi_functoriality", func_fail == 0, std::to_string(200 - func_fail) + "/200");
  });
  detail::add_runtime(c, sw, 60.0);
  return c;
}

inline Criterion cocycles(std::uint64_t seed) {
  Criterion c{4, "cocycle suite", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "sample", [&] {
    auto rng = detail::stream(seed, 4);
    Catalog cat = Catalog::builtin(2);
    std::uniform_int_distribution<std::size_t> len(1, 4);
    auto word = [&] { return parse_class_word(random_class_word(cat, len(rng), rng), cat); };

    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      MappingClass f = word(), g = word(), h = word();
      if (cocycle_defect(TwoCocycle::morita(), f, g, h) != 0) ++bad;
    }
    c.add("morita_cocycle_identity", bad == 0, std::to_string(200 - bad) + "/200 triples");

    bad = 0;
    int raw_bad = 0;
    for (int i = 0; i < 200; ++i) {
      MappingClass f = word(), g = word();
      if (morita_cocycle(f, g) != morita_cocycle_rewritten(f, g)) ++bad;
      if (delta_cocycle(f, g) != delta_cocycle_rewritten(f, g)) ++raw_bad;
    }
    c.add("morita_forms_agree", bad == 0,
          std::to_string(200 - bad) + "/200 pairs; with raw delta in place of d: " + std::to_string(200 - raw_bad) + "/200");

    bad = 0;
    for (int i = 0; i < 100; ++i) {
      MappingClass f = parse_class_word(random_torelli_word(cat, rng), cat);
      MappingClass g = parse_class_word(random_torelli_word(cat, rng), cat);
      if (torelli_cocycle(f, g) != -morita_cocycle(f, g)) ++bad;
    }
    c.add("torelli_equals_minus_morita", bad == 0, std::to_string(100 - bad) + "/100 Torelli pairs");

    bad = 0;
    std::uniform_int_distribution<Int> fiber(-5, 5);
    for (int i = 0; i < 100; ++i) {
      MappingClass f = parse_class_word(random_torelli_word(cat, rng), cat);
      MappingClass g = parse_class_word(random_torelli_word(cat, rng), cat);
      try {
        PullbackElement p = pullback_mul(lift_torelli(f, fiber(rng)), lift_torelli(g, fiber(rng)));
        if (!satisfies_constraint(psi_tilde(p), p.f())) ++bad;
      } catch (Error const&) {
        ++bad;
      }
    }
    c.add("pullback_constraint_preserved", bad == 0, std::to_string(100 - bad) + "/100 products");
  });
  detail::add_runtime(c, sw, 60.0);
  return c;
}

inline Criterion stabilisation(std::uint64_t seed) {
  Criterion c{5, "stabilisation", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "sample", [&] {
    auto rng = detail::stream(seed, 5);
    Catalog cat = Catalog::builtin(2);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      MappingClass f = parse_class_word(random_class_word(cat, len(rng), rng), cat);
      MappingClass s = stabilize(f, 3);
      CohomologyClass d = s.delta();
      bool ok = d.p(1) == f.delta().p(1) && d.p(2) == f.delta().p(2) && d.q(1) == f.delta().q(1) &&
                d.q(2) == f.delta().q(2) && d.p(3) == 0 && d.q(3) == 0;
      if (!ok) ++bad;
    }
    c.add("delta_restricts", bad == 0, std::to_string(50 - bad) + "/50 words");
  });
  detail::add_runtime(c, sw, 60.0);
  return c;
}

inline Criterion winding(std::uint64_t seed) {
  Criterion c{6, "winding numbers", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "sample", [&] {
    auto rng = detail::stream(seed, 6);
    std::uniform_int_distribution<std::size_t> nv(3, 24);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      Polyline p = random_generic_polyline(nv(rng), rng);
      if (turning_number(p) != upward_tangency_count(p)) ++bad;
    }
    c.add("turning_equals_tangency", bad == 0, std::to_string(100 - bad) + "/100 polylines");

    int wa = event_sum(fixtures::alpha_events()), wb = event_sum(fixtures::beta_events());
    int wfa = event_sum(fixtures::bp_alpha1_events());
    c.add("omega_alpha", wa == -1, std::to_string(wa));
    c.add("omega_beta", wb == 1, std::to_string(wb));
    c.add("omega_bp_alpha1", wfa == 1, std::to_string(wfa));
    int poly = upward_tangency_count(fixtures::bp_alpha1_polyline());
    c.add("omega_bp_alpha1_polyline", poly == 1, std::to_string(poly));
    int e1 = chillingworth_pairing(wa, wfa);
    c.add("e_bp_alpha1", e1 == 2, std::to_string(e1));
    CohomologyClass delta_bp = Catalog::builtin(2).get("BP").delta();
    bool all = true;
    for (auto const& gamma : std::vector<std::vector<int>>{{}, {+1}, {-1, -1}, {+1, -1, +1}}) {
      all = all && chillingworth_bp_from_fixtures(2, gamma) == delta_bp;
    }
    c.add("e_bp_equals_delta_bp", all, to_string(chillingworth_bp_from_fixtures(2, {})) + " vs " + to_string(delta_bp));
  });
  detail::add_runtime(c, sw, 1.0);
  return c;
}

inline Criterion schroedinger(std::uint64_t seed, int N = 256, int P = 4, int hbar_index = 1) {
  Criterion c{7, "Schroedinger model", {}, 0};
  detail::Stopwatch sw;
  detail::guarded(c, "sample", [&] {
    auto rng = detail::stream(seed, 7);
    PeriodizedGrid gr(1, P, N, hbar_index);
    Operator F = [](WaveFunction const& w) { return fourier(w); };
    Operator Par = [](WaveFunction const& w) { return parity(w); };

    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      WaveFunction psi = random_state(gr, rng);
      double n0 = psi.norm();
      worst = std::max(worst, std::abs(heis_apply(random_params(1, 3, rng), psi).norm() - n0) / n0);
      worst = std::max(worst, std::abs(fourier(psi).norm() - n0) / n0);
    }
    c.add("unitarity", worst <= 1e-12, "max relative norm change " + detail::sci(worst));

    worst = 0;
    WaveFunction psi = random_state(gr, rng);
    std::vector<HeisOperatorParams> lattice;
    for (Int k = -1; k <= 1; ++k)
      for (Int p = -1; p <= 1; ++p)
        for (Int q = -1; q <= 1; ++q) lattice.push_back({k, {p}, {q}});
    for (auto const& h1 : lattice) {
      WaveFunction once = heis_apply(h1, psi);
      for (auto const& h2 : lattice) {
        auto h21 = HeisOperatorParams::from_element(heis_mul(h2.to_element(), h1.to_element()));
        worst = std::max(worst, max_pointwise_distance(heis_apply(h2, once), heis_apply(h21, psi)));
      }
    }
    c.add("group_law", worst <= 1e-12, "Pi(h2)Pi(h1) = Pi(h2 h1) on 27x27 pairs, max error " + detail::sci(worst));

    worst = 0;
    for (Int k = -2; k <= 2; ++k) {
      Complex chi = std::polar(1.0, gr.hbar() * static_cast<double>(k) / 2);
      WaveFunction expect = psi;
      for (auto& v : expect.values) v *= chi;
      worst = std::max(worst, max_pointwise_distance(heis_apply({k, {0}, {0}}, psi), expect));
    }
    c.add("central_character", worst <= 1e-12, "max error " + detail::sci(worst));

    std::vector<IntertwineSample> samples;
    for (int i = 0; i < 50; ++i) samples.push_back({random_params(1, 3, rng), random_gaussian_state(gr, rng)});
    double r_rot = intertwine_residual(F, rotation_aut(1), samples);
    double r_inv = intertwine_residual(F, aut_inverse(rotation_aut(1)), samples);
    c.add("fourier_intertwining", r_rot <= 1e-9,
          "residual " + detail::sci(r_rot) + " for (p,q)->(-q,p), " + detail::sci(r_inv) + " for (p,q)->(q,-p)");

    Int m = static_cast<Int>(N / P);
    if (shear_is_grid_exact(gr, m)) {
      Operator Sh = [m](WaveFunction const& w) { return shear(w, m); };
      double r = intertwine_residual(Sh, shear_aut(1, m), samples);
      c.add("shear_intertwining", r <= 1e-9, "m=" + std::to_string(m) + ", residual " + detail::sci(r));
    }
    double r_par = intertwine_residual(Par, parity_aut(1), samples);
    c.add("parity_intertwining", r_par <= 1e-9, "residual " + detail::sci(r_par));

    worst = 0;
    for (int i = 0; i < 10; ++i) {
      WaveFunction w = random_state(gr, rng);
      worst = std::max(worst, distance(fourier(fourier(fourier(fourier(w)))), w) / w.norm());
    }
    c.add("fourier_order_four", worst <= 1e-12, "max relative error " + detail::sci(worst));

    auto defect_at = [&](int n) {
      PeriodizedGrid gn(1, P, n, hbar_index);
      std::vector<IntertwineSample> s;
      for (int i = 0; i < 10; ++i) s.push_back({random_params(1, 3, rng), random_gaussian_state(gn, rng)});
      std::vector<WaveFunction> states;
      for (int i = 0; i < 11; ++i) states.push_back(random_state(gn, rng));
      return scalar_defect(F, F, Par, parity_aut(1), s, states);
    };
    ScalarDefect d1 = defect_at(N);
    c.add("defect_unit_modulus", std::abs(std::abs(d1.lambda) - 1) <= 1e-9,
          "lambda=(" + detail::sci(d1.lambda.real()) + "," + detail::sci(d1.lambda.imag()) + ")");
    ScalarDefect d2 = defect_at(2 * N);
    double drift = std::abs(d2.lambda - d1.lambda);
    c.add("defect_refinement_stable", drift <= 1e-6, "N->" + std::to_string(2 * N) + " change " + detail::sci(drift));
  });
  detail::add_runtime(c, sw, 30.0);
  return c;
}

inline std::vector<Criterion> run_all(std::uint64_t seed) {
  return {relation_suite(), bounding_pair(), crossed_hom(seed), cocycles(seed),
          stabilisation(seed), winding(seed), schroedinger(seed)};
}

}  // namespace heis::acceptance
