#pragma once

// 2-cocycles on the mapping class group, the central extensions they define,
// and the pullback extension of the Torelli group along Psi.

#include <functional>
#include <string>
#include <utility>

#include "error.hpp"
#include "heis_aut.hpp"
#include "heisenberg.hpp"
#include "mapping_class.hpp"

namespace heis {

// The crossed homomorphism normalized on the left: d(f) = delta_f o f_*^{-1}.
// It satisfies d(g o f) = d(g) + d(f) o g_*^{-1} and agrees with delta_f on
// the Torelli group.
inline CohomologyClass morita_crossed_hom(MappingClass const& f) {
  return pullback(f.delta(), f.symplectic().inverse());
}

namespace detail {

using CrossedHom = CohomologyClass (*)(MappingClass const&);

inline CohomologyClass raw_delta(MappingClass const& f) { return f.delta(); }

inline Int form_inverse_first(MappingClass const& f, MappingClass const& fp, CrossedHom d) {
  require_same_genus(f.genus(), fp.genus());
  return intersect(poincare_sharp(d(mcg_inverse(f))), poincare_sharp(d(fp)));
}

inline Int form_rewritten(MappingClass const& f, MappingClass const& fp, CrossedHom d) {
  require_same_genus(f.genus(), fp.genus());
  return checked_neg(intersect(poincare_sharp(d(f)), f.symplectic()(poincare_sharp(d(fp)))));
}

}  // namespace detail

// c(f, f') = d(f^{-1})# . d(f')#.
inline Int morita_cocycle(MappingClass const& f, MappingClass const& fp) {
  return detail::form_inverse_first(f, fp, morita_crossed_hom);
}

// c(f, f') = -d(f)# . f_*(d(f')#).
inline Int morita_cocycle_rewritten(MappingClass const& f, MappingClass const& fp) {
  return detail::form_rewritten(f, fp, morita_crossed_hom);
}

// The same two expressions with delta_f substituted for d(f).  Off the
// Torelli group they disagree with each other and fail the cocycle identity;
// exposed so the discrepancy can be reported.
inline Int delta_cocycle(MappingClass const& f, MappingClass const& fp) {
  return detail::form_inverse_first(f, fp, detail::raw_delta);
}
inline Int delta_cocycle_rewritten(MappingClass const& f, MappingClass const& fp) {
  return detail::form_rewritten(f, fp, detail::raw_delta);
}

inline void require_torelli(MappingClass const& f) {
  if (!f.symplectic().is_identity())
    throw Error("mapping class" + (f.name().empty() ? std::string{} : " '" + f.name() + "'") + " is not in the Torelli group");
}

// delta_f# . delta_f'# on Torelli pairs.
inline Int torelli_cocycle(MappingClass const& f, MappingClass const& fp) {
  require_torelli(f);
  require_torelli(fp);
  return intersect(poincare_sharp(f.delta()), poincare_sharp(fp.delta()));
}

// x_f . x_f' for the inner witnesses; a quarter of torelli_cocycle.  This is
// the cocycle of the pullback extension.
inline Int witness_cocycle(MappingClass const& f, MappingClass const& fp) {
  auto xf = classify_subgroups(f).inner_witness;
  auto xfp = classify_subgroups(fp).inner_witness;
  if (!xf || !xfp) throw Error("witness cocycle needs Torelli input");
  return intersect(*xf, *xfp);
}

struct TwoCocycle {
  std::string label;
  std::function<Int(MappingClass const&, MappingClass const&)> eval;

  Int operator()(MappingClass const& f, MappingClass const& fp) const { return eval(f, fp); }

  static TwoCocycle morita() { return {"morita", morita_cocycle}; }
  static TwoCocycle torelli() { return {"torelli", torelli_cocycle}; }
  static TwoCocycle witness() { return {"witness", witness_cocycle}; }
};

// c(f,g) + c(fg,h) - c(f,gh) - c(g,h); zero for a cocycle.
inline Int cocycle_defect(TwoCocycle const& c, MappingClass const& f, MappingClass const& g, MappingClass const& h) {
  Int lhs = checked_add(c(f, g), c(mcg_compose(f, g), h));
  Int rhs = checked_add(c(f, mcg_compose(g, h)), c(g, h));
  return checked_sub(lhs, rhs);
}

struct ExtensionElement {
  Int m = 0;
  MappingClass f;
  std::string cocycle;
};

// (m, f)(m', f') = (m + m' + c(f, f'), f o f').
inline ExtensionElement extension_mul(ExtensionElement const& e1, ExtensionElement const& e2, TwoCocycle const& c) {
  if (e1.cocycle != c.label || e2.cocycle != c.label)
    throw Error("cocycle mismatch: " + e1.cocycle + " * " + e2.cocycle + " under " + c.label);
  return {checked_add(checked_add(e1.m, e2.m), c(e1.f, e2.f)), mcg_compose(e1.f, e2.f), c.label};
}

inline bool same_extension_element(ExtensionElement const& a, ExtensionElement const& b) {
  return a.m == b.m && a.cocycle == b.cocycle && a.f.heis_aut() == b.f.heis_aut() &&
         a.f.forward_images() == b.f.forward_images();
}

// True iff conjugation by h agrees with Psi(f) on every a~_i, b~_i.
inline bool satisfies_constraint(HeisenbergElement const& h, MappingClass const& f) {
  require_same_genus(h.genus(), f.genus());
  for (int j = 0; j < 2 * f.genus(); ++j) {
    HeisenbergElement e{0, HomologyClass::basis(f.genus(), j)};
    if (!(heis_conj(h, e) == aut_apply(f.heis_aut(), e))) return false;
  }
  return true;
}

// A pair (h, f) with c_h = Psi(f); f is then necessarily Torelli.
class PullbackElement {
 public:
  PullbackElement(HeisenbergElement h, MappingClass f) : h_(std::move(h)), f_(std::move(f)) {
    if (!satisfies_constraint(h_, f_))
      throw Error("pullback constraint violated: conjugation by " + to_string(h_) + " is not Psi(" + f_.name() + ")");
  }

  HeisenbergElement const& h() const noexcept { return h_; }
  MappingClass const& f() const noexcept { return f_; }

 private:
  HeisenbergElement h_;
  MappingClass f_;
};

// Componentwise product; the constructor re-checks the constraint.
inline PullbackElement pullback_mul(PullbackElement const& e1, PullbackElement const& e2) {
  return {heis_mul(e1.h(), e2.h()), mcg_compose(e1.f(), e2.f())};
}

inline HeisenbergElement psi_tilde(PullbackElement const& e) { return e.h(); }

// ((m, x_f), f).  Every lift of f has this form for a unique m.
inline PullbackElement lift_torelli(MappingClass const& f, Int m) {
  require_torelli(f);
  auto x = classify_subgroups(f).inner_witness;
  return {HeisenbergElement{m, x.value()}, f};
}

// f |-> ((0, x_f), f).  A set-theoretic section; not a homomorphism.
inline PullbackElement section(MappingClass const& f) { return lift_torelli(f, 0); }

// (m, f) |-> ((m, x_f), f): an isomorphism from the extension by
// witness_cocycle onto the pullback extension.
inline PullbackElement extension_to_pullback(ExtensionElement const& e) { return lift_torelli(e.f, e.m); }

// ((m, x_f), f) |-> (4m, f): an injective homomorphism into the extension by
// torelli_cocycle.
inline ExtensionElement pullback_to_torelli_extension(PullbackElement const& e) {
  return {checked_mul(4, e.h().k), e.f(), "torelli"};
}

}  // namespace heis
