#pragma once

// Mapping classes of Sigma_{g,1} as automorphisms of the free group
// pi_1(Sigma) = F_{2g} fixing the boundary word, and the induced action
// Psi(f) = f_H on the Heisenberg group together with its crossed
// homomorphism delta_f.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "free_group.hpp"
#include "heis_aut.hpp"
#include "heisenberg.hpp"

namespace heis {

namespace detail {

// f_H is determined by the images of the generators: the homology class of
// f(gamma_j) is column j of S and its central coordinate is delta(gamma_j).
inline HeisAut induced_from_images(int genus, std::vector<FreeWord> const& images) {
  std::size_t n = static_cast<std::size_t>(2 * genus);
  std::vector<Int> s(n * n, 0), d(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    HeisenbergElement h = heis_image(images[j]);
    for (std::size_t i = 0; i < n; ++i) s[i * n + j] = h.x[i];
    d[j] = h.k;
  }
  try {
    return {SymplecticMatrix(genus, IntMatrix(n, std::move(s))), CohomologyClass(genus, std::move(d))};
  } catch (Error const& e) {
    throw Error(std::string("invalid mapping class datum: ") + e.what());
  }
}

}  // namespace detail

class MappingClass {
 public:
  // Validates that the two image lists are mutually inverse and that the
  // boundary word is fixed; computes and caches Psi(f).
  MappingClass(int genus, std::vector<FreeWord> forward, std::vector<FreeWord> inverse, std::string name = {})
      : MappingClass(Unchecked{}, genus, std::move(forward), std::move(inverse), std::move(name)) {
    std::size_t n = static_cast<std::size_t>(2 * genus_);
    for (std::size_t j = 0; j < n; ++j) {
      FreeWord gen = FreeWord::generator(genus_, static_cast<int>(j));
      if (!(substitute(inv_[j], fwd_) == gen) || !(substitute(fwd_[j], inv_) == gen)) {
        throw Error("invalid mapping class datum" + label() + ": forward and inverse images are not mutually inverse on generator " +
                    render(gen));
      }
    }
    FreeWord bd = boundary_word(genus_);
    if (!(substitute(bd, fwd_) == bd)) throw Error("invalid mapping class datum" + label() + ": boundary word is not preserved");
  }

  static MappingClass identity(int genus, std::string name = "id") {
    std::vector<FreeWord> g;
    for (int j = 0; j < 2 * genus; ++j) g.push_back(FreeWord::generator(genus, j));
    return {genus, g, g, std::move(name)};
  }

  int genus() const noexcept { return genus_; }
  std::string const& name() const noexcept { return name_; }
  std::vector<FreeWord> const& forward_images() const noexcept { return fwd_; }
  std::vector<FreeWord> const& inverse_images() const noexcept { return inv_; }

  // Psi(f) = f_H.
  HeisAut const& heis_aut() const noexcept { return aut_; }
  // f_* on H.
  SymplecticMatrix const& symplectic() const noexcept { return aut_.symplectic(); }
  // delta_f, the diamond component of f_H.
  CohomologyClass const& delta() const noexcept { return aut_.diamond(); }

  FreeWord apply(FreeWord const& w) const { return substitute(w, fwd_); }

  MappingClass with_name(std::string name) const {
    MappingClass r = *this;
    r.name_ = std::move(name);
    return r;
  }

 private:
  // Composites and inverses of valid classes are valid, and
  // re-checking them costs a substitution into words that grow quickly.
  struct Unchecked {};
  friend MappingClass mcg_compose(MappingClass const&, MappingClass const&);
  friend MappingClass mcg_inverse(MappingClass const&);

  MappingClass(Unchecked, int genus, std::vector<FreeWord> forward, std::vector<FreeWord> inverse, std::string name)
      : genus_(genus),
        fwd_(std::move(forward)),
        inv_(std::move(inverse)),
        name_(std::move(name)),
        aut_(HeisAut::identity(genus)) {
    std::size_t n = static_cast<std::size_t>(2 * genus_);
    if (fwd_.size() != n || inv_.size() != n) throw Error("mapping class needs 2g forward and 2g inverse images");
    for (auto& w : fwd_) {
      require_same_genus(genus_, w.genus());
      w = w.reduced();
    }
    for (auto& w : inv_) {
      require_same_genus(genus_, w.genus());
      w = w.reduced();
    }
    aut_ = detail::induced_from_images(genus_, fwd_);
  }

  std::string label() const { return name_.empty() ? std::string{} : " '" + name_ + "'"; }

  int genus_;
  std::vector<FreeWord> fwd_;
  std::vector<FreeWord> inv_;
  std::string name_;
  HeisAut aut_;
};

inline HeisAut induced_heis_aut(MappingClass const& f) { return f.heis_aut(); }
inline CohomologyClass delta(MappingClass const& f) { return f.delta(); }

// f o g: first g, then f.
inline MappingClass mcg_compose(MappingClass const& f, MappingClass const& g) {
  require_same_genus(f.genus(), g.genus());
  std::vector<FreeWord> fwd, inv;
  for (auto const& w : g.forward_images()) fwd.push_back(substitute(w, f.forward_images()));
  for (auto const& w : f.inverse_images()) inv.push_back(substitute(w, g.inverse_images()));
  std::string name = f.name().empty() || g.name().empty() ? std::string{} : f.name() + " " + g.name();
  return {MappingClass::Unchecked{}, f.genus(), std::move(fwd), std::move(inv), std::move(name)};
}

inline std::string inverse_name(std::string const& name) {
  if (name.empty()) return {};
  // Reverse the word and toggle the prime on each token.
  std::vector<std::string> toks;
  std::string cur;
  for (char c : name) {
    if (c == ' ') {
      if (!cur.empty()) toks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  std::string r;
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    std::string t = *it;
    if (!t.empty() && t.back() == '\'') {
      t.pop_back();
    } else {
      t += '\'';
    }
    if (!r.empty()) r += ' ';
    r += t;
  }
  return r;
}

inline MappingClass mcg_inverse(MappingClass const& f) {
  return {MappingClass::Unchecked{}, f.genus(), f.inverse_images(), f.forward_images(), inverse_name(f.name())};
}

// Extends f by the identity on the new handles g+1..h.
inline MappingClass stabilize(MappingClass const& f, int new_genus) {
  int g = f.genus(), h = new_genus;
  if (h <= g) throw Error("stabilize: new genus " + std::to_string(h) + " must exceed " + std::to_string(g));
  auto lift = [&](FreeWord const& w) {
    std::vector<FreeLetter> r;
    for (auto const& l : w.letters()) r.push_back({l.generator < g ? l.generator : l.generator - g + h, l.inverted});
    return FreeWord(h, std::move(r));
  };
  auto extend = [&](std::vector<FreeWord> const& imgs) {
    std::vector<FreeWord> r(static_cast<std::size_t>(2 * h), FreeWord(h));
    for (int j = 0; j < 2 * h; ++j) r[static_cast<std::size_t>(j)] = FreeWord::generator(h, j);
    for (int i = 0; i < g; ++i) {
      r[static_cast<std::size_t>(i)] = lift(imgs[static_cast<std::size_t>(i)]);
      r[static_cast<std::size_t>(h + i)] = lift(imgs[static_cast<std::size_t>(g + i)]);
    }
    return r;
  };
  return {h, extend(f.forward_images()), extend(f.inverse_images()), f.name()};
}

// Embeds a class of H_1(Sigma_g) into H_1(Sigma_h), h > g.
inline HomologyClass stabilize(HomologyClass const& x, int new_genus) {
  int g = x.genus();
  std::vector<Int> c(static_cast<std::size_t>(2 * new_genus), 0);
  for (int i = 1; i <= g; ++i) {
    c[static_cast<std::size_t>(i - 1)] = x.p(i);
    c[static_cast<std::size_t>(new_genus + i - 1)] = x.q(i);
  }
  return {new_genus, std::move(c)};
}

struct SubgroupFlags {
  bool torelli = false;        // f_* = id
  bool earle_morita = false;   // delta_f = 0
  bool chillingworth = false;  // Psi(f) = id
  // Set iff torelli: x_f with 2 x_f.y = delta_f(y), so that f_H is
  // conjugation by (0, x_f).
  std::optional<HomologyClass> inner_witness;
};

inline SubgroupFlags classify_subgroups(MappingClass const& f) {
  SubgroupFlags r;
  r.torelli = f.symplectic().is_identity();
  r.earle_morita = f.delta().is_zero();
  r.chillingworth = r.torelli && r.earle_morita;
  if (r.torelli) {
    auto w = inner_witness(f.delta());
    if (!w) throw Error("Torelli datum with odd delta; not induced by a mapping class");
    r.inner_witness = std::move(w);
  }
  return r;
}

}  // namespace heis
