#pragma once

// Words in pi_1(Sigma_{g,1}) = F(alpha_1..alpha_g, beta_1..beta_g).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braid.hpp"
#include "error.hpp"
#include "heisenberg.hpp"

namespace heis {

struct FreeLetter {
  int generator;  // 0..g-1 for alpha_1..alpha_g, g..2g-1 for beta_1..beta_g
  bool inverted = false;

  FreeLetter inverse() const { return {generator, !inverted}; }
  friend bool operator==(FreeLetter const&, FreeLetter const&) = default;
};

class FreeWord {
 public:
  explicit FreeWord(int genus, std::vector<FreeLetter> letters = {}) : genus_(genus), letters_(std::move(letters)) {
    detail::require_genus(genus);
    for (auto const& l : letters_)
      if (l.generator < 0 || l.generator >= 2 * genus_) throw IndexOutOfRange("free generator out of range");
  }

  static FreeWord generator(int genus, int j) { return FreeWord(genus, {FreeLetter{j, false}}); }
  static FreeWord alpha(int genus, int i) { return generator(genus, i - 1); }
  static FreeWord beta(int genus, int i) { return generator(genus, genus + i - 1); }

  int genus() const noexcept { return genus_; }
  std::vector<FreeLetter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const {
    std::vector<FreeLetter> r;
    r.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(it->inverse());
    return FreeWord(genus_, std::move(r));
  }

  FreeWord reduced() const {
    std::vector<FreeLetter> out;
    out.reserve(letters_.size());
    for (auto const& l : letters_) {
      if (!out.empty() && out.back().generator == l.generator && out.back().inverted != l.inverted) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return FreeWord(genus_, std::move(out));
  }

  bool is_reduced() const { return reduced().letters_.size() == letters_.size(); }

  // Concatenation followed by free reduction.
  friend FreeWord operator*(FreeWord const& a, FreeWord const& b) {
    require_same_genus(a.genus_, b.genus_);
    std::vector<FreeLetter> r = a.letters_;
    r.insert(r.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(a.genus_, std::move(r)).reduced();
  }

  friend bool operator==(FreeWord const&, FreeWord const&) = default;

 private:
  int genus_;
  std::vector<FreeLetter> letters_;
};

inline FreeWord commutator(FreeWord const& x, FreeWord const& y) { return x * y * x.inverse() * y.inverse(); }

// The boundary word [alpha_1, beta_1] ... [alpha_g, beta_g].
inline FreeWord boundary_word(int genus) {
  FreeWord w(genus);
  for (int i = 1; i <= genus; ++i) w = w * commutator(FreeWord::alpha(genus, i), FreeWord::beta(genus, i));
  return w;
}

// Replaces each generator j by images[j] (inverse letters by the inverse
// image) and reduces.
inline FreeWord substitute(FreeWord const& w, std::vector<FreeWord> const& images) {
  if (images.size() != static_cast<std::size_t>(2 * w.genus())) throw Error("image count does not match genus");
  int target_genus = images.empty() ? w.genus() : images.front().genus();
  std::vector<FreeLetter> r;
  for (auto const& l : w.letters()) {
    FreeWord const& img = images[static_cast<std::size_t>(l.generator)];
    if (l.inverted) {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) r.push_back(it->inverse());
    } else {
      r.insert(r.end(), img.letters().begin(), img.letters().end());
    }
  }
  return FreeWord(target_genus, std::move(r)).reduced();
}

inline std::string to_string(FreeLetter const& l, int genus) {
  std::string s = l.generator < genus ? "a" + std::to_string(l.generator + 1) : "b" + std::to_string(l.generator - genus + 1);
  if (l.inverted) s += '\'';
  return s;
}

inline std::string render(FreeWord const& w) {
  std::string s;
  for (auto const& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += to_string(l, w.genus());
  }
  return s;
}

// Same tokens as braid words, without sigma.
inline FreeWord parse_free_word(std::string_view text, int genus) {
  std::vector<FreeLetter> letters;
  for (auto const& [l, pos] : detail::tokenize_letters(text, "ab")) {
    if (l.index < 1 || l.index > genus) {
      throw IndexOutOfRange("generator " + to_string(l) + " at position " + std::to_string(pos) +
                            " out of range for genus " + std::to_string(genus));
    }
    int j = l.kind == LetterKind::alpha ? l.index - 1 : genus + l.index - 1;
    letters.push_back({j, l.exponent < 0});
  }
  return FreeWord(genus, std::move(letters));
}

// Image in H under alpha_i |-> (0, a_i), beta_i |-> (0, b_i), multiplied in
// storage order (the same order phi uses on braid words).
inline HeisenbergElement heis_image(FreeWord const& w) {
  int g = w.genus();
  HeisenbergElement acc = HeisenbergElement::identity(g);
  for (auto const& l : w.letters()) {
    HeisenbergElement e{0, HomologyClass::basis(g, l.generator)};
    acc = heis_mul(acc, l.inverted ? heis_inv(e) : e);
  }
  return acc;
}

inline HomologyClass abelianize(FreeWord const& w) {
  std::vector<Int> c(static_cast<std::size_t>(2 * w.genus()), 0);
  for (auto const& l : w.letters()) {
    auto& v = c[static_cast<std::size_t>(l.generator)];
    v = checked_add(v, l.inverted ? -1 : 1);
  }
  return {w.genus(), std::move(c)};
}

}  // namespace heis
