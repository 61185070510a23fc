#pragma once

// Words in the surface braid group B_n(Sigma_{g,1}) and the quotient map
// phi : B_n(Sigma) -> H onto the Heisenberg group.
//
// Grammar:  WORD := TOKEN*   TOKEN := ("s" | "a" | "b") INDEX ["'"]
// Tokens are whitespace separated; a trailing ' denotes the inverse.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "heisenberg.hpp"

namespace heis {

enum class LetterKind { sigma, alpha, beta };

struct BraidLetter {
  LetterKind kind;
  int index;         // 1-based
  int exponent = 1;  // +1 or -1

  BraidLetter inverse() const { return {kind, index, -exponent}; }
  bool cancels(BraidLetter const& o) const {
    return kind == o.kind && index == o.index && exponent == -o.exponent;
  }
  friend bool operator==(BraidLetter const&, BraidLetter const&) = default;
};

inline char letter_char(LetterKind k) {
  switch (k) {
    case LetterKind::sigma: return 's';
    case LetterKind::alpha: return 'a';
    case LetterKind::beta: return 'b';
  }
  return '?';
}

inline std::string to_string(BraidLetter const& l) {
  std::string s(1, letter_char(l.kind));
  s += std::to_string(l.index);
  if (l.exponent < 0) s += '\'';
  return s;
}

class BraidWord {
 public:
  BraidWord(int genus, int strands, std::vector<BraidLetter> letters = {})
      : genus_(genus), strands_(strands), letters_(std::move(letters)) {
    if (genus < 1) throw Error("genus must be positive");
    if (strands < 2) throw Error("strand count must be at least 2");
    for (auto const& l : letters_) validate(l);
  }

  int genus() const noexcept { return genus_; }
  int strands() const noexcept { return strands_; }
  std::vector<BraidLetter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const {
    std::vector<BraidLetter> r;
    r.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(it->inverse());
    return {genus_, strands_, std::move(r)};
  }

  // Adjacent letter/inverse pairs cancel.  Idempotent.
  BraidWord reduced() const {
    std::vector<BraidLetter> out;
    for (auto const& l : letters_) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return {genus_, strands_, std::move(out)};
  }

  friend BraidWord operator*(BraidWord const& lhs, BraidWord const& rhs) {
    require_same_genus(lhs.genus_, rhs.genus_);
    if (lhs.strands_ != rhs.strands_) throw Error("strand count mismatch");
    std::vector<BraidLetter> r = lhs.letters_;
    r.insert(r.end(), rhs.letters_.begin(), rhs.letters_.end());
    return {lhs.genus_, lhs.strands_, std::move(r)};
  }

  friend bool operator==(BraidWord const&, BraidWord const&) = default;

 private:
  void validate(BraidLetter const& l) const {
    if (l.exponent != 1 && l.exponent != -1) throw Error("braid letter exponent must be +1 or -1");
    if (l.index < 1) throw IndexOutOfRange("generator index must be positive: " + to_string(l));
    if (l.kind == LetterKind::sigma && l.index >= strands_) {
      throw IndexOutOfRange("sigma index " + std::to_string(l.index) + " out of range for " +
                            std::to_string(strands_) + " strands");
    }
    if (l.kind != LetterKind::sigma && l.index > genus_) {
      throw IndexOutOfRange(std::string(1, letter_char(l.kind)) + " index " +
                            std::to_string(l.index) + " out of range for genus " +
                            std::to_string(genus_));
    }
  }

  int genus_;
  int strands_;
  std::vector<BraidLetter> letters_;
};

inline std::string render(BraidWord const& w) {
  std::string s;
  for (auto const& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

namespace detail {

// Tokenizer shared by braid words and free words.  `allowed` lists the
// accepted generator characters.
inline std::vector<std::pair<BraidLetter, std::size_t>> tokenize_letters(std::string_view text,
                                                                        std::string_view allowed) {
  std::vector<std::pair<BraidLetter, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    char c = text[i];
    if (allowed.find(c) == std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    LetterKind kind = c == 's' ? LetterKind::sigma : c == 'a' ? LetterKind::alpha : LetterKind::beta;
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected generator index", i);
    }
    int index = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      if (index > 1000000) throw ParseError("generator index too large", start);
      ++i;
    }
    int exponent = 1;
    if (i < text.size() && text[i] == '\'') {
      exponent = -1;
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("tokens must be separated by whitespace", i);
    }
    out.push_back({BraidLetter{kind, index, exponent}, start});
  }
  return out;
}

}  // namespace detail

inline BraidWord parse_word(std::string_view text, int genus, int strands) {
  std::vector<BraidLetter> letters;
  for (auto const& [l, pos] : detail::tokenize_letters(text, "sab")) {
    if (l.index < 1 || (l.kind == LetterKind::sigma && l.index >= strands) ||
        (l.kind != LetterKind::sigma && l.index > genus)) {
      throw IndexOutOfRange("generator " + to_string(l) + " at position " + std::to_string(pos) +
                            " out of range (genus " + std::to_string(genus) + ", strands " +
                            std::to_string(strands) + ")");
    }
    letters.push_back(l);
  }
  return {genus, strands, std::move(letters)};
}

// Image of a single generator.  Every sigma_i goes to u = (1, 0).
inline HeisenbergElement phi_letter(BraidLetter const& l, int genus) {
  HeisenbergElement h = l.kind == LetterKind::sigma ? HeisenbergElement::u(genus)
                        : l.kind == LetterKind::alpha ? HeisenbergElement::a_tilde(genus, l.index)
                                                      : HeisenbergElement::b_tilde(genus, l.index);
  return l.exponent > 0 ? h : heis_inv(h);
}

// Multiplies the generator images in storage order.  With a_i.b_i = +1 this
// is the order under which every defining relation of B_n(Sigma) holds.
inline HeisenbergElement phi(BraidWord const& w, FormSign sign = FormSign::standard) {
  HeisenbergElement acc = HeisenbergElement::identity(w.genus());
  for (auto const& l : w.letters()) acc = heis_mul(acc, phi_letter(l, w.genus()), sign);
  return acc;
}

// A word u^m a_1^{p_1}..a_g^{p_g} b_1^{q_1}..b_g^{q_g} with phi(word) == target.
// The a-block and b-block multiply with central correction sum p_i q_i.
inline BraidWord phi_preimage(HeisenbergElement const& target, int strands) {
  int g = target.genus();
  Int correction = 0;
  for (int i = 1; i <= g; ++i) correction = checked_add(correction, checked_mul(target.x.p(i), target.x.q(i)));
  Int m = checked_sub(target.k, correction);
  std::vector<BraidLetter> letters;
  auto push_power = [&](LetterKind kind, int index, Int e) {
    for (Int j = 0; j < (e < 0 ? -e : e); ++j) letters.push_back({kind, index, e < 0 ? -1 : 1});
  };
  push_power(LetterKind::sigma, 1, m);
  for (int i = 1; i <= g; ++i) push_power(LetterKind::alpha, i, target.x.p(i));
  for (int i = 1; i <= g; ++i) push_power(LetterKind::beta, i, target.x.q(i));
  return {g, strands, std::move(letters)};
}

}  // namespace heis
