#pragma once

// Exact arithmetic in H = H_1(Sigma_{g,1}; Z) = Z^{2g}, its intersection form,
// Poincare duality, and the Heisenberg group Z x H.
//
// Coefficients are ordered (p_1..p_g, q_1..q_g) for x = sum p_i a_i + q_i b_i.
// The intersection form has Gram matrix [[0, I], [-I, 0]], so a_i.b_i = +1.

#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "error.hpp"

namespace heis {

// Orientation of the intersection form.  `flipped` exists only so that the
// relation checker can run its negative control.
enum class FormSign : int { standard = 1, flipped = -1 };

namespace detail {

inline void require_genus(int genus) {
  if (genus < 1) throw Error("genus must be positive, got " + std::to_string(genus));
}

// Shared storage for vectors and covectors of length 2g.
template <typename Derived>
class CoeffVector {
 public:
  CoeffVector(int genus, std::vector<Int> coeffs) : genus_(genus), coeffs_(std::move(coeffs)) {
    require_genus(genus);
    if (coeffs_.size() != static_cast<std::size_t>(2 * genus)) {
      throw Error("coefficient vector has length " + std::to_string(coeffs_.size()) +
                  ", expected " + std::to_string(2 * genus));
    }
  }

  static Derived zero(int genus) {
    require_genus(genus);
    return Derived(genus, std::vector<Int>(2 * genus, 0));
  }

  int genus() const noexcept { return genus_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::vector<Int> const& coeffs() const noexcept { return coeffs_; }
  Int operator[](std::size_t i) const { return coeffs_.at(i); }

  // 1-based accessors for the a-part and the b-part.
  Int p(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  Int q(int i) const { return coeffs_.at(static_cast<std::size_t>(genus_ + i - 1)); }

  bool is_zero() const noexcept {
    for (Int c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend Derived operator+(Derived const& a, Derived const& b) {
    require_same_genus(a.genus_, b.genus_);
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
    return Derived(a.genus_, std::move(r));
  }

  friend Derived operator-(Derived const& a, Derived const& b) {
    require_same_genus(a.genus_, b.genus_);
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(a.coeffs_[i], b.coeffs_[i]);
    return Derived(a.genus_, std::move(r));
  }

  friend Derived operator-(Derived const& a) {
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_neg(a.coeffs_[i]);
    return Derived(a.genus_, std::move(r));
  }

  friend Derived operator*(Int s, Derived const& a) {
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(s, a.coeffs_[i]);
    return Derived(a.genus_, std::move(r));
  }

  friend bool operator==(Derived const& a, Derived const& b) {
    return a.genus_ == b.genus_ && a.coeffs_ == b.coeffs_;
  }

 protected:
  int genus_;
  std::vector<Int> coeffs_;
};

}  // namespace detail

class HomologyClass : public detail::CoeffVector<HomologyClass> {
 public:
  using CoeffVector::CoeffVector;

  // Basis classes a_i and b_i, 1-based.
  static HomologyClass a(int genus, int i) { return basis(genus, i - 1); }
  static HomologyClass b(int genus, int i) { return basis(genus, genus + i - 1); }

  // The j-th vector of the ordered basis (a_1..a_g, b_1..b_g), 0-based.
  static HomologyClass basis(int genus, int j) {
    detail::require_genus(genus);
    if (j < 0 || j >= 2 * genus) throw IndexOutOfRange("basis index out of range");
    std::vector<Int> c(2 * genus, 0);
    c[static_cast<std::size_t>(j)] = 1;
    return HomologyClass(genus, std::move(c));
  }
};

class CohomologyClass : public detail::CoeffVector<CohomologyClass> {
 public:
  using CoeffVector::CoeffVector;

  // Dual basis covectors a_i^* and b_i^*, 1-based.
  static CohomologyClass a_star(int genus, int i) { return basis(genus, i - 1); }
  static CohomologyClass b_star(int genus, int i) { return basis(genus, genus + i - 1); }

  static CohomologyClass basis(int genus, int j) {
    detail::require_genus(genus);
    if (j < 0 || j >= 2 * genus) throw IndexOutOfRange("basis index out of range");
    std::vector<Int> c(2 * genus, 0);
    c[static_cast<std::size_t>(j)] = 1;
    return CohomologyClass(genus, std::move(c));
  }

  Int operator()(HomologyClass const& x) const {
    require_same_genus(genus_, x.genus());
    Int r = 0;
    for (std::size_t i = 0; i < dim(); ++i) r = checked_add(r, checked_mul(coeffs_[i], x[i]));
    return r;
  }

  bool is_even() const noexcept {
    for (Int c : coeffs_)
      if (c % 2 != 0) return false;
    return true;
  }
};

inline Int intersect(HomologyClass const& x, HomologyClass const& y,
                     FormSign sign = FormSign::standard) {
  require_same_genus(x.genus(), y.genus());
  Int r = 0;
  for (int i = 1; i <= x.genus(); ++i) {
    r = checked_add(r, checked_mul(x.p(i), y.q(i)));
    r = checked_sub(r, checked_mul(x.q(i), y.p(i)));
  }
  return sign == FormSign::standard ? r : checked_neg(r);
}

// The covector y |-> intersect(x, y).
inline CohomologyClass poincare_flat(HomologyClass const& x) {
  int g = x.genus();
  std::vector<Int> c(2 * g);
  for (int i = 1; i <= g; ++i) {
    c[static_cast<std::size_t>(i - 1)] = checked_neg(x.q(i));
    c[static_cast<std::size_t>(g + i - 1)] = x.p(i);
  }
  return CohomologyClass(g, std::move(c));
}

// The unique x with intersect(x, y) == theta(y) for every y.
inline HomologyClass poincare_sharp(CohomologyClass const& theta) {
  int g = theta.genus();
  std::vector<Int> c(2 * g);
  for (int i = 1; i <= g; ++i) {
    c[static_cast<std::size_t>(i - 1)] = theta.q(i);
    c[static_cast<std::size_t>(g + i - 1)] = checked_neg(theta.p(i));
  }
  return HomologyClass(g, std::move(c));
}

// x with 2 * intersect(x, y) == theta(y), when theta is even.
inline std::optional<HomologyClass> inner_witness(CohomologyClass const& theta) {
  if (!theta.is_even()) return std::nullopt;
  HomologyClass s = poincare_sharp(theta);
  std::vector<Int> c = s.coeffs();
  for (Int& v : c) v /= 2;
  return HomologyClass(s.genus(), std::move(c));
}

struct HeisenbergElement {
  Int k = 0;
  HomologyClass x;

  HeisenbergElement(Int central, HomologyClass cls) : k(central), x(std::move(cls)) {}

  static HeisenbergElement identity(int genus) { return {0, HomologyClass::zero(genus)}; }
  // u = (1, 0), the generator of the centre.
  static HeisenbergElement u(int genus) { return {1, HomologyClass::zero(genus)}; }
  static HeisenbergElement a_tilde(int genus, int i) { return {0, HomologyClass::a(genus, i)}; }
  static HeisenbergElement b_tilde(int genus, int i) { return {0, HomologyClass::b(genus, i)}; }

  int genus() const noexcept { return x.genus(); }
  bool is_central() const noexcept { return x.is_zero(); }

  friend bool operator==(HeisenbergElement const&, HeisenbergElement const&) = default;
};

inline HeisenbergElement heis_mul(HeisenbergElement const& h1, HeisenbergElement const& h2,
                                  FormSign sign = FormSign::standard) {
  require_same_genus(h1.genus(), h2.genus());
  Int k = checked_add(checked_add(h1.k, h2.k), intersect(h1.x, h2.x, sign));
  return {k, h1.x + h2.x};
}

// x.x = 0, so inversion is coordinatewise.
inline HeisenbergElement heis_inv(HeisenbergElement const& h) { return {checked_neg(h.k), -h.x}; }

// g h g^{-1} = (k + 2 x.y, y) for g = (l, x), h = (k, y).
inline HeisenbergElement heis_conj(HeisenbergElement const& g, HeisenbergElement const& h,
                                   FormSign sign = FormSign::standard) {
  require_same_genus(g.genus(), h.genus());
  return {checked_add(h.k, checked_mul(2, intersect(g.x, h.x, sign))), h.x};
}

inline HeisenbergElement heis_commutator(HeisenbergElement const& g, HeisenbergElement const& h,
                                         FormSign sign = FormSign::standard) {
  return heis_mul(heis_mul(heis_mul(g, h, sign), heis_inv(g), sign), heis_inv(h), sign);
}

// ---------------------------------------------------------------------------
// Text syntax "(k; p1,...,pg, q1,...,qg)".

inline std::string format_coeffs(std::vector<Int> const& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

inline std::string to_string(HeisenbergElement const& h) {
  return "(" + std::to_string(h.k) + "; " + format_coeffs(h.x.coeffs()) + ")";
}

inline std::string to_string(HomologyClass const& x) { return "[" + format_coeffs(x.coeffs()) + "]"; }
inline std::string to_string(CohomologyClass const& t) { return "<" + format_coeffs(t.coeffs()) + ">"; }

inline std::ostream& operator<<(std::ostream& os, HeisenbergElement const& h) { return os << to_string(h); }
inline std::ostream& operator<<(std::ostream& os, HomologyClass const& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, CohomologyClass const& t) { return os << to_string(t); }

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected integer", start);
    }
    Int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    return neg ? checked_neg(v) : v;
  }
  std::size_t pos() const noexcept { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Genus is inferred from the number of coefficients; `expected_genus` > 0
// additionally enforces it.
inline HeisenbergElement parse_heisenberg(std::string_view text, int expected_genus = 0) {
  detail::Scanner sc(text);
  sc.expect('(');
  Int k = sc.integer();
  sc.expect(';');
  std::vector<Int> c;
  c.push_back(sc.integer());
  while (sc.peek(',')) {
    sc.expect(',');
    c.push_back(sc.integer());
  }
  sc.expect(')');
  if (!sc.at_end()) throw ParseError("trailing characters", sc.pos());
  if (c.size() % 2 != 0) throw ParseError("odd number of homology coefficients", sc.pos());
  int g = static_cast<int>(c.size() / 2);
  if (expected_genus > 0) require_same_genus(expected_genus, g);
  return {k, HomologyClass(g, std::move(c))};
}

}  // namespace heis
