#pragma once

// Aut+(H): automorphisms of the Heisenberg group fixing u = (1, 0), stored
// through the split decomposition Sp(H) x| H^1 as pairs (S, d):
//
//     (k, x) |-> (k + d(x), S x).

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "checked.hpp"
#include "error.hpp"
#include "heisenberg.hpp"

namespace heis {

// Dense square integer matrix acting on column coefficient vectors.
class IntMatrix {
 public:
  IntMatrix(std::size_t n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw Error("matrix entry count does not match dimension");
  }

  static IntMatrix identity(std::size_t n) {
    std::vector<Int> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return {n, std::move(e)};
  }

  // Gram matrix of the intersection form: [[0, I], [-I, 0]].
  static IntMatrix gram(int genus) {
    std::size_t n = static_cast<std::size_t>(2 * genus), g = static_cast<std::size_t>(genus);
    std::vector<Int> e(n * n, 0);
    for (std::size_t i = 0; i < g; ++i) {
      e[i * n + g + i] = 1;
      e[(g + i) * n + i] = -1;
    }
    return {n, std::move(e)};
  }

  std::size_t dim() const noexcept { return n_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }
  std::vector<Int> const& entries() const noexcept { return a_; }

  IntMatrix transpose() const {
    std::vector<Int> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) e[j * n_ + i] = a_[i * n_ + j];
    return {n_, std::move(e)};
  }

  friend IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
    if (x.n_ != y.n_) throw Error("matrix dimension mismatch");
    std::size_t n = x.n_;
    std::vector<Int> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Int xik = x.a_[i * n + k];
        if (xik == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          e[i * n + j] = checked_add(e[i * n + j], checked_mul(xik, y.a_[k * n + j]));
      }
    return {n, std::move(e)};
  }

  std::vector<Int> apply(std::vector<Int> const& v) const {
    if (v.size() != n_) throw Error("vector dimension mismatch");
    std::vector<Int> r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r[i] = checked_add(r[i], checked_mul(a_[i * n_ + j], v[j]));
    return r;
  }

  // Row vector times matrix: (c S)_j = sum_i c_i S_ij.
  std::vector<Int> apply_left(std::vector<Int> const& c) const {
    if (c.size() != n_) throw Error("vector dimension mismatch");
    std::vector<Int> r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r[j] = checked_add(r[j], checked_mul(c[i], a_[i * n_ + j]));
    return r;
  }

  // Exact determinant by fraction-free (Bareiss) elimination.
  Int determinant() const {
    std::vector<Int> m = a_;
    std::size_t n = n_;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k * n + k] == 0) {
        std::size_t p = k + 1;
        while (p < n && m[p * n + k] == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          Int num = checked_sub(checked_mul(m[i * n + j], m[k * n + k]), checked_mul(m[i * n + k], m[k * n + j]));
          m[i * n + j] = num / prev;
        }
      prev = m[k * n + k];
    }
    return n == 0 ? 1 : checked_mul(sign, m[(n - 1) * n + (n - 1)]);
  }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t n_;
  std::vector<Int> a_;
};

// An integer matrix M with M^T J M = J.  Validated on construction.
class SymplecticMatrix {
 public:
  SymplecticMatrix(int genus, IntMatrix m) : genus_(genus), m_(std::move(m)) {
    detail::require_genus(genus);
    if (m_.dim() != static_cast<std::size_t>(2 * genus)) throw Error("symplectic matrix has wrong dimension");
    IntMatrix j = IntMatrix::gram(genus);
    if (!(m_.transpose() * j * m_ == j)) throw Error("matrix is not symplectic (M^T J M != J)");
    if (m_.determinant() != 1) throw Error("symplectic matrix with determinant != 1");
  }

  static SymplecticMatrix identity(int genus) {
    return {genus, IntMatrix::identity(static_cast<std::size_t>(2 * genus))};
  }

  // Transvection v |-> v + (c.v) c.
  static SymplecticMatrix transvection(HomologyClass const& c) {
    int g = c.genus();
    std::size_t n = static_cast<std::size_t>(2 * g);
    CohomologyClass cdot = poincare_flat(c);
    std::vector<Int> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e[i * n + j] = checked_add(i == j ? 1 : 0, checked_mul(c[i], cdot[j]));
    return {g, IntMatrix(n, std::move(e))};
  }

  int genus() const noexcept { return genus_; }
  IntMatrix const& matrix() const noexcept { return m_; }
  bool is_identity() const { return m_ == IntMatrix::identity(m_.dim()); }

  HomologyClass operator()(HomologyClass const& x) const {
    require_same_genus(genus_, x.genus());
    return {genus_, m_.apply(x.coeffs())};
  }

  // S^{-1} = -J S^T J.
  SymplecticMatrix inverse() const {
    IntMatrix j = IntMatrix::gram(genus_);
    IntMatrix t = j * m_.transpose() * j;
    std::vector<Int> e = t.entries();
    for (Int& v : e) v = checked_neg(v);
    return {genus_, IntMatrix(t.dim(), std::move(e))};
  }

  friend SymplecticMatrix operator*(SymplecticMatrix const& a, SymplecticMatrix const& b) {
    require_same_genus(a.genus_, b.genus_);
    return {a.genus_, a.m_ * b.m_};
  }

  friend bool operator==(SymplecticMatrix const&, SymplecticMatrix const&) = default;

 private:
  int genus_;
  IntMatrix m_;
};

// theta o S, the pullback of a covector along S.
inline CohomologyClass pullback(CohomologyClass const& theta, SymplecticMatrix const& s) {
  require_same_genus(theta.genus(), s.genus());
  return {theta.genus(), s.matrix().apply_left(theta.coeffs())};
}

class HeisAut {
 public:
  HeisAut(SymplecticMatrix s, CohomologyClass d) : s_(std::move(s)), d_(std::move(d)) {
    require_same_genus(s_.genus(), d_.genus());
  }

  static HeisAut identity(int genus) {
    return {SymplecticMatrix::identity(genus), CohomologyClass::zero(genus)};
  }

  // j(c) = [(k, x) |-> (k + c(x), x)].
  static HeisAut from_cohomology(CohomologyClass const& c) {
    return {SymplecticMatrix::identity(c.genus()), c};
  }

  // The split section Sp(H) -> Aut+(H).
  static HeisAut from_symplectic(SymplecticMatrix const& s) {
    return {s, CohomologyClass::zero(s.genus())};
  }

  // Conjugation by h; depends only on the homology part of h.
  static HeisAut inner(HeisenbergElement const& h) {
    return from_cohomology(2 * poincare_flat(h.x));
  }

  int genus() const noexcept { return s_.genus(); }
  // The projection L : Aut+(H) -> Sp(H).
  SymplecticMatrix const& symplectic() const noexcept { return s_; }
  // The diamond projection to H^1; not a homomorphism.
  CohomologyClass const& diamond() const noexcept { return d_; }

  friend bool operator==(HeisAut const&, HeisAut const&) = default;

 private:
  SymplecticMatrix s_;
  CohomologyClass d_;
};

inline HeisenbergElement aut_apply(HeisAut const& a, HeisenbergElement const& h) {
  require_same_genus(a.genus(), h.genus());
  return {checked_add(h.k, a.diamond()(h.x)), a.symplectic()(h.x)};
}

// a2 o a1 = (S2 S1, d1 + d2 o S1).
inline HeisAut aut_compose(HeisAut const& a2, HeisAut const& a1) {
  require_same_genus(a2.genus(), a1.genus());
  return {a2.symplectic() * a1.symplectic(), a1.diamond() + pullback(a2.diamond(), a1.symplectic())};
}

inline HeisAut aut_inverse(HeisAut const& a) {
  SymplecticMatrix si = a.symplectic().inverse();
  return {si, -pullback(a.diamond(), si)};
}

struct AutIdentity {};
struct AutInner {
  HomologyClass witness;
};
struct AutNonInner {};
using AutClass = std::variant<AutIdentity, AutInner, AutNonInner>;

// Inner iff S = I and d is even; the witness x satisfies
// heis_conj((0, x), h) == aut_apply(a, h) for every h.
inline AutClass classify_aut(HeisAut const& a) {
  if (!a.symplectic().is_identity()) return AutNonInner{};
  if (a.diamond().is_zero()) return AutIdentity{};
  if (auto w = inner_witness(a.diamond())) return AutInner{*w};
  return AutNonInner{};
}

inline std::string to_string(AutClass const& c) {
  if (std::holds_alternative<AutIdentity>(c)) return "identity";
  if (auto const* in = std::get_if<AutInner>(&c)) return "inner witness=" + to_string(HeisenbergElement{0, in->witness});
  return "non-inner";
}

// ---------------------------------------------------------------------------
// Plain-text format: 2g rows of S, then one row holding d.  Blank lines and
// lines starting with '#' are ignored.

inline std::string format_heis_aut(HeisAut const& a) {
  std::ostringstream os;
  std::size_t n = a.symplectic().matrix().dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << a.symplectic().matrix()(i, j);
    os << '\n';
  }
  for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << a.diamond()[j];
  os << '\n';
  return os.str();
}

inline HeisAut parse_heis_aut(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("bad integer '" + tok + "' in line " + std::to_string(rows.size() + 1), 0);
      row.push_back(static_cast<Int>(v));
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() < 3 || (rows.size() - 1) % 2 != 0) {
    throw ParseError("expected 2g matrix rows followed by one covector row", 0);
  }
  std::size_t n = rows.size() - 1;
  std::vector<Int> e;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ParseError("matrix row " + std::to_string(i + 1) + " has wrong length", 0);
    e.insert(e.end(), rows[i].begin(), rows[i].end());
  }
  if (rows[n].size() != n) throw ParseError("covector row has wrong length", 0);
  int g = static_cast<int>(n / 2);
  return {SymplecticMatrix(g, IntMatrix(n, std::move(e))), CohomologyClass(g, rows[n])};
}

}  // namespace heis
