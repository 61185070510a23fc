#pragma once

// Finite model of the Schroedinger representation of the discrete
// Heisenberg group on a periodized grid:
//   Pi(k,p,q) psi(s) = exp(i hbar (k - p.q)/2) exp(i hbar p.s) psi(s - q),
// with s_j = j P/N per axis and hbar = 2 pi r / P.  Pi(h2) Pi(h1) = Pi(h2 h1).

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "checked.hpp"
#include "error.hpp"
#include "heis_aut.hpp"
#include "heisenberg.hpp"

namespace heis {

using Complex = std::complex<double>;

struct PeriodizedGrid {
  int g = 1;       // number of axes
  int P = 4;       // period
  int N = 256;     // points per axis, a multiple of P
  int hbar_index = 1;

  PeriodizedGrid(int axes, int period, int points, int r = 1) : g(axes), P(period), N(points), hbar_index(r) {
    if (g < 1) throw Error("grid needs at least one axis");
    if (P < 1 || N < 1) throw Error("grid period and size must be positive");
    if (N % P != 0) throw Error("N = " + std::to_string(N) + " is not a multiple of P = " + std::to_string(P));
    if (hbar_index == 0) throw Error("hbar index must be non-zero");
  }

  double spacing() const { return static_cast<double>(P) / N; }
  double hbar() const { return 2 * std::numbers::pi * hbar_index / P; }
  std::size_t cells_per_unit() const { return static_cast<std::size_t>(N / P); }
  std::size_t size() const {
    std::size_t n = 1;
    for (int a = 0; a < g; ++a) n *= static_cast<std::size_t>(N);
    return n;
  }
  friend bool operator==(PeriodizedGrid const&, PeriodizedGrid const&) = default;
};

struct WaveFunction {
  PeriodizedGrid grid;
  std::vector<Complex> values;

  explicit WaveFunction(PeriodizedGrid gr) : grid(gr), values(gr.size()) {}
  WaveFunction(PeriodizedGrid gr, std::vector<Complex> v) : grid(gr), values(std::move(v)) {
    if (values.size() != grid.size()) throw Error("wave function size does not match grid");
  }

  // L2 norm with the Delta^{g/2} scaling.
  double norm() const {
    double s = 0;
    for (auto const& z : values) s += std::norm(z);
    return std::sqrt(s * std::pow(grid.spacing(), grid.g));
  }
};

inline double distance(WaveFunction const& a, WaveFunction const& b) {
  if (!(a.grid == b.grid)) throw Error("wave functions live on different grids");
  double s = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += std::norm(a.values[i] - b.values[i]);
  return std::sqrt(s * std::pow(a.grid.spacing(), a.grid.g));
}

inline double max_pointwise_distance(WaveFunction const& a, WaveFunction const& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

// <a, b>, antilinear in a.
inline Complex inner(WaveFunction const& a, WaveFunction const& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
  return s * std::pow(a.grid.spacing(), a.grid.g);
}

struct HeisOperatorParams {
  Int k = 0;
  std::vector<Int> p, q;

  static HeisOperatorParams from_element(HeisenbergElement const& h) {
    int g = h.genus();
    HeisOperatorParams r{h.k, {}, {}};
    for (int i = 1; i <= g; ++i) {
      r.p.push_back(h.x.p(i));
      r.q.push_back(h.x.q(i));
    }
    return r;
  }
  HeisenbergElement to_element() const {
    std::vector<Int> c = p;
    c.insert(c.end(), q.begin(), q.end());
    return {k, HomologyClass(static_cast<int>(p.size()), std::move(c))};
  }
};

namespace detail {

inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// exp(2 pi i n / m), reduced exactly before the trigonometric call.
inline Complex root_of_unity(Int n, Int m) {
  double t = 2 * std::numbers::pi * static_cast<double>(floor_mod(n, m)) / static_cast<double>(m);
  return {std::cos(t), std::sin(t)};
}

inline std::vector<std::size_t> unflatten(std::size_t idx, int g, std::size_t n) {
  std::vector<std::size_t> j(static_cast<std::size_t>(g));
  for (auto& c : j) {
    c = idx % n;
    idx /= n;
  }
  return j;
}

inline std::size_t flatten(std::vector<std::size_t> const& j, std::size_t n) {
  std::size_t idx = 0;
  for (auto it = j.rbegin(); it != j.rend(); ++it) idx = idx * n + *it;
  return idx;
}

}  // namespace detail

inline WaveFunction heis_apply(HeisOperatorParams const& h, WaveFunction const& psi) {
  auto const& gr = psi.grid;
  auto g = static_cast<std::size_t>(gr.g);
  if (h.p.size() != g || h.q.size() != g) throw GenusMismatch(gr.g, static_cast<int>(h.p.size()));
  Int r = gr.hbar_index, P = gr.P, N = gr.N;
  auto n = static_cast<std::size_t>(N);
  Int pq = 0;
  for (std::size_t a = 0; a < g; ++a) pq = checked_add(pq, checked_mul(h.p[a], h.q[a]));
  // exp(i hbar (k - pq)/2) = exp(2 pi i r (k - pq) / (2P)).
  Complex central = detail::root_of_unity(checked_mul(r, checked_sub(h.k, pq)), 2 * P);
  Int shift_unit = N / P;
  WaveFunction out(gr);
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    auto j = detail::unflatten(idx, gr.g, n);
    std::vector<std::size_t> src(g);
    Int mod = 0;
    for (std::size_t a = 0; a < g; ++a) {
      auto ja = static_cast<Int>(j[a]);
      src[a] = static_cast<std::size_t>(detail::floor_mod(ja - checked_mul(h.q[a], shift_unit), N));
      // hbar p s = 2 pi r p j / N.
      mod = detail::floor_mod(mod + detail::floor_mod(checked_mul(r, h.p[a]), N) * ja, N);
    }
    out.values[idx] = central * detail::root_of_unity(mod, N) * psi.values[detail::flatten(src, n)];
  }
  return out;
}

namespace detail {

// Unitary DFT along every axis; sign -1 is the forward transform.
inline WaveFunction dft(WaveFunction const& psi, int sign) {
  auto const& gr = psi.grid;
  auto n = static_cast<std::size_t>(gr.N);
  std::vector<Complex> tw(n);
  for (std::size_t m = 0; m < n; ++m) tw[m] = root_of_unity(sign * static_cast<Int>(m), gr.N);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> cur = psi.values, next(cur.size());
  std::size_t stride = 1;
  for (int axis = 0; axis < gr.g; ++axis) {
    for (std::size_t base = 0; base < cur.size(); ++base) {
      if ((base / stride) % n != 0) continue;
      for (std::size_t f = 0; f < n; ++f) {
        Complex s = 0;
        for (std::size_t j = 0; j < n; ++j) s += tw[(j * f) % n] * cur[base + j * stride];
        next[base + f * stride] = s * scale;
      }
    }
    std::swap(cur, next);
    stride *= n;
  }
  return {gr, std::move(cur)};
}

}  // namespace detail

// F psi[n] = N^{-1/2} sum_j exp(-2 pi i j n / N) psi[j], per axis.
inline WaveFunction fourier(WaveFunction const& psi) { return detail::dft(psi, -1); }
inline WaveFunction inverse_fourier(WaveFunction const& psi) { return detail::dft(psi, +1); }

// psi(s) |-> psi(-s).
inline WaveFunction parity(WaveFunction const& psi) {
  auto const& gr = psi.grid;
  auto n = static_cast<std::size_t>(gr.N);
  WaveFunction out(gr);
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    auto j = detail::unflatten(idx, gr.g, n);
    for (auto& c : j) c = (n - c) % n;
    out.values[idx] = psi.values[detail::flatten(j, n)];
  }
  return out;
}

// True iff exp(i hbar m s^2 / 2) is P-periodic on the grid, i.e. r m P / N
// and r m P / 2 are integers.
inline bool shear_is_grid_exact(PeriodizedGrid const& gr, Int m) {
  Int rm = checked_mul(gr.hbar_index, m);
  return checked_mul(rm, gr.P) % gr.N == 0 && checked_mul(rm, gr.P) % 2 == 0;
}

// Multiplication by exp(i hbar m |s|^2 / 2); intertwines (p, q) |-> (p + m q, q).
inline WaveFunction shear(WaveFunction const& psi, Int m) {
  auto const& gr = psi.grid;
  if (!shear_is_grid_exact(gr, m))
    throw Error("shear by " + std::to_string(m) + " is not periodic on the grid (N=" + std::to_string(gr.N) +
                ", P=" + std::to_string(gr.P) + ")");
  auto n = static_cast<std::size_t>(gr.N);
  Int N = gr.N;
  // hbar m s^2 / 2 = 2 pi (r m P j^2) / (2 N^2).
  Int denom = checked_mul(2 * N, N);
  WaveFunction out(gr);
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    auto j = detail::unflatten(idx, gr.g, n);
    Int num = 0;
    for (auto c : j) {
      auto jj = static_cast<Int>(c);
      num = detail::floor_mod(num + detail::floor_mod(checked_mul(gr.hbar_index, m) * gr.P, denom) * detail::floor_mod(jj * jj, denom), denom);
    }
    out.values[idx] = detail::root_of_unity(num, denom) * psi.values[idx];
  }
  return out;
}

using Operator = std::function<WaveFunction(WaveFunction const&)>;

struct IntertwineSample {
  HeisOperatorParams h;
  WaveFunction psi;
};

// max over samples of |U Pi(h) psi - Pi(a(h)) U psi| / |psi|.
inline double intertwine_residual(Operator const& U, HeisAut const& a, std::vector<IntertwineSample> const& samples) {
  if (!a.diamond().is_zero()) throw Error("intertwine_residual needs a purely symplectic automorphism (d = 0)");
  double worst = 0;
  for (auto const& s : samples) {
    if (s.psi.grid.g != a.genus()) throw GenusMismatch(a.genus(), s.psi.grid.g);
    HeisOperatorParams ah = HeisOperatorParams::from_element(aut_apply(a, s.h.to_element()));
    WaveFunction lhs = U(heis_apply(s.h, s.psi));
    WaveFunction rhs = heis_apply(ah, U(s.psi));
    worst = std::max(worst, distance(lhs, rhs) / s.psi.norm());
  }
  return worst;
}

// The rotation (p, q) |-> (-q, p) on every axis.
inline HeisAut rotation_aut(int g) {
  auto n = static_cast<std::size_t>(2 * g);
  std::vector<Int> m(n * n, 0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) {
    m[i * n + (i + static_cast<std::size_t>(g))] = -1;
    m[(i + static_cast<std::size_t>(g)) * n + i] = 1;
  }
  return HeisAut::from_symplectic(SymplecticMatrix(g, IntMatrix(n, std::move(m))));
}

// (p, q) |-> (p + m q, q).
inline HeisAut shear_aut(int g, Int m) {
  auto n = static_cast<std::size_t>(2 * g);
  std::vector<Int> e = IntMatrix::identity(n).entries();
  for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) e[i * n + (i + static_cast<std::size_t>(g))] = m;
  return HeisAut::from_symplectic(SymplecticMatrix(g, IntMatrix(n, std::move(e))));
}

// (p, q) |-> (-p, -q).
inline HeisAut parity_aut(int g) {
  auto n = static_cast<std::size_t>(2 * g);
  std::vector<Int> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = -1;
  return HeisAut::from_symplectic(SymplecticMatrix(g, IntMatrix(n, std::move(e))));
}

// A periodized Gaussian with random center, width and momentum.
inline WaveFunction random_gaussian_state(PeriodizedGrid const& gr, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto n = static_cast<std::size_t>(gr.N);
  std::vector<double> c(static_cast<std::size_t>(gr.g)), w(c.size()), k(c.size());
  for (std::size_t a = 0; a < c.size(); ++a) {
    c[a] = u(rng) * gr.P;
    w[a] = (0.05 + 0.15 * u(rng)) * gr.P;
    k[a] = (u(rng) - 0.5) * 4;
  }
  WaveFunction psi(gr);
  for (std::size_t idx = 0; idx < psi.values.size(); ++idx) {
    auto j = detail::unflatten(idx, gr.g, n);
    Complex v = 1;
    for (std::size_t a = 0; a < c.size(); ++a) {
      double s = static_cast<double>(j[a]) * gr.spacing();
      double d = std::remainder(s - c[a], static_cast<double>(gr.P));
      v *= std::exp(-d * d / (2 * w[a] * w[a])) * std::polar(1.0, k[a] * d);
    }
    psi.values[idx] = v;
  }
  return psi;
}

inline WaveFunction random_state(PeriodizedGrid const& gr, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  WaveFunction psi(gr);
  for (auto& v : psi.values) v = {nd(rng), nd(rng)};
  return psi;
}

inline HeisOperatorParams random_params(int g, Int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  HeisOperatorParams h{d(rng), {}, {}};
  for (int a = 0; a < g; ++a) {
    h.p.push_back(d(rng));
    h.q.push_back(d(rng));
  }
  return h;
}

struct ScalarDefect {
  Complex lambda;
  double spread = 0;    // max |lambda_i - lambda| over the validation states
  double residual = 0;  // worst intertwining residual of U1 U2 and U12
};

// lambda with U1 U2 = lambda U12, after checking that both sides intertwine
// a12 to 1e-9.
inline ScalarDefect scalar_defect(Operator const& U1, Operator const& U2, Operator const& U12, HeisAut const& a12,
                                  std::vector<IntertwineSample> const& samples, std::vector<WaveFunction> const& states) {
  if (states.size() < 2) throw Error("scalar_defect needs a generic state and validation states");
  Operator U1U2 = [&](WaveFunction const& w) { return U1(U2(w)); };
  double res = std::max(intertwine_residual(U1U2, a12, samples), intertwine_residual(U12, a12, samples));
  if (res > 1e-9) throw Error("scalar_defect precondition failed: intertwining residual " + std::to_string(res));
  auto ratio = [&](WaveFunction const& psi) {
    WaveFunction b = U12(psi);
    return inner(b, U1U2(psi)) / inner(b, b);
  };
  ScalarDefect d{ratio(states.front()), 0, res};
  for (std::size_t i = 1; i < states.size(); ++i) d.spread = std::max(d.spread, std::abs(ratio(states[i]) - d.lambda));
  if (d.spread > 1e-8) throw Error("inconsistent scalar across states: spread " + std::to_string(d.spread));
  return d;
}

}  // namespace heis
