#pragma once

// Turning numbers of closed planar polylines against the constant upward
// field, signed tangency counting, and the Chillingworth pairing.

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "heisenberg.hpp"

namespace heis {

struct Point {
  double x = 0, y = 0;
  friend bool operator==(Point const&, Point const&) = default;
};

// Turns within this margin of +-pi are treated as cusps.
inline constexpr double kGenericityMargin = 1e-9;

class Polyline {
 public:
  // Closed implicitly: the last vertex connects to the first.
  explicit Polyline(std::vector<Point> v) : v_(std::move(v)) {
    if (v_.size() < 3) throw Error("polyline needs at least 3 vertices");
    for (std::size_t i = 0; i < v_.size(); ++i) {
      Point d = edge(i);
      if (d.x == 0 && d.y == 0) throw Error("zero-length edge at vertex " + std::to_string(i));
    }
    for (std::size_t i = 0; i < v_.size(); ++i) {
      Point a = edge(i), b = edge((i + 1) % v_.size());
      double cross = a.x * b.y - a.y * b.x, dot = a.x * b.x + a.y * b.y;
      if ((cross == 0 && dot < 0) || std::abs(std::atan2(cross, dot)) > std::numbers::pi - kGenericityMargin)
        throw Error("degenerate polyline: edge reversal at vertex " + std::to_string((i + 1) % v_.size()));
    }
  }

  std::vector<Point> const& vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }

  // Direction of the edge leaving vertex i.
  Point edge(std::size_t i) const {
    Point const& a = v_[i];
    Point const& b = v_[(i + 1) % v_.size()];
    return {b.x - a.x, b.y - a.y};
  }

  Polyline reversed() const { return Polyline({v_.rbegin(), v_.rend()}); }

  Polyline rotated(std::size_t k) const {
    std::vector<Point> r;
    for (std::size_t i = 0; i < v_.size(); ++i) r.push_back(v_[(i + k) % v_.size()]);
    return Polyline(std::move(r));
  }

  // Inserts the midpoint of every edge.
  Polyline subdivided() const {
    std::vector<Point> r;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      Point d = edge(i);
      r.push_back(v_[i]);
      r.push_back({v_[i].x + d.x / 2, v_[i].y + d.y / 2});
    }
    return Polyline(std::move(r));
  }

 private:
  std::vector<Point> v_;
};

// Sum of exterior angles over 2 pi.
inline int turning_number(Polyline const& c) {
  double total = 0;
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point a = c.edge(i), b = c.edge((i + 1) % n);
    total += std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
  }
  double turns = total / (2 * std::numbers::pi);
  double r = std::round(turns);
  if (std::abs(turns - r) > 1e-6) throw Error("exterior angle sum is not a multiple of 2 pi");
  return static_cast<int>(r);
}

// Signs of the points where the tangent direction passes through +y: +1 when
// it turns counterclockwise through +y, -1 when clockwise.
inline std::vector<int> upward_tangencies(Polyline const& c) {
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point d = c.edge(i);
    if (d.x == 0 && d.y > 0)
      throw Error("edge " + std::to_string(i) + " points exactly upward; perturb the input");
  }
  std::vector<int> ev;
  for (std::size_t i = 0; i < n; ++i) {
    Point a = c.edge(i), b = c.edge((i + 1) % n);
    double cross = a.x * b.y - a.y * b.x;
    if (cross > 0 && a.x > 0 && b.x < 0) ev.push_back(+1);
    if (cross < 0 && a.x < 0 && b.x > 0) ev.push_back(-1);
  }
  return ev;
}

inline int event_sum(std::vector<int> const& ev) {
  int s = 0;
  for (int e : ev) {
    if (e != 1 && e != -1) throw Error("tangency events must be +1 or -1");
    s += e;
  }
  return s;
}

inline int upward_tangency_count(Polyline const& c) { return event_sum(upward_tangencies(c)); }

// e(f)([gamma]) = omega(f o gamma) - omega(gamma).
inline int chillingworth_pairing(int before, int after) { return after - before; }

// Events of gamma . c . gamma^{-1}: traversing gamma backwards flips every
// tangency sign.
inline std::vector<int> conjugated_events(std::vector<int> const& gamma, std::vector<int> const& c) {
  std::vector<int> r = gamma;
  r.insert(r.end(), c.begin(), c.end());
  for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) r.push_back(-*it);
  return r;
}

// Tangency fixtures in the surface model where X points upward.
namespace fixtures {

inline std::vector<int> alpha_events() { return {-1}; }
inline std::vector<int> beta_events() { return {+1}; }
// The image of alpha_1 under the bounding pair map: two positive tangencies
// and one negative (the left-most).
inline std::vector<int> bp_alpha1_events() { return {+1, +1, -1}; }

// A planar polyline with the tangency pattern of the bounding pair image of
// alpha_1.
inline Polyline bp_alpha1_polyline() {
  return Polyline({{0, 0}, {4, 0}, {5, 2}, {4, 4}, {5, 6}, {4, 8}, {0, 8}});
}

}  // namespace fixtures

// e(BP) on the basis a_1..a_g, b_1..b_g, read off the fixtures.  Every basis
// curve other than alpha_1 is sent to a conjugate of itself by the loop
// whose events are `gamma`.
inline CohomologyClass chillingworth_bp_from_fixtures(int genus, std::vector<int> const& gamma) {
  std::vector<Int> e(static_cast<std::size_t>(2 * genus), 0);
  for (int j = 0; j < 2 * genus; ++j) {
    bool alpha = j < genus;
    auto before = alpha ? fixtures::alpha_events() : fixtures::beta_events();
    auto after = j == 0 ? fixtures::bp_alpha1_events() : conjugated_events(gamma, before);
    e[static_cast<std::size_t>(j)] = chillingworth_pairing(event_sum(before), event_sum(after));
  }
  return {genus, std::move(e)};
}

// A random closed polyline with vertices in [-1,1]^2 that passes the
// genericity checks of both turning_number and upward_tangencies.
inline Polyline random_generic_polyline(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<Point> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back({u(rng), u(rng)});
    try {
      Polyline p(std::move(v));
      upward_tangencies(p);
      return p;
    } catch (Error const&) {
    }
  }
}

// One "x y" pair per line; '#' starts a comment line.
inline Polyline parse_polyline(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Point> v;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Point p;
    std::string extra;
    if (!(ls >> p.x >> p.y) || (ls >> extra)) throw ParseError("line " + std::to_string(lineno) + ": expected 'x y'", first);
    v.push_back(p);
  }
  return Polyline(std::move(v));
}

// Whitespace separated '+' / '-' tokens.
inline std::vector<int> parse_events(std::string_view text) {
  std::vector<int> ev;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '+') {
      ev.push_back(1);
    } else if (c == '-') {
      ev.push_back(-1);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in event list", i);
    }
  }
  return ev;
}

inline std::string format_events(std::vector<int> const& ev) {
  std::string s;
  for (int e : ev) {
    if (!s.empty()) s += ' ';
    s += e > 0 ? '+' : '-';
  }
  return s;
}

}  // namespace heis
