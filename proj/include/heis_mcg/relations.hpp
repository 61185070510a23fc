#pragma once

// Exhaustive check that every defining relation of B_n(Sigma_{g,1}) maps to
// an identity in the Heisenberg group under phi.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"

namespace heis {

struct RelationInstance {
  std::string family;  // BR1, BR2, CR1, CR2, CR3, SCR
  BraidWord lhs;
  BraidWord rhs;
};

struct RelationFailure {
  RelationInstance instance;
  HeisenbergElement lhs_value;
  HeisenbergElement rhs_value;
};

struct RelationReport {
  int genus = 0;
  int strands = 0;
  std::map<std::string, int> instances_checked;
  std::optional<RelationFailure> first_failure;

  bool all_hold() const noexcept { return !first_failure.has_value(); }
  int total() const {
    int t = 0;
    for (auto const& [_, n] : instances_checked) t += n;
    return t;
  }
};

namespace detail {

inline BraidLetter sig(int i) { return {LetterKind::sigma, i, 1}; }

inline BraidWord commutator_word(int g, int n, std::vector<BraidLetter> const& x,
                                 std::vector<BraidLetter> const& y) {
  BraidWord wx(g, n, x), wy(g, n, y);
  return wx * wy * wx.inverse() * wy.inverse();
}

}  // namespace detail

inline std::vector<RelationInstance> relation_instances(int genus, int strands) {
  using detail::sig;
  int g = genus, n = strands;
  BraidWord one(g, n);
  std::vector<RelationInstance> out;

  std::vector<BraidLetter> surface;  // alpha_1..alpha_g, beta_1..beta_g
  for (int r = 1; r <= g; ++r) surface.push_back({LetterKind::alpha, r, 1});
  for (int r = 1; r <= g; ++r) surface.push_back({LetterKind::beta, r, 1});

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      out.push_back({"BR1", detail::commutator_word(g, n, {sig(i)}, {sig(j)}), one});

  for (int i = 1; i + 1 < n; ++i) {
    int j = i + 1;
    out.push_back({"BR2", BraidWord(g, n, {sig(i), sig(j), sig(i)}), BraidWord(g, n, {sig(j), sig(i), sig(j)})});
  }

  for (auto const& z : surface)
    for (int i = 2; i < n; ++i)
      out.push_back({"CR1", detail::commutator_word(g, n, {z}, {sig(i)}), one});

  for (auto const& z : surface)
    out.push_back({"CR2", detail::commutator_word(g, n, {z}, {sig(1), z, sig(1)}), one});

  // Ordered pairs zeta != eta; the excluded set {alpha_r, beta_r} is
  // unordered, so both orders of a same-handle pair are skipped.
  for (auto const& z : surface) {
    for (auto const& e : surface) {
      if (z == e) continue;
      if (z.index == e.index && z.kind != e.kind) continue;
      BraidLetter s1inv{LetterKind::sigma, 1, -1};
      out.push_back({"CR3", detail::commutator_word(g, n, {z}, {s1inv, e, sig(1)}), one});
    }
  }

  for (int r = 1; r <= g; ++r) {
    BraidLetter a{LetterKind::alpha, r, 1}, b{LetterKind::beta, r, 1};
    out.push_back({"SCR", BraidWord(g, n, {sig(1), b, sig(1), a, sig(1)}), BraidWord(g, n, {a, sig(1), b})});
  }
  return out;
}

inline RelationReport check_relations(int genus, int strands, FormSign sign = FormSign::standard) {
  RelationReport rep;
  rep.genus = genus;
  rep.strands = strands;
  for (char const* fam : {"BR1", "BR2", "CR1", "CR2", "CR3", "SCR"}) rep.instances_checked[fam] = 0;
  for (auto& inst : relation_instances(genus, strands)) {
    ++rep.instances_checked[inst.family];
    HeisenbergElement l = phi(inst.lhs, sign);
    HeisenbergElement r = phi(inst.rhs, sign);
    if (!(l == r) && !rep.first_failure) rep.first_failure = RelationFailure{inst, l, r};
  }
  return rep;
}

}  // namespace heis
