#pragma once

// Named mapping classes and words in them.
//
// Catalog file format, one block per entry:
//   name: NAME
//   alpha_1 -> WORD      (2g forward images, any order)
//   ...
//   beta_g -> WORD
//   alpha_1 -> WORD      (2g inverse images)
//   ...
// Blank lines and lines starting with '#' are ignored.

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "free_group.hpp"
#include "mapping_class.hpp"

namespace heis {

namespace detail {

inline std::vector<FreeWord> parse_images(int genus, std::vector<std::string> const& words) {
  std::vector<FreeWord> r;
  for (auto const& w : words) r.push_back(parse_free_word(w, genus));
  return r;
}

// Identity on every generator except those listed.
inline std::vector<FreeWord> identity_images(int genus) {
  std::vector<FreeWord> r;
  for (int j = 0; j < 2 * genus; ++j) r.push_back(FreeWord::generator(genus, j));
  return r;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

// Dehn twist about alpha_i: beta_i -> beta_i alpha_i.  Acts on H as the
// transvection along a_i.
inline MappingClass twist_alpha(int genus, int i) {
  auto fwd = detail::identity_images(genus), inv = fwd;
  FreeWord a = FreeWord::alpha(genus, i), b = FreeWord::beta(genus, i);
  fwd[static_cast<std::size_t>(genus + i - 1)] = b * a;
  inv[static_cast<std::size_t>(genus + i - 1)] = b * a.inverse();
  return {genus, fwd, inv, "Ta" + std::to_string(i)};
}

// Dehn twist about beta_i: alpha_i -> alpha_i beta_i^{-1}.  Transvection
// along b_i.
inline MappingClass twist_beta(int genus, int i) {
  auto fwd = detail::identity_images(genus), inv = fwd;
  FreeWord a = FreeWord::alpha(genus, i), b = FreeWord::beta(genus, i);
  fwd[static_cast<std::size_t>(i - 1)] = a * b.inverse();
  inv[static_cast<std::size_t>(i - 1)] = a * b;
  return {genus, fwd, inv, "Tb" + std::to_string(i)};
}

// Twist about the separating curve cutting off handle i, realized as
// conjugation of alpha_i, beta_i by [alpha_i, beta_i].  Lies in the
// Chillingworth subgroup.
inline MappingClass twist_separating(int genus, int i) {
  auto fwd = detail::identity_images(genus), inv = fwd;
  FreeWord a = FreeWord::alpha(genus, i), b = FreeWord::beta(genus, i);
  FreeWord k = commutator(a, b);
  auto ai = static_cast<std::size_t>(i - 1), bi = static_cast<std::size_t>(genus + i - 1);
  fwd[ai] = k * a * k.inverse();
  fwd[bi] = k * b * k.inverse();
  inv[ai] = k.inverse() * a * k;
  inv[bi] = k.inverse() * b * k;
  return {genus, fwd, inv, "Tsep" + std::to_string(i)};
}

// The bounding pair map on handles 1 and 2, extended by the identity on the
// remaining handles.  On H it is trivial; on the Heisenberg group it sends
// a~_1 to u^2 a~_1 and fixes the other generators.
inline MappingClass bounding_pair(int genus) {
  if (genus < 2) throw Error("BP needs genus at least 2");
  std::vector<std::string> fwd = {
      "a1 b1 a1' b1' a2 b2 a2' b2' b1 a1 b1'",
      "b1 a1 b1 a1' b1' a2 b1 a1 b1' a1' b1'",
      "b1",
      "b1 a1 b1 a1' b1' b2 b1 a1 b1' a1' b1'",
  };
  std::vector<std::string> inv = {
      "b1' b2 a2 b2' a2' b1 a1",
      "b2 a2 b2' a2' b1 a1 b1' a1' b1' a2 b2 a2' b2' a2 b2 a2 b2' a2' b1 a1 b1 a1' b1' a2 b2 a2' b2'",
      "b1",
      "b2 a2 b2' a2' b1 a1 b1' a1' b1' a2 b2 a2' b2 a2 b2' a2' b1 a1 b1 a1' b1' a2 b2 a2' b2'",
  };
  MappingClass bp(2, detail::parse_images(2, fwd), detail::parse_images(2, inv), "BP");
  return genus == 2 ? bp : stabilize(bp, genus);
}

class Catalog {
 public:
  explicit Catalog(int genus) : genus_(genus) { detail::require_genus(genus); }

  // id, BP (genus >= 2), Ta_i, Tb_i, Tsep_i.
  static Catalog builtin(int genus) {
    Catalog c(genus);
    c.add(MappingClass::identity(genus, "id"));
    if (genus >= 2) c.add(bounding_pair(genus));
    for (int i = 1; i <= genus; ++i) {
      c.add(twist_alpha(genus, i));
      c.add(twist_beta(genus, i));
      c.add(twist_separating(genus, i));
    }
    return c;
  }

  int genus() const noexcept { return genus_; }

  void add(MappingClass f) {
    require_same_genus(genus_, f.genus());
    if (f.name().empty()) throw Error("catalog entries need a name");
    if (index_.count(f.name())) throw Error("duplicate catalog entry '" + f.name() + "'");
    index_[f.name()] = entries_.size();
    entries_.push_back(std::move(f));
  }

  bool contains(std::string const& name) const { return index_.count(name) != 0; }

  MappingClass const& get(std::string const& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown mapping class '" + name + "'");
    return entries_[it->second];
  }

  std::vector<MappingClass> const& entries() const noexcept { return entries_; }

  // Names usable as random-word letters (everything except id).
  std::vector<std::string> generator_names() const {
    std::vector<std::string> r;
    for (auto const& e : entries_)
      if (e.name() != "id") r.push_back(e.name());
    return r;
  }

 private:
  int genus_;
  std::vector<MappingClass> entries_;
  std::map<std::string, std::size_t> index_;
};

// "N1 N2' N3" = N1 o N2^{-1} o N3.  The empty word is the identity.
inline MappingClass parse_class_word(std::string_view text, Catalog const& cat) {
  std::istringstream in{std::string(text)};
  std::string tok;
  MappingClass acc = MappingClass::identity(cat.genus(), "");
  std::vector<std::string> names;
  while (in >> tok) {
    bool inv = tok.back() == '\'';
    std::string base = inv ? tok.substr(0, tok.size() - 1) : tok;
    MappingClass f = cat.get(base);
    acc = mcg_compose(acc, inv ? mcg_inverse(f) : f);
    names.push_back(tok);
  }
  std::string name;
  for (auto const& n : names) name += (name.empty() ? "" : " ") + n;
  return acc.with_name(name.empty() ? "id" : name);
}

// A uniformly random word of the given length in catalog generators and
// their inverses, rendered in the syntax accepted by parse_class_word.
inline std::string random_class_word(Catalog const& cat, std::size_t length, std::mt19937_64& rng) {
  auto names = cat.generator_names();
  if (names.empty()) throw Error("catalog has no generators");
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::bernoulli_distribution flip(0.5);
  std::string w;
  if (length == 0) return w;
  for (std::size_t i = 0; i < length; ++i) {
    if (!w.empty()) w += ' ';
    w += names[pick(rng)];
    if (flip(rng)) w += '\'';
  }
  return w;
}

// A Torelli element: a product of one or two conjugates w' BP^(+-1) w with
// w a random catalog word of length at most 3.
inline std::string random_torelli_word(Catalog const& cat, std::mt19937_64& rng) {
  if (!cat.contains("BP")) throw Error("random Torelli words need BP in the catalog");
  std::uniform_int_distribution<std::size_t> len(0, 3);
  std::bernoulli_distribution coin(0.5);
  auto conjugate = [&] {
    std::string w = random_class_word(cat, len(rng), rng);
    std::string s = coin(rng) ? "BP" : "BP'";
    return w.empty() ? s : inverse_name(w) + " " + s + " " + w;
  };
  std::string r = conjugate();
  if (coin(rng)) r += " " + conjugate();
  return r;
}

inline std::string format_catalog_entry(MappingClass const& f) {
  int g = f.genus();
  auto label = [g](int j) {
    return j < g ? "alpha_" + std::to_string(j + 1) : "beta_" + std::to_string(j - g + 1);
  };
  std::string s = "name: " + f.name() + "\n";
  for (auto const* imgs : {&f.forward_images(), &f.inverse_images()})
    for (int j = 0; j < 2 * g; ++j) s += label(j) + " -> " + render((*imgs)[static_cast<std::size_t>(j)]) + "\n";
  return s;
}

namespace detail {

struct PendingEntry {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> images;
  std::vector<std::pair<std::string, std::size_t>> labels;
};

// Label "alpha_i" / "beta_i" to (kind, index).
inline std::pair<char, int> parse_label(std::string const& lbl, std::size_t line) {
  char kind = 0;
  std::string rest;
  if (lbl.rfind("alpha_", 0) == 0) {
    kind = 'a';
    rest = lbl.substr(6);
  } else if (lbl.rfind("beta_", 0) == 0) {
    kind = 'b';
    rest = lbl.substr(5);
  }
  if (!kind || rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("line " + std::to_string(line) + ": expected alpha_i or beta_i, got '" + lbl + "'", 0);
  return {kind, std::stoi(rest)};
}

inline MappingClass build_entry(PendingEntry const& e) {
  std::size_t count = e.labels.size();
  if (count == 0 || count % 4 != 0)
    throw ParseError("entry '" + e.name + "' (line " + std::to_string(e.line) + "): expected 4g image lines, got " + std::to_string(count), 0);
  int g = static_cast<int>(count / 4);
  std::vector<FreeWord> fwd(static_cast<std::size_t>(2 * g), FreeWord(g)), inv = fwd;
  for (int half = 0; half < 2; ++half) {
    std::vector<bool> seen(static_cast<std::size_t>(2 * g), false);
    for (int k = 0; k < 2 * g; ++k) {
      auto const& [lbl, line] = e.labels[static_cast<std::size_t>(half * 2 * g + k)];
      auto [kind, idx] = parse_label(lbl, line);
      if (idx < 1 || idx > g) throw IndexOutOfRange("line " + std::to_string(line) + ": index out of range for genus " + std::to_string(g));
      auto slot = static_cast<std::size_t>(kind == 'a' ? idx - 1 : g + idx - 1);
      if (seen[slot]) throw ParseError("line " + std::to_string(line) + ": duplicate image for " + lbl, 0);
      seen[slot] = true;
      FreeWord w = parse_free_word(e.images[static_cast<std::size_t>(half * 2 * g + k)], g);
      (half == 0 ? fwd : inv)[slot] = w;
    }
  }
  return {g, fwd, inv, e.name};
}

}  // namespace detail

// Parses a catalog file.  All entries must share one genus.
inline std::vector<MappingClass> parse_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::vector<detail::PendingEntry> pending;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      std::string name = detail::trim(std::string_view(line).substr(5));
      if (name.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty name", 5);
      pending.push_back({name, lineno, {}, {}});
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'LABEL -> WORD'", 0);
    if (pending.empty()) throw ParseError("line " + std::to_string(lineno) + ": image line before any 'name:'", 0);
    std::string lbl = detail::trim(std::string_view(line).substr(0, arrow));
    std::string word = detail::trim(std::string_view(line).substr(arrow + 2));
    pending.back().labels.push_back({lbl, lineno});
    pending.back().images.push_back(word);
  }
  std::vector<MappingClass> out;
  for (auto const& e : pending) {
    out.push_back(detail::build_entry(e));
    require_same_genus(out.front().genus(), out.back().genus());
  }
  return out;
}

}  // namespace heis
