#pragma once

// The six-chamber Deligne groupoid of the double bubble: chambers sit on the
// hexagon L, L1, L12, L121, L21, L2 with walls alternating 1,2; morphisms are
// words of signed wall crossings. Words are realized in B_3 (a crossing of
// wall i contributes sigma_i^sign), which solves the word problem through the
// Artin representation, and in 2x2 matrices via the reflection functors r_i,
// which only remember the wall (r_i^2 = 1).

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flipkit/braid.hpp"
#include "flipkit/errors.hpp"
#include "flipkit/intmat.hpp"

namespace flipkit::wall {

enum class Chamber { L = 0, L1, L12, L121, L21, L2 };

inline constexpr Chamber kBaseChamber = Chamber::L;  // C_+

inline const std::array<std::string, 6>& chamber_names() {
  static const std::array<std::string, 6> names = {"L", "L1", "L12", "L121", "L21", "L2"};
  return names;
}

inline std::string chamber_name(Chamber c) { return chamber_names()[static_cast<int>(c)]; }

inline Chamber parse_chamber(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (chamber_names()[i] == s) return static_cast<Chamber>(i);
  throw argument_error("parse_chamber: unknown chamber '" + s + "'");
}

// Neighbor across wall 1 / wall 2; the hexagon is the Cayley graph of S_3
// with chambers as minimal galleries from C_+.
inline Chamber cross_wall(Chamber c, int wall) {
  static const int across1[6] = {1, 0, 3, 2, 5, 4};  // L<->L1, L12<->L121, L21<->L2
  static const int across2[6] = {5, 2, 1, 4, 3, 0};  // L<->L2, L1<->L12, L121<->L21
  int i = static_cast<int>(c);
  if (wall == 1) return static_cast<Chamber>(across1[i]);
  if (wall == 2) return static_cast<Chamber>(across2[i]);
  throw argument_error("cross_wall: wall must be 1 or 2");
}

struct GroupoidMorphism {
  Chamber source = kBaseChamber;
  // letters applied in order from the source; +i crosses wall i with the
  // positive functor, -i with its inverse (both move to the same neighbor)
  std::vector<int> word;
};

inline GroupoidMorphism identity_morphism(Chamber c) { return {c, {}}; }

inline GroupoidMorphism make_morphism(Chamber source, std::vector<int> word) {
  for (int l : word) {
    int w = l > 0 ? l : -l;
    if (w != 1 && w != 2) throw argument_error("morphism: letters cross wall 1 or 2");
  }
  return {source, std::move(word)};
}

inline Chamber target(const GroupoidMorphism& f) {
  Chamber c = f.source;
  for (int l : f.word) c = cross_wall(c, l > 0 ? l : -l);
  return c;
}

// compose(f, g): g first, then f.
inline GroupoidMorphism compose(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  if (target(g) != f.source) throw argument_error("compose: target(g) != source(f)");
  GroupoidMorphism out;
  out.source = g.source;
  out.word = g.word;
  out.word.insert(out.word.end(), f.word.begin(), f.word.end());
  return out;
}

inline GroupoidMorphism invert(const GroupoidMorphism& f) {
  GroupoidMorphism out;
  out.source = target(f);
  for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) out.word.push_back(-*it);
  return out;
}

// Braid realization in B_3. The morphism applies its word first-to-last, so
// the braid word lists the letters last-to-first (braid concatenation acts
// right to left); realization(compose(f,g)) == concat(realization(f),
// realization(g)).
inline braid::BraidWord realization(const GroupoidMorphism& f) {
  std::vector<int> letters;
  letters.reserve(f.word.size());
  for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) letters.push_back(*it);
  return braid::make_braid(3, std::move(letters));
}

inline bool morphism_eq(const GroupoidMorphism& f, const GroupoidMorphism& g) {
  if (f.source != g.source || target(f) != target(g))
    throw argument_error("morphism_eq: source/target mismatch");
  return braid::braid_eq(realization(f), realization(g));
}

// ---------------------------------------------------------------------------
// K-theory shadow

// Reflections from the double-bubble Ext data (arrow count m_ij = 1):
// e_i -> -e_i, e_j -> e_j + e_i.
inline IntMat reflection_matrix(int wall) {
  if (wall == 1) return IntMat{{-1, 1}, {0, 1}};
  if (wall == 2) return IntMat{{1, 0}, {1, -1}};
  throw argument_error("reflection_matrix: wall must be 1 or 2");
}

// Inverse crossings contribute the same reflection (r_i^2 = 1).
inline IntMat k_matrix(const GroupoidMorphism& f) {
  IntMat k = IntMat::identity(2);
  for (int l : f.word) k = reflection_matrix(l > 0 ? l : -l) * k;
  return k;
}

inline std::vector<IntMat> six_composites() {
  IntMat r1 = reflection_matrix(1), r2 = reflection_matrix(2);
  return {IntMat::identity(2), r1, r2, r1 * r2, r2 * r1, r1 * r2 * r1};
}

inline bool only_identity_is_permutation() {
  auto six = six_composites();
  int permutations = 0;
  bool identity_is = false;
  for (const auto& m : six)
    if (m.is_permutation()) {
      ++permutations;
      if (m == IntMat::identity(2)) identity_is = true;
    }
  return permutations == 1 && identity_is;
}

// Every word in the r_i lands in the six-element set.
inline bool k_matrices_within_six(int max_length) {
  auto six = six_composites();
  std::set<IntMat> allowed(six.begin(), six.end());
  std::vector<IntMat> layer{IntMat::identity(2)};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<IntMat> next;
    for (const auto& m : layer)
      for (int wall : {1, 2}) {
        IntMat prod = reflection_matrix(wall) * m;
        if (!allowed.count(prod)) return false;
        next.push_back(prod);
      }
    layer = std::move(next);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Loops and enumeration

inline bool is_pure_loop(const GroupoidMorphism& f) {
  if (target(f) != f.source) throw argument_error("is_pure_loop: morphism is not a loop");
  return braid::is_pure(realization(f));
}

struct BaseEnumeration {
  long long total = 0;
  std::map<std::string, long long> per_source;  // chamber name -> count
};

// Distinct morphisms (by source and braid normal form) ending at C_+ with
// word length <= max_length.
inline BaseEnumeration enumerate_to_base(int max_length) {
  if (max_length < 0) throw argument_error("enumerate_to_base: negative length");
  BaseEnumeration out;
  std::set<std::pair<int, std::vector<braid::FreeWord>>> seen;
  GroupoidMorphism cur;
  auto visit = [&](const GroupoidMorphism& f) {
    if (target(f) != kBaseChamber) return;
    auto key = std::pair{static_cast<int>(f.source), braid::artin_images(realization(f))};
    if (seen.insert(std::move(key)).second) {
      ++out.total;
      ++out.per_source[chamber_name(f.source)];
    }
  };
  for (int s = 0; s < 6; ++s) {
    cur.source = static_cast<Chamber>(s);
    cur.word.clear();
    auto rec = [&](auto&& self, int remaining) -> void {
      visit(cur);
      if (remaining == 0) return;
      for (int l : {1, -1, 2, -2}) {
        cur.word.push_back(l);
        self(self, remaining - 1);
        cur.word.pop_back();
      }
    };
    rec(rec, max_length);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing: "L121: F1 F2 f1" (capital = positive crossing, lowercase inverse)

inline GroupoidMorphism parse_morphism(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw argument_error("parse_morphism: missing 'chamber:' prefix");
  std::string src = text.substr(0, colon);
  src.erase(std::remove_if(src.begin(), src.end(), ::isspace), src.end());
  GroupoidMorphism f;
  f.source = parse_chamber(src);
  std::istringstream rest(text.substr(colon + 1));
  std::string tok;
  while (rest >> tok) {
    if (tok.size() != 2 || (tok[0] != 'F' && tok[0] != 'f') || (tok[1] != '1' && tok[1] != '2'))
      throw argument_error("parse_morphism: bad letter '" + tok + "'");
    int wall = tok[1] - '0';
    f.word.push_back(tok[0] == 'F' ? wall : -wall);
  }
  return f;
}

inline std::string format_morphism(const GroupoidMorphism& f) {
  std::ostringstream os;
  os << chamber_name(f.source) << ":";
  for (int l : f.word) os << ' ' << (l > 0 ? 'F' : 'f') << (l > 0 ? l : -l);
  return os.str();
}

}  // namespace flipkit::wall
