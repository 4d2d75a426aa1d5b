#pragma once

// Braid-group engine for the punctured disc: Artin action on the free group
// (the word problem), arcs as braid images of base arcs, braid twists, and
// minimal interior intersection numbers of arc pairs.
//
// Intersection model. Punctures sit at 1..m on the real line; wall W_k hangs
// from puncture k down to the boundary. Cutting along the walls opens the
// disc into one polygon, and an arc in minimal position is recorded by its
// reduced wall-crossing word (its normal coordinates for this spine). The
// word is recovered algebraically: the boundary of a neighborhood of the arc
// beta.b_i is the conjugacy class of beta(x_i x_{i+1}), whose cyclic
// reduction always has the shape u x_t u^-1 x_s with u the crossing word.
// Inside the cut polygon both arcs are unions of chords; strand positions
// along each wall follow by comparing itineraries lexicographically (the
// geodesic order), and the minimal intersection number is the number of
// interleaved chord pairs. Endpoint tangencies are excluded by treating a
// shared puncture corner as a single boundary position.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "flipkit/errors.hpp"

namespace flipkit::braid {

// ---------------------------------------------------------------------------
// Words

struct BraidWord {
  int strands = 2;
  // letter +i = sigma_i, -i = sigma_i^-1, 1 <= i < strands
  std::vector<int> letters;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

inline BraidWord make_braid(int strands, std::vector<int> letters) {
  if (strands < 2) throw argument_error("braid: need at least 2 strands");
  for (int l : letters) {
    int i = l > 0 ? l : -l;
    if (i < 1 || i >= strands) throw argument_error("braid: generator index out of range");
  }
  return BraidWord{strands, std::move(letters)};
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw argument_error("braid: strand counts disagree");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline BraidWord inverse(const BraidWord& a) {
  BraidWord out{a.strands, {}};
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

// "s1 S2 s3": lowercase = positive generator, uppercase = inverse.
inline BraidWord parse_braid(int strands, const std::string& text) {
  std::vector<int> letters;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c != 's' && c != 'S') throw argument_error("parse_braid: expected 's' or 'S'");
    size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) throw argument_error("parse_braid: generator needs an index");
    int idx = std::stoi(text.substr(i + 1, j - i - 1));
    letters.push_back(c == 's' ? idx : -idx);
    i = j;
  }
  return make_braid(strands, std::move(letters));
}

inline std::string format_braid(const BraidWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    int l = w.letters[i];
    if (i) os << ' ';
    os << (l > 0 ? 's' : 'S') << (l > 0 ? l : -l);
  }
  return os.str();
}

// Freely reduced word in the puncture generators x_1..x_m.
struct FreeWord {
  std::vector<int> letters;  // +k = x_k, -k = x_k^-1

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.letters == b.letters; }
  friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.letters < b.letters; }
};

inline void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

inline FreeWord reduce(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) push_reduced(out, l);
  return FreeWord{std::move(out)};
}

inline FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  std::vector<int> out = a.letters;
  for (int l : b.letters) push_reduced(out, l);
  return FreeWord{std::move(out)};
}

inline FreeWord free_inverse(const FreeWord& a) {
  std::vector<int> out;
  out.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.push_back(-*it);
  return FreeWord{std::move(out)};
}

// ---------------------------------------------------------------------------
// Artin action: sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.

namespace detail {

inline void substitute_letter(std::vector<int>& out, int gen, int free_letter) {
  int k = free_letter > 0 ? free_letter : -free_letter;
  bool inv = free_letter < 0;
  int i = gen > 0 ? gen : -gen;
  std::vector<int> image;  // image of the positive generator x_k
  if (gen > 0) {
    if (k == i)
      image = {i, i + 1, -i};
    else if (k == i + 1)
      image = {i};
    else
      image = {k};
  } else {
    if (k == i)
      image = {i + 1};
    else if (k == i + 1)
      image = {-(i + 1), i, i + 1};
    else
      image = {k};
  }
  if (!inv) {
    for (int l : image) push_reduced(out, l);
  } else {
    for (auto it = image.rbegin(); it != image.rend(); ++it) push_reduced(out, -*it);
  }
}

}  // namespace detail

inline FreeWord artin_apply_letter(int gen, const FreeWord& x) {
  std::vector<int> out;
  out.reserve(x.letters.size() * 3);
  for (int l : x.letters) detail::substitute_letter(out, gen, l);
  return FreeWord{std::move(out)};
}

// Letters act right to left, so artin_apply(uv, x) = artin_apply(u, artin_apply(v, x)).
inline FreeWord artin_apply(const BraidWord& w, const FreeWord& x,
                            size_t length_cap = 4'000'000) {
  for (int l : x.letters) {
    int k = l > 0 ? l : -l;
    if (k < 1 || k > w.strands) throw argument_error("artin_apply: puncture index out of range");
  }
  FreeWord cur = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    cur = artin_apply_letter(*it, cur);
    if (cur.letters.size() > length_cap) throw resource_error("artin_apply: image too long");
  }
  return cur;
}

inline FreeWord generator_word(int k) { return FreeWord{{k}}; }

inline std::vector<FreeWord> artin_images(const BraidWord& w) {
  std::vector<FreeWord> out;
  out.reserve(w.strands);
  for (int k = 1; k <= w.strands; ++k) out.push_back(artin_apply(w, generator_word(k)));
  return out;
}

// Faithfulness of the Artin representation decides the word problem.
inline bool braid_eq(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw argument_error("braid_eq: strand counts disagree");
  for (int k = 1; k <= a.strands; ++k)
    if (!(artin_apply(a, generator_word(k)) == artin_apply(b, generator_word(k)))) return false;
  return true;
}

// perm[p-1] = where the puncture at position p ends up.
inline std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  for (int p = 0; p < w.strands; ++p) perm[p] = p + 1;
  // Build as composition: for w = l_1...l_r the action applies l_r first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it > 0 ? *it : -*it;
    for (int p = 0; p < w.strands; ++p) {
      if (perm[p] == i)
        perm[p] = i + 1;
      else if (perm[p] == i + 1)
        perm[p] = i;
    }
  }
  return perm;
}

inline bool is_pure(const BraidWord& w) {
  auto p = permutation(w);
  for (int i = 0; i < w.strands; ++i)
    if (p[i] != i + 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arcs

struct Arc {
  BraidWord braid;  // applied to the base arc
  int base = 1;     // b_i joins punctures i, i+1
};

inline Arc make_arc(BraidWord w, int base) {
  if (base < 1 || base + 1 > w.strands) throw argument_error("arc: base index out of range");
  return Arc{std::move(w), base};
}

inline Arc base_arc(int strands, int i) { return make_arc(make_braid(strands, {}), i); }

inline Arc apply_to_arc(const BraidWord& w, const Arc& a) {
  if (w.strands != a.braid.strands) throw argument_error("apply_to_arc: strand counts disagree");
  return Arc{concat(w, a.braid), a.base};
}

inline std::pair<int, int> endpoints(const Arc& a) {
  auto perm = permutation(a.braid);
  int p = perm[a.base - 1], q = perm[a.base];
  return {std::min(p, q), std::max(p, q)};
}

// The half-twist along the arc: beta sigma_i beta^-1.
inline BraidWord braid_twist(const Arc& a) {
  BraidWord mid = make_braid(a.braid.strands, {a.base});
  return concat(concat(a.braid, mid), inverse(a.braid));
}

// A half-twist determines its arc, so twist conjugacy plus matching endpoints
// decides arc isotopy through the braid word problem.
inline bool arc_eq(const Arc& a, const Arc& b) {
  if (a.braid.strands != b.braid.strands) throw argument_error("arc_eq: strand counts disagree");
  if (endpoints(a) != endpoints(b)) return false;
  return braid_eq(braid_twist(a), braid_twist(b));
}

// ---------------------------------------------------------------------------
// Cutting sequences

struct CutSequence {
  int from = 0, to = 0;      // traversal runs from `from` to `to`
  std::vector<int> word;     // signed wall crossings, +k = W_k left-to-right
};

// Cyclic reduction of a banana word beta(x_i x_{i+1}) and extraction of the
// pattern u x_t u^-1 x_s. The pattern always exists: Artin automorphisms send
// generators to positive conjugates of generators.
inline CutSequence cutting_sequence(const Arc& a) {
  FreeWord banana = artin_apply(a.braid, reduce({a.base, a.base + 1}));
  std::vector<int> z = banana.letters;
  // cyclic reduction
  while (z.size() >= 2 && z.front() == -z.back()) {
    z.erase(z.begin());
    z.pop_back();
  }
  auto [p, q] = endpoints(a);
  if (z.size() < 2 || z.size() % 2 != 0)
    throw geometry_error("cutting_sequence: malformed banana word");
  size_t L = (z.size() - 2) / 2;
  size_t n = z.size();
  std::vector<CutSequence> matches;
  for (size_t r = 0; r < n; ++r) {
    auto at = [&](size_t j) { return z[(r + j) % n]; };
    for (auto [t, s] : {std::pair{p, q}, std::pair{q, p}}) {
      if (at(L) != t || at(2 * L + 1) != s) continue;
      bool ok = true;
      for (size_t j = 0; j < L && ok; ++j)
        if (at(L + 1 + j) != -at(L - 1 - j)) ok = false;
      if (!ok) continue;
      CutSequence cs;
      cs.from = s;
      cs.to = t;
      for (size_t j = 0; j < L; ++j) cs.word.push_back(at(j));
      matches.push_back(std::move(cs));
    }
  }
  if (matches.empty()) throw geometry_error("cutting_sequence: banana pattern not found");
  std::sort(matches.begin(), matches.end(), [](const CutSequence& x, const CutSequence& y) {
    return std::tuple(x.from, x.to, x.word) < std::tuple(y.from, y.to, y.word);
  });
  return matches.front();
}

// ---------------------------------------------------------------------------
// Minimal interior intersections via chord interleaving in the cut polygon

namespace detail {

// Boundary items around the cut polygon, counterclockwise:
// L_1, corner_1, R_1, L_2, corner_2, R_2, ..., L_m, corner_m, R_m.
inline int item_left(int k) { return 3 * (k - 1); }
inline int item_corner(int k) { return 3 * (k - 1) + 1; }
inline int item_right(int k) { return 3 * (k - 1) + 2; }
inline bool item_is_corner(int item) { return item % 3 == 1; }
inline int item_opposite(int item) {
  int r = item % 3;
  if (r == 0) return item + 2;
  if (r == 2) return item - 2;
  throw argument_error("item_opposite: corner item");
}

struct StrandPoint {
  int arc = 0;    // 0 or 1
  int event = 0;  // 1..r for crossings
  int item = 0;   // wall side the point lies on
  std::vector<int> ray;  // items the continuation hits, ending at a corner
};

// entry side of a crossing with sign e: left for e>0 (the strand passes
// left-to-right), right otherwise.
inline int entry_item(int wall, int sign) { return sign > 0 ? item_left(wall) : item_right(wall); }
inline int exit_item(int wall, int sign) { return sign > 0 ? item_right(wall) : item_left(wall); }

struct ArcChords {
  CutSequence cut;
  // ray leaving crossing q on its exit side: entry items of the later
  // crossings, then the terminal corner
  std::vector<int> forward_ray(size_t q) const {
    std::vector<int> out;
    for (size_t p = q + 1; p <= cut.word.size(); ++p) {
      int w = cut.word[p - 1];
      out.push_back(entry_item(std::abs(w), w > 0 ? 1 : -1));
    }
    out.push_back(item_corner(cut.to));
    return out;
  }
  // ray leaving crossing q on its entry side (running backward)
  std::vector<int> backward_ray(size_t q) const {
    std::vector<int> out;
    for (size_t p = q; p-- > 1;) {
      int w = cut.word[p - 1];
      out.push_back(exit_item(std::abs(w), w > 0 ? 1 : -1));
    }
    out.push_back(item_corner(cut.from));
    return out;
  }
};

// Lexicographic itinerary comparison: decides which of two strands entering
// the polygon from side `start` sits counterclockwise-earlier on it. A later
// target (in the boundary order cut at the current side) means an earlier
// source; passing through a wall preserves the verdict (landing order and
// wall transit each reverse once).
inline int compare_rays(int start, const std::vector<int>& ra, const std::vector<int>& rb,
                        int total_items) {
  int cur = start;
  for (size_t i = 0; i < ra.size() && i < rb.size(); ++i) {
    int a = ra[i], b = rb[i];
    if (a != b) {
      int pa = ((a - cur) % total_items + total_items) % total_items;
      int pb = ((b - cur) % total_items + total_items) % total_items;
      return pa > pb ? -1 : 1;
    }
    if (item_is_corner(a)) return 0;
    cur = item_opposite(a);
  }
  return 0;  // unreachable for well-formed rays; treat as tie
}

}  // namespace detail

// Minimal number of interior transverse intersections of the two arcs.
inline int interior_intersection(const Arc& a1, const Arc& a2) {
  if (a1.braid.strands != a2.braid.strands)
    throw argument_error("interior_intersection: strand counts disagree");
  int m = a1.braid.strands;
  int total_items = 3 * m;

  detail::ArcChords arcs[2] = {{cutting_sequence(a1)}, {cutting_sequence(a2)}};

  // Collect wall-side points with their itinerary rays (away from the side).
  std::vector<detail::StrandPoint> pts;
  for (int t = 0; t < 2; ++t) {
    const auto& cut = arcs[t].cut;
    for (size_t q = 1; q <= cut.word.size(); ++q) {
      int w = cut.word[q - 1];
      int wall = std::abs(w), sign = w > 0 ? 1 : -1;
      detail::StrandPoint entry{t, static_cast<int>(q), detail::entry_item(wall, sign),
                                arcs[t].backward_ray(q)};
      detail::StrandPoint exitp{t, static_cast<int>(q), detail::exit_item(wall, sign),
                                arcs[t].forward_ray(q)};
      pts.push_back(std::move(entry));
      pts.push_back(std::move(exitp));
    }
  }

  // Order the points on each wall side. Ties defer to the partner side
  // (reversed by the wall transit); fully parallel strands fall back to a
  // fixed order, reversed between the two sides so parallel chords nest.
  std::map<std::pair<int, std::pair<int, int>>, const detail::StrandPoint*> by_key;
  for (const auto& p : pts) by_key[{p.item, {p.arc, p.event}}] = &p;
  auto partner = [&](const detail::StrandPoint& p) -> const detail::StrandPoint& {
    return *by_key.at({detail::item_opposite(p.item), {p.arc, p.event}});
  };
  auto side_less = [&](const detail::StrandPoint* x, const detail::StrandPoint* y) {
    if (x == y) return false;
    int c = detail::compare_rays(x->item, x->ray, y->ray, total_items);
    if (c != 0) return c < 0;
    const auto& px = partner(*x);
    const auto& py = partner(*y);
    c = -detail::compare_rays(px.item, px.ray, py.ray, total_items);
    if (c != 0) return c < 0;
    bool asc = x->item % 3 == 0;  // ascending on left copies, descending on right
    auto kx = std::pair{x->arc, x->event}, ky = std::pair{y->arc, y->event};
    return asc ? kx < ky : ky < kx;
  };

  std::map<int, std::vector<const detail::StrandPoint*>> by_item;
  for (const auto& p : pts) by_item[p.item].push_back(&p);

  // Global circular positions: walk the items in boundary order; every
  // corner is a single position (endpoint tangencies never count).
  std::map<std::pair<int, std::pair<int, int>>, int> position;
  std::map<int, int> corner_position;
  int pos = 0;
  for (int item = 0; item < total_items; ++item) {
    if (detail::item_is_corner(item)) {
      corner_position[item] = pos++;
      continue;
    }
    auto it = by_item.find(item);
    if (it == by_item.end()) continue;
    std::sort(it->second.begin(), it->second.end(), side_less);
    for (const auto* p : it->second) position[{p->item, {p->arc, p->event}}] = pos++;
  }
  int circle = pos;

  // Chords of each arc as position pairs.
  auto chords_of = [&](int t) {
    const auto& cut = arcs[t].cut;
    std::vector<std::pair<int, int>> out;
    int prev = corner_position[detail::item_corner(cut.from)];
    for (size_t q = 1; q <= cut.word.size(); ++q) {
      int w = cut.word[q - 1];
      int wall = std::abs(w), sign = w > 0 ? 1 : -1;
      int entry = position.at({detail::entry_item(wall, sign), {t, static_cast<int>(q)}});
      out.push_back({prev, entry});
      prev = position.at({detail::exit_item(wall, sign), {t, static_cast<int>(q)}});
    }
    out.push_back({prev, corner_position[detail::item_corner(cut.to)]});
    return out;
  };
  auto c1 = chords_of(0), c2 = chords_of(1);

  auto strictly_inside = [&](int x, int lo, int hi) {
    if (x == lo || x == hi) return false;
    int span = ((hi - lo) % circle + circle) % circle;
    int off = ((x - lo) % circle + circle) % circle;
    return off > 0 && off < span;
  };
  auto interleaved = [&](std::pair<int, int> u, std::pair<int, int> v) {
    if (u.first == v.first || u.first == v.second || u.second == v.first || u.second == v.second)
      return false;  // shared boundary position, tangency only
    return strictly_inside(v.first, u.first, u.second) !=
           strictly_inside(v.second, u.first, u.second);
  };

  // A simple arc must stay simple in its own chord diagram.
  for (size_t i = 0; i < c1.size(); ++i)
    for (size_t j = i + 1; j < c1.size(); ++j)
      if (interleaved(c1[i], c1[j]))
        throw geometry_error("interior_intersection: self-crossing chord diagram");
  for (size_t i = 0; i < c2.size(); ++i)
    for (size_t j = i + 1; j < c2.size(); ++j)
      if (interleaved(c2[i], c2[j]))
        throw geometry_error("interior_intersection: self-crossing chord diagram");

  int count = 0;
  for (const auto& u : c1)
    for (const auto& v : c2)
      if (interleaved(u, v)) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Floer-rank shadow

enum class RankClass { Equal, Rank0, Rank1, Rank2SharedEndpoints, Rank2Interior, Higher };

struct RankResult {
  RankClass cls = RankClass::Equal;
  int shared_endpoints = 0;
  int interior = 0;
};

inline RankResult hf_rank_class(const Arc& a, const Arc& b) {
  if (a.braid.strands != b.braid.strands)
    throw argument_error("hf_rank_class: strand counts disagree");
  if (arc_eq(a, b)) return {RankClass::Equal, 2, 0};
  auto [p1, q1] = endpoints(a);
  auto [p2, q2] = endpoints(b);
  int shared = (p1 == p2 || p1 == q2 ? 1 : 0) + (q1 == p2 || q1 == q2 ? 1 : 0);
  int inter = interior_intersection(a, b);
  RankResult out;
  out.shared_endpoints = shared;
  out.interior = inter;
  if (shared == 0 && inter == 0)
    out.cls = RankClass::Rank0;
  else if (shared == 1 && inter == 0)
    out.cls = RankClass::Rank1;
  else if (shared == 2 && inter == 0)
    out.cls = RankClass::Rank2SharedEndpoints;
  else if (shared == 0 && inter == 1)
    out.cls = RankClass::Rank2Interior;
  else
    out.cls = RankClass::Higher;
  return out;
}

inline std::string rank_class_name(RankClass c) {
  switch (c) {
    case RankClass::Equal: return "Equal";
    case RankClass::Rank0: return "Rank0";
    case RankClass::Rank1: return "Rank1";
    case RankClass::Rank2SharedEndpoints: return "Rank2SharedEndpoints";
    case RankClass::Rank2Interior: return "Rank2Interior";
    case RankClass::Higher: return "Higher";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Pure-braid strand forgetting (B_3 and friends)

// Deletes `strand` from a pure braid; the image in PBr_2 = Z is the signed
// crossing count of the two surviving strands.
inline BraidWord forget_strand(const BraidWord& w, int strand) {
  if (!is_pure(w)) throw argument_error("forget_strand: braid is not pure");
  if (strand < 1 || strand > w.strands) throw argument_error("forget_strand: no such strand");
  std::vector<int> at(w.strands);  // position -> strand id
  for (int p = 0; p < w.strands; ++p) at[p] = p + 1;
  long long exponent = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it > 0 ? *it : -*it;
    int sign = *it > 0 ? 1 : -1;
    int a = at[i - 1], b = at[i];
    if (a != strand && b != strand) exponent += sign;
    std::swap(at[i - 1], at[i]);
  }
  BraidWord out{2, {}};
  for (long long k = 0; k < std::llabs(exponent); ++k) out.letters.push_back(exponent > 0 ? 1 : -1);
  return out;
}

// Membership in the kernel of the two designated strand-forgettings.
inline bool in_kernel(const BraidWord& w, int forget_a = 1, int forget_b = 2) {
  return forget_strand(w, forget_a).letters.empty() && forget_strand(w, forget_b).letters.empty();
}

}  // namespace flipkit::braid
