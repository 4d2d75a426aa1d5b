#pragma once

// Polygon model of the type-A cluster combinatorics: n-diagonals of a convex
// d-gon, n-angulations (dissections into n-gons), the exchange graph whose
// edges swap a single diagonal, and the rotation action of Z/d.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flipkit/errors.hpp"
#include "flipkit/graph.hpp"

namespace flipkit::polygon {

inline int d_param(int k, int n) {
  if (k < 1) throw argument_error("d_param: k must be >= 1");
  if (n < 3) throw argument_error("d_param: n must be >= 3");
  return (k + 1) * (n - 2) + 2;
}

struct Polygon {
  int d;
  explicit Polygon(int d_) : d(d_) {
    if (d < 4) throw argument_error("Polygon: vertex count must be >= 4");
  }
};

// Which boundary path of the chord is a single n-gon's worth (exactly n-1
// edges). Both qualify only when d = 2n-2; longer valid chords (n = 3) have
// neither.
enum class NgonSide { Lower, Upper, Both, Neither };

// Chord {a,b} of the d-gon, stored min-endpoint first. The "lower" boundary
// path runs a -> a+1 -> ... -> b and has b-a edges; the "upper" path has
// d-(b-a). A chord is an n-diagonal iff each side can itself be cut into
// n-gons, i.e. the side lengths are = 1 mod (n-2); for n = 3 that is every
// diagonal. (A side of exactly n-1 edges bounds an n-gon outright.)
struct NDiagonal {
  int a = 0, b = 0;
  int n = 3;
  NgonSide side = NgonSide::Neither;

  friend bool operator==(const NDiagonal& x, const NDiagonal& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const NDiagonal& x, const NDiagonal& y) {
    return std::pair{x.a, x.b} < std::pair{y.a, y.b};
  }
};

inline bool is_n_diagonal(int d, int n, int i, int j) {
  if (i == j) return false;
  int a = std::min(i, j), b = std::max(i, j);
  int lower = b - a, upper = d - lower;
  if (lower < 2 || upper < 2) return false;  // boundary edge
  if (n == 3) return true;
  return lower % (n - 2) == 1 % (n - 2) && upper % (n - 2) == 1 % (n - 2);
}

inline NDiagonal make_diagonal(int d, int n, int i, int j) {
  if (d < 4) throw argument_error("make_diagonal: d must be >= 4");
  if (n < 3) throw argument_error("make_diagonal: n must be >= 3");
  if (i < 0 || j < 0 || i >= d || j >= d) throw argument_error("make_diagonal: vertex out of range");
  if (!is_n_diagonal(d, n, i, j)) throw argument_error("make_diagonal: not an n-diagonal");
  NDiagonal out;
  out.a = std::min(i, j);
  out.b = std::max(i, j);
  out.n = n;
  int lower = out.b - out.a, upper = d - lower;
  bool lo = lower == n - 1, up = upper == n - 1;
  out.side = lo && up   ? NgonSide::Both
             : lo       ? NgonSide::Lower
             : up       ? NgonSide::Upper
                        : NgonSide::Neither;
  return out;
}

inline std::vector<NDiagonal> enumerate_n_diagonals(int d, int n) {
  if (d < 4) throw argument_error("enumerate_n_diagonals: d must be >= 4");
  if (n < 3) throw argument_error("enumerate_n_diagonals: n must be >= 3");
  std::vector<NDiagonal> out;
  for (int a = 0; a < d; ++a)
    for (int b = a + 2; b < d; ++b)
      if (is_n_diagonal(d, n, a, b)) out.push_back(make_diagonal(d, n, a, b));
  return out;
}

// Strict interleaving of endpoints; chords sharing an endpoint do not cross.
inline bool chords_cross(const NDiagonal& x, const NDiagonal& y) {
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  bool a_in = x.a < y.a && y.a < x.b;
  bool b_in = x.a < y.b && y.b < x.b;
  return a_in != b_in;
}

// Complementary faces of a noncrossing chord set, each as a ccw vertex list.
inline std::vector<std::vector<int>> faces(int d, const std::vector<NDiagonal>& chords) {
  std::vector<std::vector<int>> out;
  auto split = [&](auto&& self, std::vector<int> poly, std::vector<NDiagonal> inner) -> void {
    if (inner.empty()) {
      out.push_back(std::move(poly));
      return;
    }
    NDiagonal cut = *std::min_element(inner.begin(), inner.end());
    size_t ia = std::find(poly.begin(), poly.end(), cut.a) - poly.begin();
    size_t ib = std::find(poly.begin(), poly.end(), cut.b) - poly.begin();
    if (ia > ib) std::swap(ia, ib);
    std::vector<int> p1(poly.begin() + ia, poly.begin() + ib + 1);
    std::vector<int> p2(poly.begin() + ib, poly.end());
    p2.insert(p2.end(), poly.begin(), poly.begin() + ia + 1);
    std::set<int> s1(p1.begin(), p1.end());
    std::vector<NDiagonal> in1, in2;
    for (const auto& c : inner) {
      if (c == cut) continue;
      if (s1.count(c.a) && s1.count(c.b))
        in1.push_back(c);
      else
        in2.push_back(c);
    }
    self(self, std::move(p1), std::move(in1));
    self(self, std::move(p2), std::move(in2));
  };
  std::vector<int> all(d);
  for (int v = 0; v < d; ++v) all[v] = v;
  split(split, std::move(all), chords);
  std::sort(out.begin(), out.end());
  return out;
}

struct NAngulation {
  int d = 0;
  int n = 3;
  std::vector<NDiagonal> diagonals;  // sorted; the canonical form

  friend bool operator==(const NAngulation& x, const NAngulation& y) {
    return x.d == y.d && x.n == y.n && x.diagonals == y.diagonals;
  }
  friend bool operator<(const NAngulation& x, const NAngulation& y) {
    if (x.d != y.d) return x.d < y.d;
    if (x.n != y.n) return x.n < y.n;
    return x.diagonals < y.diagonals;
  }
};

inline int angulation_diagonal_count(int d, int n) {
  if ((d - 2) % (n - 2) != 0)
    throw argument_error("n-angulation: (d-2) must be divisible by (n-2)");
  return (d - 2) / (n - 2) - 1;
}

inline bool all_faces_are_ngons(int d, int n, const std::vector<NDiagonal>& chords) {
  for (const auto& f : faces(d, chords))
    if (static_cast<int>(f.size()) != n) return false;
  return true;
}

inline NAngulation make_angulation(int d, int n, std::vector<std::pair<int, int>> pairs) {
  NAngulation a;
  a.d = d;
  a.n = n;
  for (auto [i, j] : pairs) a.diagonals.push_back(make_diagonal(d, n, i, j));
  std::sort(a.diagonals.begin(), a.diagonals.end());
  for (size_t i = 0; i + 1 < a.diagonals.size(); ++i)
    if (a.diagonals[i] == a.diagonals[i + 1]) throw argument_error("make_angulation: duplicate diagonal");
  for (size_t i = 0; i < a.diagonals.size(); ++i)
    for (size_t j = i + 1; j < a.diagonals.size(); ++j)
      if (chords_cross(a.diagonals[i], a.diagonals[j]))
        throw argument_error("make_angulation: crossing diagonals");
  if (static_cast<int>(a.diagonals.size()) != angulation_diagonal_count(d, n))
    throw argument_error("make_angulation: wrong diagonal count");
  if (!all_faces_are_ngons(d, n, a.diagonals))
    throw argument_error("make_angulation: a complementary face is not an n-gon");
  return a;
}

// Complete list in lexicographic order (canonical ordering of the module).
inline std::vector<NAngulation> enumerate_n_angulations(int d, int n) {
  if (d < 4) throw argument_error("enumerate_n_angulations: d must be >= 4");
  if (n < 3) throw argument_error("enumerate_n_angulations: n must be >= 3");
  int target = angulation_diagonal_count(d, n);
  std::vector<NDiagonal> cand = enumerate_n_diagonals(d, n);
  std::vector<NAngulation> out;
  std::vector<NDiagonal> cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(cur.size()) == target) {
      if (all_faces_are_ngons(d, n, cur)) {
        NAngulation a;
        a.d = d;
        a.n = n;
        a.diagonals = cur;
        out.push_back(std::move(a));
      }
      return;
    }
    if (cand.size() - from < target - cur.size()) return;
    for (size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (const auto& c : cur)
        if (chords_cross(c, cand[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(cand[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline NAngulation rotate(int r, const NAngulation& a) {
  int d = a.d;
  r = ((r % d) + d) % d;
  NAngulation b;
  b.d = d;
  b.n = a.n;
  for (const auto& c : a.diagonals)
    b.diagonals.push_back(make_diagonal(d, a.n, (c.a + r) % d, (c.b + r) % d));
  std::sort(b.diagonals.begin(), b.diagonals.end());
  return b;
}

struct ExchangeGraph {
  std::vector<NAngulation> vertices;  // canonically ordered
  Graph graph;
};

// One-diagonal difference as sets.
inline bool exchange_adjacent(const NAngulation& x, const NAngulation& y) {
  if (x.diagonals.size() != y.diagonals.size()) return false;
  size_t diff = 0, i = 0, j = 0;
  while (i < x.diagonals.size() && j < y.diagonals.size()) {
    if (x.diagonals[i] == y.diagonals[j]) {
      ++i, ++j;
    } else if (x.diagonals[i] < y.diagonals[j]) {
      ++diff, ++i;
    } else {
      ++j;
    }
  }
  diff += x.diagonals.size() - i;
  return diff == 1;
}

inline ExchangeGraph exchange_graph(int d, int n) {
  ExchangeGraph eg;
  eg.vertices = enumerate_n_angulations(d, n);
  int v = static_cast<int>(eg.vertices.size());
  eg.graph = Graph(v);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (exchange_adjacent(eg.vertices[i], eg.vertices[j])) eg.graph.add_edge(i, j);
  eg.graph.finalize();
  return eg;
}

inline int vertex_index(const ExchangeGraph& eg, const NAngulation& a) {
  auto it = std::lower_bound(eg.vertices.begin(), eg.vertices.end(), a);
  if (it == eg.vertices.end() || !(*it == a)) throw argument_error("vertex_index: angulation not found");
  return static_cast<int>(it - eg.vertices.begin());
}

// The permutation of exchange-graph vertices induced by rotate(r, .).
inline std::vector<int> rotation_vertex_permutation(const ExchangeGraph& eg, int r) {
  std::vector<int> perm(eg.vertices.size());
  for (size_t i = 0; i < eg.vertices.size(); ++i)
    perm[i] = vertex_index(eg, rotate(r, eg.vertices[i]));
  return perm;
}

}  // namespace flipkit::polygon
