#pragma once

// Marked bordered surfaces and ideal triangulations as combinatorial maps:
// oriented triangles with labeled corners, side gluings for interior arcs,
// labeled boundary segments. Flips are local quadrilateral moves; the dual
// quiver carries one clockwise 3-cycle of the potential per interior triangle.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flipkit/errors.hpp"
#include "flipkit/graph.hpp"
#include "flipkit/quiver.hpp"

namespace flipkit::surface {

struct MarkedSurface {
  int genus = 0;
  std::vector<int> pole_orders;

  int boundary_components() const { return static_cast<int>(pole_orders.size()); }
  int marked_points(int component) const { return pole_orders.at(component) - 2; }
  int total_marked_points() const {
    int s = 0;
    for (int d : pole_orders) s += d - 2;
    return s;
  }
};

inline MarkedSurface build_surface(int genus, std::vector<int> pole_orders) {
  if (genus < 0) throw argument_error("build_surface: genus must be >= 0");
  if (pole_orders.empty()) throw argument_error("build_surface: need at least one pole order");
  for (int d : pole_orders)
    if (d <= 2) throw argument_error("build_surface: every pole order must exceed 2");
  return MarkedSurface{genus, std::move(pole_orders)};
}

struct Counts {
  int arcs = 0;
  int faces = 0;
};

inline Counts expected_counts(const MarkedSurface& s) {
  int sum_d = std::accumulate(s.pole_orders.begin(), s.pole_orders.end(), 0);
  int b = s.boundary_components();
  return Counts{6 * s.genus - 6 + sum_d + b, 4 * s.genus - 4 + sum_d};
}

struct MarkedPoint {
  int component = 0;
  int index = 0;
  friend bool operator==(const MarkedPoint& x, const MarkedPoint& y) {
    return x.component == y.component && x.index == y.index;
  }
  friend auto operator<=>(const MarkedPoint& x, const MarkedPoint& y) = default;
};

struct SideRef {
  int tri = -1;
  int side = -1;  // 0..2; side s runs from corner s to corner (s+1)%3
  friend bool operator==(const SideRef& x, const SideRef& y) {
    return x.tri == y.tri && x.side == y.side;
  }
  friend auto operator<=>(const SideRef& x, const SideRef& y) = default;
};

struct Side {
  enum class Kind { Arc, Boundary } kind = Kind::Boundary;
  int arc = -1;            // valid when kind == Arc
  MarkedPoint segment{};   // valid when kind == Boundary: runs (c,j) -> (c,j+1 mod m_c)
};

struct IdealTriangulation {
  std::vector<std::array<MarkedPoint, 3>> corners;  // ccw corner labels per triangle
  std::vector<std::array<Side, 3>> sides;
  std::vector<std::pair<SideRef, SideRef>> arcs;    // arc id -> its two glued sides

  int triangle_count() const { return static_cast<int>(corners.size()); }
  int arc_count() const { return static_cast<int>(arcs.size()); }

  const Side& side(SideRef r) const { return sides.at(r.tri).at(r.side); }

  SideRef partner(SideRef r) const {
    const Side& s = side(r);
    if (s.kind != Side::Kind::Arc) throw argument_error("partner: side is a boundary segment");
    auto [x, y] = arcs.at(s.arc);
    return r == x ? y : x;
  }

  bool interior_triangle(int t) const {
    for (int e = 0; e < 3; ++e)
      if (sides[t][e].kind != Side::Kind::Arc) return false;
    return true;
  }

  int interior_triangle_count() const {
    int c = 0;
    for (int t = 0; t < triangle_count(); ++t)
      if (interior_triangle(t)) ++c;
    return c;
  }
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool pass = true;
  void add(std::string name, bool ok, std::string detail = "") {
    pass = pass && ok;
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.ok) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
    return out;
  }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

inline int corner_id(int t, int c) { return 3 * t + c; }

}  // namespace detail

inline ValidationReport validate_triangulation(const IdealTriangulation& t, const MarkedSurface& s) {
  ValidationReport rep;
  int F = t.triangle_count();
  int A = t.arc_count();

  // Structure: arc table and side annotations must be mutually consistent,
  // gluing a fixed-point-free pairing of Arc-kind sides.
  bool structure = true;
  std::string sdetail;
  std::map<SideRef, int> side_to_arc;
  for (int a = 0; a < A && structure; ++a) {
    auto [x, y] = t.arcs[a];
    for (SideRef r : {x, y}) {
      if (r.tri < 0 || r.tri >= F || r.side < 0 || r.side > 2) {
        structure = false;
        sdetail = "arc side reference out of range";
        break;
      }
      if (t.side(r).kind != Side::Kind::Arc || t.side(r).arc != a) {
        structure = false;
        sdetail = "side annotation disagrees with arc table";
        break;
      }
      if (!side_to_arc.insert({r, a}).second) {
        structure = false;
        sdetail = "side glued twice";
        break;
      }
    }
    if (x == y) {
      structure = false;
      sdetail = "gluing has a fixed point";
    }
  }
  int arc_sides = 0;
  for (int tri = 0; tri < F && structure; ++tri)
    for (int e = 0; e < 3; ++e)
      if (t.sides[tri][e].kind == Side::Kind::Arc) {
        ++arc_sides;
        if (!side_to_arc.count({tri, e})) {
          structure = false;
          sdetail = "arc-kind side missing from the gluing";
        }
      }
  if (structure && arc_sides != 2 * A) {
    structure = false;
    sdetail = "gluing is not an involution on glued sides";
  }
  rep.add("gluing-involution", structure, sdetail);
  if (!structure) return rep;

  // Corner labels across gluings (orientation-reversing identification) and
  // along labeled boundary segments.
  bool labels = true;
  std::string ldetail;
  for (int a = 0; a < A && labels; ++a) {
    auto [x, y] = t.arcs[a];
    if (!(t.corners[x.tri][x.side] == t.corners[y.tri][(y.side + 1) % 3]) ||
        !(t.corners[x.tri][(x.side + 1) % 3] == t.corners[y.tri][y.side])) {
      labels = false;
      ldetail = "glued corners carry different marked points";
    }
  }
  std::set<MarkedPoint> seen_segments;
  for (int tri = 0; tri < F && labels; ++tri)
    for (int e = 0; e < 3 && labels; ++e) {
      const Side& sd = t.sides[tri][e];
      if (sd.kind != Side::Kind::Boundary) continue;
      int c = sd.segment.component, j = sd.segment.index;
      if (c < 0 || c >= s.boundary_components() || j < 0 || j >= s.marked_points(c)) {
        labels = false;
        ldetail = "boundary segment label out of range";
        break;
      }
      int m = s.marked_points(c);
      if (!(t.corners[tri][e] == MarkedPoint{c, j}) ||
          !(t.corners[tri][(e + 1) % 3] == MarkedPoint{c, (j + 1) % m})) {
        labels = false;
        ldetail = "boundary segment corners disagree with its label";
      }
      if (!seen_segments.insert(sd.segment).second) {
        labels = false;
        ldetail = "boundary segment repeated";
      }
    }
  int expected_segments = s.total_marked_points();
  if (labels && static_cast<int>(seen_segments.size()) != expected_segments) {
    labels = false;
    ldetail = "not every boundary segment appears";
  }
  rep.add("corner-and-segment-labels", labels, ldetail);

  // No self-folded triangles.
  bool no_self_folded = true;
  for (int a = 0; a < A; ++a)
    if (t.arcs[a].first.tri == t.arcs[a].second.tri) no_self_folded = false;
  rep.add("no-self-folded", no_self_folded);

  // Connectivity of the triangle adjacency.
  bool connected = true;
  if (F > 0) {
    std::vector<char> seen(F, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
      int tri = stack.back();
      stack.pop_back();
      for (int e = 0; e < 3; ++e)
        if (t.sides[tri][e].kind == Side::Kind::Arc) {
          int other = t.partner({tri, e}).tri;
          if (!seen[other]) {
            seen[other] = 1;
            ++found;
            stack.push_back(other);
          }
        }
    }
    connected = found == F;
  }
  rep.add("connected", connected);
  if (!connected) return rep;

  // Euler characteristic and vertex classes. Corners identified across
  // gluings must realize exactly the marked points.
  detail::UnionFind uf(3 * F);
  for (int a = 0; a < A; ++a) {
    auto [x, y] = t.arcs[a];
    uf.unite(detail::corner_id(x.tri, x.side), detail::corner_id(y.tri, (y.side + 1) % 3));
    uf.unite(detail::corner_id(x.tri, (x.side + 1) % 3), detail::corner_id(y.tri, y.side));
  }
  std::map<int, MarkedPoint> class_label;
  bool classes_ok = true;
  for (int tri = 0; tri < F; ++tri)
    for (int c = 0; c < 3; ++c) {
      int root = uf.find(detail::corner_id(tri, c));
      auto it = class_label.find(root);
      if (it == class_label.end())
        class_label[root] = t.corners[tri][c];
      else if (!(it->second == t.corners[tri][c]))
        classes_ok = false;
    }
  std::set<MarkedPoint> class_points;
  for (auto& [root, mp] : class_label)
    if (!class_points.insert(mp).second) classes_ok = false;  // one fan per marked point
  if (static_cast<int>(class_label.size()) != s.total_marked_points()) classes_ok = false;
  rep.add("vertex-classes", classes_ok);

  int V = static_cast<int>(class_label.size());
  int boundary_sides = 3 * F - 2 * A;
  int E = A + boundary_sides;
  int chi = V - E + F;
  int expected_chi = 2 - 2 * s.genus - s.boundary_components();
  rep.add("euler-characteristic", chi == expected_chi,
          "chi=" + std::to_string(chi) + " expected=" + std::to_string(expected_chi));

  // Boundary walks: one cycle per boundary component, visiting its segments
  // in cyclic order.
  bool walks_ok = true;
  std::string wdetail;
  std::set<SideRef> visited;
  int cycles = 0;
  for (int tri = 0; tri < F && walks_ok; ++tri)
    for (int e = 0; e < 3 && walks_ok; ++e) {
      if (t.sides[tri][e].kind != Side::Kind::Boundary || visited.count({tri, e})) continue;
      ++cycles;
      std::vector<MarkedPoint> walk;
      SideRef cur{tri, e};
      int guard = 0;
      do {
        visited.insert(cur);
        walk.push_back(t.sides[cur.tri][cur.side].segment);
        // Pivot around the head vertex of `cur` to the next boundary side.
        SideRef cand{cur.tri, (cur.side + 1) % 3};
        while (t.side(cand).kind == Side::Kind::Arc) {
          SideRef p = t.partner(cand);
          cand = {p.tri, (p.side + 1) % 3};
          if (++guard > 6 * F + 6) {
            walks_ok = false;
            wdetail = "boundary walk does not close";
            break;
          }
        }
        if (!walks_ok) break;
        cur = cand;
      } while (!(cur == SideRef{tri, e}) && walks_ok && ++guard <= 6 * F + 6);
      if (!walks_ok) break;
      int comp = walk[0].component;
      int m = s.marked_points(comp);
      if (static_cast<int>(walk.size()) != m) {
        walks_ok = false;
        wdetail = "boundary cycle has the wrong length";
        break;
      }
      for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i].component != comp || walk[i].index != (walk[0].index + static_cast<int>(i)) % m) {
          walks_ok = false;
          wdetail = "segments out of cyclic order";
        }
    }
  if (walks_ok && cycles != s.boundary_components()) {
    walks_ok = false;
    wdetail = "boundary cycle count " + std::to_string(cycles);
  }
  rep.add("boundary-walks", walks_ok, wdetail);

  // The counts the paper fixes for ideal triangulations.
  Counts want = expected_counts(s);
  rep.add("arc-count", A == want.arcs,
          std::to_string(A) + " expected " + std::to_string(want.arcs));
  rep.add("face-count", F == want.faces,
          std::to_string(F) + " expected " + std::to_string(want.faces));
  return rep;
}

// ---------------------------------------------------------------------------
// Flip

inline bool flippable(const IdealTriangulation& t, int arc) {
  if (arc < 0 || arc >= t.arc_count()) throw argument_error("flippable: unknown arc id");
  return t.arcs[arc].first.tri != t.arcs[arc].second.tri;
}

// Quadrilateral flip at `arc`; the new arc keeps the id.
inline IdealTriangulation flip(const IdealTriangulation& t, int arc) {
  if (arc < 0 || arc >= t.arc_count()) throw argument_error("flip: unknown arc id");
  auto [s1, s2] = t.arcs[arc];
  int t1 = s1.tri, e1 = s1.side;
  int t2 = s2.tri, e2 = s2.side;
  if (t1 == t2) throw flip_undefined_error("flip: arc bounds the same triangle on both sides");

  // Quadrilateral A,D,B,C (ccw): diagonal A-B flips to C-D.
  MarkedPoint A = t.corners[t1][e1];
  MarkedPoint B = t.corners[t1][(e1 + 1) % 3];
  MarkedPoint C = t.corners[t1][(e1 + 2) % 3];
  MarkedPoint D = t.corners[t2][(e2 + 2) % 3];

  IdealTriangulation out = t;
  out.corners[t1] = {D, B, C};
  out.corners[t2] = {C, A, D};

  // Outer payloads move to fixed slots of the rebuilt triangles.
  std::map<SideRef, SideRef> remap = {
      {SideRef{t2, (e2 + 2) % 3}, SideRef{t1, 0}},  // D->B
      {SideRef{t1, (e1 + 1) % 3}, SideRef{t1, 1}},  // B->C
      {SideRef{t1, (e1 + 2) % 3}, SideRef{t2, 0}},  // C->A
      {SideRef{t2, (e2 + 1) % 3}, SideRef{t2, 1}},  // A->D
  };
  std::array<Side, 3> n1, n2;
  n1[0] = t.sides[t2][(e2 + 2) % 3];
  n1[1] = t.sides[t1][(e1 + 1) % 3];
  n2[0] = t.sides[t1][(e1 + 2) % 3];
  n2[1] = t.sides[t2][(e2 + 1) % 3];
  n1[2] = Side{Side::Kind::Arc, arc, {}};
  n2[2] = Side{Side::Kind::Arc, arc, {}};
  out.sides[t1] = n1;
  out.sides[t2] = n2;

  for (int a = 0; a < out.arc_count(); ++a) {
    if (a == arc) {
      out.arcs[a] = {SideRef{t1, 2}, SideRef{t2, 2}};
      continue;
    }
    auto fix = [&](SideRef r) {
      auto it = remap.find(r);
      return it == remap.end() ? r : it->second;
    };
    out.arcs[a] = {fix(out.arcs[a].first), fix(out.arcs[a].second)};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: minimum over all (start triangle, rotation) of a
// deterministic traversal encoding. Marked-point and segment labels are
// emitted verbatim, so mapping classes moving labeled data stay distinct.

inline std::vector<int> canonical_encoding(const IdealTriangulation& t) {
  int F = t.triangle_count();
  std::vector<int> best;
  for (int t0 = 0; t0 < F; ++t0)
    for (int r0 = 0; r0 < 3; ++r0) {
      std::vector<int> index(F, -1), rot(F, 0), order;
      index[t0] = 0;
      rot[t0] = r0;
      order.push_back(t0);
      for (size_t q = 0; q < order.size(); ++q) {
        int tri = order[q];
        for (int s = 0; s < 3; ++s) {
          int e = (s + rot[tri]) % 3;
          if (t.sides[tri][e].kind != Side::Kind::Arc) continue;
          SideRef p = t.partner({tri, e});
          if (index[p.tri] == -1) {
            index[p.tri] = static_cast<int>(order.size());
            rot[p.tri] = p.side;
            order.push_back(p.tri);
          }
        }
      }
      if (static_cast<int>(order.size()) != F) continue;  // disconnected: skip start
      std::vector<int> enc;
      enc.reserve(F * 15);
      for (int tri : order) {
        for (int s = 0; s < 3; ++s) {
          int e = (s + rot[tri]) % 3;
          const Side& sd = t.sides[tri][e];
          if (sd.kind == Side::Kind::Boundary) {
            enc.push_back(-1);
            enc.push_back(sd.segment.component);
            enc.push_back(sd.segment.index);
          } else {
            SideRef p = t.partner({tri, e});
            enc.push_back(-2);
            enc.push_back(index[p.tri]);
            enc.push_back(((p.side - rot[p.tri]) % 3 + 3) % 3);
          }
          const MarkedPoint& mp = t.corners[tri][e];
          enc.push_back(mp.component);
          enc.push_back(mp.index);
        }
      }
      if (best.empty() || enc < best) best = std::move(enc);
    }
  return best;
}

inline bool triangulations_equal(const IdealTriangulation& a, const IdealTriangulation& b) {
  return canonical_encoding(a) == canonical_encoding(b);
}

// ---------------------------------------------------------------------------
// Dual quiver with potential

inline quiver::QuiverWithPotential dual_quiver_with_potential(const IdealTriangulation& t) {
  quiver::QuiverWithPotential q;
  q.vertices = t.arc_count();
  // Per triangle, per corner e: arrow from side e to side (e+2)%3 when both
  // are arcs; the three arrows of an interior triangle trace the inscribed
  // clockwise 3-cycle.
  std::vector<std::array<int, 3>> arrow_at(t.triangle_count(), {-1, -1, -1});
  for (int tri = 0; tri < t.triangle_count(); ++tri)
    for (int e = 0; e < 3; ++e) {
      const Side& out_side = t.sides[tri][e];
      const Side& in_side = t.sides[tri][(e + 2) % 3];
      if (out_side.kind == Side::Kind::Arc && in_side.kind == Side::Kind::Arc) {
        arrow_at[tri][e] = static_cast<int>(q.arrows.size());
        q.arrows.push_back({out_side.arc, in_side.arc});
      }
    }
  for (int tri = 0; tri < t.triangle_count(); ++tri)
    if (t.interior_triangle(tri))
      q.potential.push_back({1, {arrow_at[tri][0], arrow_at[tri][2], arrow_at[tri][1]}});
  quiver::validate(q);
  return q;
}

// ---------------------------------------------------------------------------
// Triangulation graph (bounded BFS of flips, canonical-form dedup)

struct TriangulationGraph {
  std::vector<IdealTriangulation> vertices;  // BFS discovery order
  std::vector<int> depth;                    // flip distance from the seed
  Graph graph;
  bool frontier = false;  // true iff truncated by the depth bound
};

inline TriangulationGraph triangulation_graph(const IdealTriangulation& seed, int depth_bound,
                                              int max_vertices = 100000) {
  if (depth_bound < -1) throw argument_error("triangulation_graph: invalid depth");
  TriangulationGraph out;
  std::map<std::vector<int>, int> index;
  std::set<std::pair<int, int>> edges;

  out.vertices.push_back(seed);
  out.depth.push_back(0);
  index[canonical_encoding(seed)] = 0;

  for (size_t q = 0; q < out.vertices.size(); ++q) {
    if (depth_bound >= 0 && out.depth[q] >= depth_bound) {
      // Unexpanded vertex at the cut: the graph shown is a truncation.
      out.frontier = true;
      continue;
    }
    IdealTriangulation cur = out.vertices[q];
    for (int a = 0; a < cur.arc_count(); ++a) {
      if (!flippable(cur, a)) continue;
      IdealTriangulation next = flip(cur, a);
      auto enc = canonical_encoding(next);
      auto it = index.find(enc);
      int id;
      if (it == index.end()) {
        id = static_cast<int>(out.vertices.size());
        if (id >= max_vertices) throw resource_error("triangulation_graph: vertex cap exceeded");
        index[enc] = id;
        out.vertices.push_back(std::move(next));
        out.depth.push_back(out.depth[q] + 1);
      } else {
        id = it->second;
      }
      int u = static_cast<int>(q), v = id;
      if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  out.graph = Graph(static_cast<int>(out.vertices.size()));
  for (auto [u, v] : edges) out.graph.add_edge(u, v);
  out.graph.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// Builders

// Triangulated disc surface (0,(d+2)) from a polygon triangulation given as
// ccw triangle faces of the d-gon plus the chord list (sorted; arc id =
// position in `chords`). Faces come from polygon::faces.
inline IdealTriangulation disc_triangulation(int d, const std::vector<std::pair<int, int>>& chords,
                                             const std::vector<std::vector<int>>& tri_faces) {
  IdealTriangulation t;
  auto chord_id = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (size_t i = 0; i < chords.size(); ++i)
      if (chords[i] == std::pair{a, b}) return static_cast<int>(i);
    throw argument_error("disc_triangulation: side is neither boundary nor a listed chord");
  };
  t.arcs.assign(chords.size(), {SideRef{}, SideRef{}});
  std::vector<int> arc_hits(chords.size(), 0);
  for (const auto& f : tri_faces) {
    if (f.size() != 3) throw argument_error("disc_triangulation: non-triangle face");
    int tri = t.triangle_count();
    std::array<MarkedPoint, 3> cs;
    std::array<Side, 3> ss;
    for (int e = 0; e < 3; ++e) {
      int u = f[e], v = f[(e + 1) % 3];
      cs[e] = MarkedPoint{0, u};
      if ((u + 1) % d == v) {
        ss[e] = Side{Side::Kind::Boundary, -1, MarkedPoint{0, u}};
      } else {
        int id = chord_id(u, v);
        ss[e] = Side{Side::Kind::Arc, id, {}};
        if (arc_hits[id]++ == 0)
          t.arcs[id].first = SideRef{tri, e};
        else
          t.arcs[id].second = SideRef{tri, e};
      }
    }
    t.corners.push_back(cs);
    t.sides.push_back(ss);
  }
  for (int h : arc_hits)
    if (h != 2) throw argument_error("disc_triangulation: chord not shared by two faces");
  return t;
}

// Annulus (0,(3,3)): one marked point per boundary circle, two arcs, two
// triangles. Component 0 = outer (point p), component 1 = inner (point q).
inline IdealTriangulation annulus_triangulation() {
  IdealTriangulation t;
  MarkedPoint p{0, 0}, q{1, 0};
  t.corners = {{q, q, p}, {q, p, p}};
  t.sides.resize(2);
  t.sides[0][0] = Side{Side::Kind::Boundary, -1, q};
  t.sides[0][1] = Side{Side::Kind::Arc, 0, {}};
  t.sides[0][2] = Side{Side::Kind::Arc, 1, {}};
  t.sides[1][0] = Side{Side::Kind::Arc, 1, {}};
  t.sides[1][1] = Side{Side::Kind::Boundary, -1, p};
  t.sides[1][2] = Side{Side::Kind::Arc, 0, {}};
  t.arcs = {{SideRef{0, 1}, SideRef{1, 2}}, {SideRef{0, 2}, SideRef{1, 0}}};
  return t;
}

// Bordered torus (1,(3)): pentagon a b a^- b^- c with c the single boundary
// segment, fanned from the corner the boundary ends at. Four arcs, three
// triangles, one marked point.
inline IdealTriangulation torus_triangulation() {
  IdealTriangulation t;
  MarkedPoint p{0, 0};
  t.corners = {{p, p, p}, {p, p, p}, {p, p, p}};
  t.sides.resize(3);
  // arcs: 0 = fan diagonal y, 1 = fan diagonal z, 2 = side a, 3 = side b
  t.sides[0][0] = Side{Side::Kind::Boundary, -1, p};
  t.sides[0][1] = Side{Side::Kind::Arc, 2, {}};
  t.sides[0][2] = Side{Side::Kind::Arc, 0, {}};
  t.sides[1][0] = Side{Side::Kind::Arc, 0, {}};
  t.sides[1][1] = Side{Side::Kind::Arc, 3, {}};
  t.sides[1][2] = Side{Side::Kind::Arc, 1, {}};
  t.sides[2][0] = Side{Side::Kind::Arc, 1, {}};
  t.sides[2][1] = Side{Side::Kind::Arc, 2, {}};
  t.sides[2][2] = Side{Side::Kind::Arc, 3, {}};
  t.arcs = {{SideRef{0, 2}, SideRef{1, 0}},
            {SideRef{1, 2}, SideRef{2, 0}},
            {SideRef{0, 1}, SideRef{2, 1}},
            {SideRef{1, 1}, SideRef{2, 2}}};
  return t;
}

}  // namespace flipkit::surface
