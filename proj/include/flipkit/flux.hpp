#pragma once

// Morse-Bott-Lefschetz fibrations over the (punctured) plane with twist and
// flux markers. Monodromy composes marker transforms over signed crossings of
// the vertical downward branch cut below each marker; matching paths carry
// transported (class, level) data; disjointness of matching spheres is
// certified by exact level comparison at common base points.
//
// All geometry is exact rational. Levels accumulate additively over flux-cut
// crossings (Dehn twists act trivially on levels), which is the sense in
// which iterated monodromies add fluxes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flipkit/errors.hpp"
#include "flipkit/intmat.hpp"
#include "flipkit/rational.hpp"

namespace flipkit::flux {

// ---------------------------------------------------------------------------
// Fiber data

struct IntVec2 {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const IntVec2& a, const IntVec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const IntVec2& a, const IntVec2& b) { return !(a == b); }
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline bool is_primitive(const IntVec2& v) {
  if (v.x == 0 && v.y == 0) return false;
  return std::gcd(std::llabs(v.x), std::llabs(v.y)) == 1;
}

// First nonzero coordinate positive.
inline IntVec2 normalize_sign(IntVec2 v) {
  if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
  return v;
}

inline std::int64_t det2(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }

inline IntVec2 apply(const IntMat& m, const IntVec2& v) {
  return {m(0, 0) * v.x + m(0, 1) * v.y, m(1, 0) * v.x + m(1, 1) * v.y};
}

inline Vec2 apply(const IntMat& m, const Vec2& v) {
  return {Rat(m(0, 0)) * v.x + Rat(m(0, 1)) * v.y, Rat(m(1, 0)) * v.x + Rat(m(1, 1)) * v.y};
}

// Homology shadow of the Dehn twist: x -> x + det(v, x) v.
inline IntMat dehn_twist_matrix(const IntVec2& v) {
  if (!is_primitive(v)) throw argument_error("dehn_twist_matrix: class must be primitive");
  IntMat m = IntMat::identity(2);
  m(0, 0) -= v.y * v.x;
  m(0, 1) += v.x * v.x;
  m(1, 0) -= v.y * v.y;
  m(1, 1) += v.x * v.y;
  return m;
}

struct FiberAuto {
  IntMat A = IntMat::identity(2);  // det 1
  Vec2 u;                          // flux vector

  static FiberAuto identity() { return {}; }
};

inline FiberAuto make_fiber_auto(IntMat a, Vec2 u) {
  if (a.rows() != 2 || a.cols() != 2 || a.det2() != 1)
    throw argument_error("FiberAuto: matrix must be 2x2 with determinant 1");
  return {std::move(a), std::move(u)};
}

// Semi-direct composition (g first).
inline FiberAuto compose(const FiberAuto& f, const FiberAuto& g) {
  return {f.A * g.A, f.u + apply(f.A, g.u)};
}

inline FiberAuto inverse(const FiberAuto& f) {
  IntMat inv(2, 2);
  inv(0, 0) = f.A(1, 1);
  inv(0, 1) = -f.A(0, 1);
  inv(1, 0) = -f.A(1, 0);
  inv(1, 1) = f.A(0, 0);
  Vec2 nu = apply(inv, f.u);
  return {inv, {-nu.x, -nu.y}};
}

struct Cycle {
  IntVec2 v;   // primitive fiber class
  Vec2 level;  // rational flux level
};

inline Cycle make_cycle(IntVec2 v, Vec2 level = {}) {
  if (!is_primitive(v)) throw argument_error("Cycle: class must be primitive");
  return {normalize_sign(v), std::move(level)};
}

// Class moves by the matrix; the level only by the flux vector.
inline Cycle act_on_cycle(const FiberAuto& f, const Cycle& c) {
  return {normalize_sign(apply(f.A, c.v)), c.level + f.u};
}

// ---------------------------------------------------------------------------
// Fibrations

struct Marker {
  enum class Kind { Twist, Flux } kind = Kind::Twist;
  Vec2 pos;
  IntVec2 twist_class;  // Kind::Twist
  Vec2 flux;            // Kind::Flux
};

inline Marker twist_marker(Vec2 pos, IntVec2 v) {
  if (!is_primitive(v)) throw argument_error("twist marker: class must be primitive");
  Marker m;
  m.kind = Marker::Kind::Twist;
  m.pos = std::move(pos);
  m.twist_class = normalize_sign(v);
  return m;
}

inline Marker flux_marker(Vec2 pos, Vec2 u) {
  Marker m;
  m.kind = Marker::Kind::Flux;
  m.pos = std::move(pos);
  m.flux = std::move(u);
  return m;
}

struct Fibration {
  enum class Base { Plane, PuncturedPlane } base = Base::Plane;
  std::vector<Marker> markers;
};

inline void validate_fibration(const Fibration& f) {
  for (size_t i = 0; i < f.markers.size(); ++i)
    for (size_t j = i + 1; j < f.markers.size(); ++j)
      if (f.markers[i].pos == f.markers[j].pos)
        throw argument_error("fibration: marker positions must be distinct");
  if (f.base == Fibration::Base::PuncturedPlane) {
    Vec2 origin{};
    for (const auto& m : f.markers)
      if (m.pos == origin && m.kind != Marker::Kind::Flux)
        throw argument_error("fibration: only a flux marker may sit on the puncture");
  }
}

inline FiberAuto marker_transform(const Marker& m) {
  if (m.kind == Marker::Kind::Twist) return {dehn_twist_matrix(m.twist_class), Vec2{}};
  return {IntMat::identity(2), m.flux};
}

// ---------------------------------------------------------------------------
// Exact polyline geometry

using Path = std::vector<Vec2>;

inline bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (cross(b - a, p - a) != Rat(0)) return false;
  Rat lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
  Rat loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
  return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

struct SegIntersection {
  enum class Kind { None, Point, Overlap } kind = Kind::None;
  Vec2 point;        // Kind::Point
  Rat t1, u1;        // params on the two segments for Kind::Point
  Vec2 ov_a, ov_b;   // Kind::Overlap endpoints
};

inline SegIntersection segment_intersection(const Vec2& p1, const Vec2& q1, const Vec2& p2,
                                            const Vec2& q2) {
  SegIntersection out;
  Vec2 d1 = q1 - p1, d2 = q2 - p2;
  Rat denom = cross(d1, d2);
  if (denom != Rat(0)) {
    Rat t = cross(p2 - p1, d2) / denom;
    Rat u = cross(p2 - p1, d1) / denom;
    if (Rat(0) <= t && t <= Rat(1) && Rat(0) <= u && u <= Rat(1)) {
      out.kind = SegIntersection::Kind::Point;
      out.point = p1 + t * d1;
      out.t1 = t;
      out.u1 = u;
    }
    return out;
  }
  if (cross(p2 - p1, d1) != Rat(0)) return out;  // parallel, distinct lines
  // Collinear: project on the dominant axis of d1.
  bool use_x = !(d1.x == Rat(0));
  auto coord = [&](const Vec2& v) { return use_x ? v.x : v.y; };
  Rat a1 = coord(p1), b1 = coord(q1), a2 = coord(p2), b2 = coord(q2);
  if (a1 > b1) std::swap(a1, b1);
  if (a2 > b2) std::swap(a2, b2);
  Rat lo = std::max(a1, a2), hi = std::min(b1, b2);
  if (lo > hi) return out;
  auto at = [&](const Rat& c) -> Vec2 {
    if (use_x) {
      Rat t = (c - p1.x) / d1.x;
      return p1 + t * d1;
    }
    Rat t = (c - p1.y) / d1.y;
    return p1 + t * d1;
  };
  if (lo == hi) {
    out.kind = SegIntersection::Kind::Point;
    out.point = at(lo);
    return out;
  }
  out.kind = SegIntersection::Kind::Overlap;
  out.ov_a = at(lo);
  out.ov_b = at(hi);
  return out;
}

inline void check_path(const Path& p) {
  if (p.size() < 2) throw argument_error("path: need at least two vertices");
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) throw argument_error("path: repeated consecutive vertex");
}

// Simple = non-self-intersecting (consecutive segments share their vertex).
inline bool path_is_simple(const Path& p) {
  check_path(p);
  size_t n = p.size() - 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto si = segment_intersection(p[i], p[i + 1], p[j], p[j + 1]);
      if (si.kind == SegIntersection::Kind::None) continue;
      if (si.kind == SegIntersection::Kind::Overlap) return false;
      if (j == i + 1) {
        if (!(si.point == p[j])) return false;
      } else if (j == n - 1 && i == 0 && si.point == p.front() && si.point == p.back()) {
        return false;  // closed loops are not matching paths
      } else {
        return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Branch-cut crossings and monodromy

struct CutCrossing {
  size_t segment = 0;
  Rat t;        // parameter within the segment
  size_t marker = 0;
  int sign = 0;  // +1 for a left-to-right crossing of the downward cut
};

namespace detail {

// Crossings of one segment with the cut below marker m; vertices exactly on
// the cut line count as the right side, so grazing vertices never double.
inline void segment_cut_crossings(const Vec2& a, const Vec2& b, size_t seg, size_t midx,
                                  const Marker& m, std::vector<CutCrossing>& out) {
  bool a_right = a.x >= m.pos.x, b_right = b.x >= m.pos.x;
  if (a_right == b_right) return;
  Rat t = (m.pos.x - a.x) / (b.x - a.x);
  Rat y = a.y + t * (b.y - a.y);
  if (y >= m.pos.y) return;  // at or above the marker: not on the cut
  out.push_back({seg, t, midx, a_right ? -1 : +1});
}

}  // namespace detail

inline std::vector<CutCrossing> cut_crossings(const Path& p, const Fibration& fib) {
  check_path(p);
  std::vector<CutCrossing> out;
  for (size_t s = 0; s + 1 < p.size(); ++s)
    for (size_t mi = 0; mi < fib.markers.size(); ++mi)
      detail::segment_cut_crossings(p[s], p[s + 1], s, mi, fib.markers[mi], out);
  std::sort(out.begin(), out.end(), [](const CutCrossing& a, const CutCrossing& b) {
    if (a.segment != b.segment) return a.segment < b.segment;
    return a.t < b.t;
  });
  return out;
}

inline void check_path_avoids_markers(const Path& p, const Fibration& fib,
                                      bool endpoints_allowed) {
  for (size_t s = 0; s + 1 < p.size(); ++s) {
    for (const auto& m : fib.markers) {
      if (!point_on_segment(m.pos, p[s], p[s + 1])) continue;
      bool at_start = s == 0 && m.pos == p.front();
      bool at_end = s + 2 == p.size() && m.pos == p.back();
      if (endpoints_allowed && (at_start || at_end)) continue;
      throw geometry_error("path passes through a marker at " + m.pos.str());
    }
    if (fib.base == Fibration::Base::PuncturedPlane) {
      Vec2 origin{};
      if (point_on_segment(origin, p[s], p[s + 1]))
        throw geometry_error("path passes through the puncture");
    }
  }
}

// Product of marker transforms over the crossings, first-crossed first.
inline FiberAuto monodromy_along(const Path& p, const Fibration& fib) {
  validate_fibration(fib);
  check_path_avoids_markers(p, fib, /*endpoints_allowed=*/false);
  FiberAuto total = FiberAuto::identity();
  for (const auto& c : cut_crossings(p, fib)) {
    FiberAuto step = marker_transform(fib.markers[c.marker]);
    if (c.sign < 0) step = inverse(step);
    total = compose(step, total);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Surgery typing

enum class SurgeryType { SphereProduct, ThreeSphere, LensLike };

struct Surgery {
  SurgeryType type = SurgeryType::ThreeSphere;
  std::int64_t p = 1;  // |det| for LensLike
  std::string str() const {
    switch (type) {
      case SurgeryType::SphereProduct: return "SphereProduct";
      case SurgeryType::ThreeSphere: return "ThreeSphere";
      case SurgeryType::LensLike: return "LensLike(" + std::to_string(p) + ")";
    }
    return "?";
  }
};

inline Surgery surgery_type(const IntVec2& v1, const IntVec2& v2) {
  if (!is_primitive(v1) || !is_primitive(v2))
    throw argument_error("surgery_type: classes must be primitive");
  if (normalize_sign(v1) == normalize_sign(v2)) return {SurgeryType::SphereProduct, 0};
  std::int64_t d = std::llabs(det2(v1, v2));
  if (d == 1) return {SurgeryType::ThreeSphere, 1};
  return {SurgeryType::LensLike, d};
}

// ---------------------------------------------------------------------------
// Matching paths

// Additive flux level accumulated from the start of the path up to (but
// excluding) parameter (segment, t).
inline Vec2 level_before(const Path& p, const Fibration& fib, size_t segment, const Rat& t) {
  Vec2 level{};
  for (const auto& c : cut_crossings(p, fib)) {
    if (c.segment > segment || (c.segment == segment && !(c.t < t))) continue;
    const Marker& m = fib.markers[c.marker];
    if (m.kind != Marker::Kind::Flux) continue;
    level = c.sign > 0 ? level + m.flux : level - m.flux;
  }
  return level;
}

// Class transported from the start of the path to parameter (segment, t).
inline IntVec2 class_before(const Path& p, const Fibration& fib, const IntVec2& v0, size_t segment,
                            const Rat& t) {
  IntMat total = IntMat::identity(2);
  for (const auto& c : cut_crossings(p, fib)) {
    if (c.segment > segment || (c.segment == segment && !(c.t < t))) continue;
    const Marker& m = fib.markers[c.marker];
    if (m.kind != Marker::Kind::Twist) continue;
    IntMat tw = dehn_twist_matrix(m.twist_class);
    if (c.sign < 0) {
      IntMat inv(2, 2);
      inv(0, 0) = tw(1, 1);
      inv(0, 1) = -tw(0, 1);
      inv(1, 0) = -tw(1, 0);
      inv(1, 1) = tw(0, 0);
      tw = inv;
    }
    total = tw * total;
  }
  return normalize_sign(apply(total, v0));
}

struct MatchingData {
  bool matching = false;
  IntVec2 class_a, class_b;  // endpoint classes transported to the midpoint
  Vec2 level_a, level_b;     // transported levels at the midpoint
  Surgery surgery;
  std::string note;
};

inline Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// Transports each endpoint's twist class with zero level to the midpoint of
// the middle segment and checks exact level agreement.
inline MatchingData matching_data(const Path& p, const Fibration& fib) {
  validate_fibration(fib);
  check_path(p);
  if (!path_is_simple(p)) throw geometry_error("matching path must be a simple polyline");
  check_path_avoids_markers(p, fib, /*endpoints_allowed=*/true);

  auto marker_at = [&](const Vec2& pos) -> const Marker* {
    for (const auto& m : fib.markers)
      if (m.pos == pos && m.kind == Marker::Kind::Twist) return &m;
    return nullptr;
  };
  const Marker* ma = marker_at(p.front());
  const Marker* mb = marker_at(p.back());
  if (!ma || !mb) throw argument_error("matching path must end at two twist markers");

  size_t nseg = p.size() - 1;
  size_t mid_seg = nseg / 2;
  Rat mid_t(1, 2);

  MatchingData out;
  out.class_a = class_before(p, fib, ma->twist_class, mid_seg, mid_t);
  out.level_a = level_before(p, fib, mid_seg, mid_t);

  Path rev = reversed(p);
  size_t rev_seg = nseg - 1 - mid_seg;
  Rat rev_t = Rat(1) - mid_t;
  out.class_b = class_before(rev, fib, mb->twist_class, rev_seg, rev_t);
  out.level_b = level_before(rev, fib, rev_seg, rev_t);

  out.surgery = surgery_type(out.class_a, out.class_b);
  out.matching = out.level_a == out.level_b;
  if (!out.matching)
    out.note = "transported levels disagree: " + out.level_a.str() + " vs " + out.level_b.str();
  return out;
}

// ---------------------------------------------------------------------------
// Disjointness of matching spheres

struct CommonPoint {
  Vec2 at;
  Vec2 level1, level2;
  bool ambiguous = false;  // the point lies exactly on a branch cut
};

struct DisjointResult {
  enum class Verdict { Disjoint, Unknown } verdict = Verdict::Unknown;
  std::vector<CommonPoint> certificate;  // every compared common point
  int excluded_shared_endpoints = 0;
  std::string note;
};

namespace detail {

inline bool on_some_cut(const Vec2& pt, const Fibration& fib) {
  for (const auto& m : fib.markers)
    if (pt.x == m.pos.x && pt.y < m.pos.y) return true;
  return false;
}

// Locate a point on a path as (segment, parameter); the point must lie on it.
inline std::pair<size_t, Rat> locate(const Path& p, const Vec2& pt) {
  for (size_t s = 0; s + 1 < p.size(); ++s) {
    if (!point_on_segment(pt, p[s], p[s + 1])) continue;
    Vec2 d = p[s + 1] - p[s];
    Rat t = d.x != Rat(0) ? (pt.x - p[s].x) / d.x : (pt.y - p[s].y) / d.y;
    return {s, t};
  }
  throw geometry_error("locate: point not on path");
}

}  // namespace detail

// Levels compared at every common base point. Shared twist-marker endpoints
// are excluded: over a Morse-Bott critical value the two cones sit on
// transverse-level circles that the zero-level shadow does not pin, and the
// disjointness mechanism of the deformed fibration lives at the interior
// crossings.
inline DisjointResult spheres_disjoint(const Path& p1, const Path& p2, const Fibration& fib) {
  validate_fibration(fib);
  MatchingData m1 = matching_data(p1, fib);
  MatchingData m2 = matching_data(p2, fib);
  if (!m1.matching || !m2.matching)
    throw argument_error("spheres_disjoint: both paths must be matching");

  // Collect common points; collinear overlaps contribute their midpoint and
  // endpoints plus a sample between any two cut crossings inside.
  std::vector<Vec2> commons;
  size_t n1 = p1.size() - 1, n2 = p2.size() - 1;
  for (size_t i = 0; i < n1; ++i)
    for (size_t j = 0; j < n2; ++j) {
      auto si = segment_intersection(p1[i], p1[i + 1], p2[j], p2[j + 1]);
      if (si.kind == SegIntersection::Kind::None) continue;
      if (si.kind == SegIntersection::Kind::Point) {
        commons.push_back(si.point);
      } else {
        commons.push_back(si.ov_a);
        commons.push_back(si.ov_b);
        commons.push_back(Rat(1, 2) * (si.ov_a + si.ov_b));
        for (const auto& m : fib.markers) {
          // a cut line may split the overlap; sample each side of it
          if (std::min(si.ov_a.x, si.ov_b.x) < m.pos.x &&
              m.pos.x < std::max(si.ov_a.x, si.ov_b.x)) {
            commons.push_back(Rat(1, 2) * (si.ov_a + Vec2{m.pos.x, m.pos.x}));
            commons.push_back(Rat(1, 2) * (si.ov_b + Vec2{m.pos.x, m.pos.x}));
          }
        }
      }
    }
  std::sort(commons.begin(), commons.end());
  commons.erase(std::unique(commons.begin(), commons.end()), commons.end());

  DisjointResult out;
  bool all_differ = true;
  for (const auto& pt : commons) {
    bool shared_endpoint = (pt == p1.front() || pt == p1.back()) &&
                           (pt == p2.front() || pt == p2.back());
    if (shared_endpoint) {
      ++out.excluded_shared_endpoints;
      continue;
    }
    CommonPoint cp;
    cp.at = pt;
    auto [s1, t1] = detail::locate(p1, pt);
    auto [s2, t2] = detail::locate(p2, pt);
    cp.level1 = level_before(p1, fib, s1, t1);
    cp.level2 = level_before(p2, fib, s2, t2);
    cp.ambiguous = detail::on_some_cut(pt, fib);
    if (cp.ambiguous || cp.level1 == cp.level2) all_differ = false;
    out.certificate.push_back(std::move(cp));
  }

  if (out.certificate.empty()) {
    out.verdict = DisjointResult::Verdict::Disjoint;
    out.note = out.excluded_shared_endpoints
                   ? "base paths disjoint away from shared twist endpoints"
                   : "base paths disjoint";
  } else if (all_differ) {
    out.verdict = DisjointResult::Verdict::Disjoint;
    out.note = "levels differ at every common base point";
  } else {
    out.verdict = DisjointResult::Verdict::Unknown;
    out.note = "a common base point carries equal levels";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wrapped family

namespace detail {

// Point at perimeter fraction t (ccw from the east midpoint) of the square of
// L-infinity radius r centered at c. Piecewise linear in t, radial in r.
inline Vec2 squarepoint(const Vec2& c, const Rat& r, Rat t) {
  // wrap t into [0,1) (floor division; t may be negative)
  BigInt whole = t.num() / t.den();
  if (t.num() < 0 && whole * t.den() != t.num()) whole -= 1;
  Rat frac = t - Rat(whole);
  static const int anchor[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  Rat scaled = Rat(8) * frac;
  BigInt idx_big = scaled.num() / scaled.den();
  int idx = static_cast<int>(idx_big % 8);
  Rat lambda = scaled - Rat(idx_big);
  int jdx = (idx + 1) % 8;
  Vec2 a{Rat(anchor[idx][0]), Rat(anchor[idx][1])};
  Vec2 b{Rat(anchor[jdx][0]), Rat(anchor[jdx][1])};
  Vec2 unit = a + lambda * (b - a);
  return c + r * unit;
}

}  // namespace detail

struct WrappedPair {
  int i = 0, j = 0;
  DisjointResult result;
};

struct WrappedFamily {
  std::vector<Path> paths;
  std::vector<MatchingData> matching;
  std::vector<WrappedPair> pairs;
  bool all_matching = true;
  bool all_disjoint = true;
};

namespace detail {

inline BigInt floor_of(const Rat& x) {
  BigInt q = x.num() / x.den();
  if (x.num() < 0 && q * x.den() != x.num()) q -= 1;
  return q;
}

// Vertices of the sheared spiral theta -> (r linear in theta), sampled on the
// absolute 1/32-turn grid so every square corner is hit exactly (chords never
// cut corners).
inline void emit_spiral(Path& out, const Vec2& center, const Rat& theta_from, const Rat& theta_to,
                        const Rat& r_from, const Rat& r_to) {
  Rat span = theta_to - theta_from;
  if (span == Rat(0)) {
    out.push_back(squarepoint(center, r_to, theta_to));
    return;
  }
  auto r_at = [&](const Rat& th) {
    return r_from + ((th - theta_from) / span) * (r_to - r_from);
  };
  const Rat step(1, 32);
  if (span > Rat(0)) {
    BigInt m = floor_of(Rat(32) * theta_from) + 1;  // smallest m with m/32 > theta_from
    for (Rat th(m, 32); th < theta_to; th += step)
      out.push_back(squarepoint(center, r_at(th), th));
  } else {
    BigInt m = floor_of(Rat(32) * theta_from);  // largest m with m/32 < theta_from
    if (Rat(m, 32) == theta_from) m -= 1;
    for (Rat th(m, 32); th > theta_to; th -= step)
      out.push_back(squarepoint(center, r_at(th), th));
  }
  out.push_back(squarepoint(center, r_to, theta_to));
}

}  // namespace detail

// gamma_k winds k times around the flux marker as a sheared spiral leg in the
// annulus around it, overshoots to strictly negative levels inside the core,
// leaves the annulus as a negative-level leg, and rides a wrapping outer
// spiral back up to level zero at the east twist. Two separations make every
// pairwise crossing level-distinct: the inbound system carries levels >= 0
// and the outbound system levels <= -1, and within each system the lift order
// of the sheared legs is the same at both ends of the annulus (anchors sorted
// with the slopes), which rules out same-sheet crossings. Radial bands keep
// the core unwinding coils and the outer return coils of different paths
// apart. gamma_0 is the plain route over the top.
inline WrappedFamily wrapped_family(const Fibration& fib, int count) {
  validate_fibration(fib);
  if (count < 1) throw argument_error("wrapped_family: need count >= 1");
  const Marker *tw = nullptr, *te = nullptr, *fl = nullptr;
  int twists = 0, fluxes = 0;
  for (const auto& m : fib.markers) {
    if (m.kind == Marker::Kind::Twist) {
      ++twists;
      if (!tw)
        tw = &m;
      else
        te = &m;
    } else {
      ++fluxes;
      fl = &m;
    }
  }
  if (twists != 2 || fluxes != 1)
    throw argument_error("wrapped_family: need exactly two twist markers and one flux marker");
  if (tw->pos.x > te->pos.x) std::swap(tw, te);
  if (!(tw->pos.x < fl->pos.x && fl->pos.x < te->pos.x))
    throw argument_error("wrapped_family: flux marker must separate the twist markers in x");

  int n = count;
  Rat s0 = std::min(fl->pos.x - tw->pos.x, te->pos.x - fl->pos.x);
  const Vec2& c = fl->pos;
  const Rat rim = s0 * Rat(1, 2);    // outer radius of the winding annulus
  const Rat core = s0 * Rat(3, 16);  // inner radius; below is the core zone

  WrappedFamily fam;
  for (int k = 0; k < n; ++k) {
    Path path;
    path.push_back(tw->pos);
    if (k == 0) {
      // over the top at 3/4 s0, above every other structure
      path.push_back(detail::squarepoint(c, s0 * Rat(3, 4), Rat(49, 100)));
      detail::emit_spiral(path, c, Rat(49, 100), Rat(7, 200), s0 * Rat(3, 4), s0 * Rat(3, 4));
      path.push_back(te->pos);
      fam.paths.push_back(std::move(path));
      continue;
    }
    Rat eps = Rat(1, BigInt(100) * BigInt(n + 1));
    // inbound rim anchor in (0.56, 0.64), increasing with the winding slope
    Rat a_k = Rat(14, 25) + Rat(BigInt(8 * k), BigInt(100 * (n + 1)));
    // core unwinding band (deeper paths lower) and outer return band (higher)
    Rat cb = s0 * Rat(12, BigInt(100 * n));
    Rat core_lo = s0 * Rat(1, 20) + Rat(BigInt(n - 1 - k)) * cb;
    Rat core_hi = core_lo + cb * Rat(4, 5);
    Rat tb = s0 * Rat(1, BigInt(10 * n));
    Rat ret_lo = s0 * Rat(31, 50) + Rat(BigInt(k)) * tb;
    Rat ret_hi = ret_lo + tb * Rat(4, 5);
    // lift bookkeeping: unwind past zero to -0.55-..., exit leg at slope k
    Rat land = -Rat(11, 20) - Rat(BigInt(k + 1)) * eps;  // core exit lift (bearing ~0.45)
    Rat o_k = land - Rat(k);                             // rim lift of the outbound leg
    Rat te_lift = -Rat(BigInt(k + 1)) * eps;             // wire end, just below lift 0

    // two-piece fan from tw (stays outside radius 0.58 s0 until the drop)
    path.push_back(detail::squarepoint(c, s0 * Rat(29, 50), a_k));
    path.push_back(detail::squarepoint(c, rim, a_k));
    // inbound leg: k turns, rim -> core edge, levels 0..k
    detail::emit_spiral(path, c, a_k, a_k + Rat(k), rim, core);
    // dive to the bottom of this path's core band
    path.push_back(detail::squarepoint(c, core_lo, a_k + Rat(k)));
    // unwind k+1 crossings inside the band, drifting outward to its top
    detail::emit_spiral(path, c, a_k + Rat(k), land, core_lo, core_hi);
    // rise to the core edge at the landing bearing (level -1 here)
    path.push_back(detail::squarepoint(c, core, land));
    // outbound leg at slope k, core -> rim, levels -1 .. -(k+1)
    detail::emit_spiral(path, c, land, o_k, core, rim);
    // stub up to the outer return band
    path.push_back(detail::squarepoint(c, ret_lo, o_k));
    // return wire: wind back up to level 0 just before te
    detail::emit_spiral(path, c, o_k, te_lift, ret_lo, ret_hi);
    path.push_back(te->pos);
    fam.paths.push_back(std::move(path));
  }

  for (int k = 0; k < n; ++k) {
    fam.matching.push_back(matching_data(fam.paths[k], fib));
    fam.all_matching = fam.all_matching && fam.matching.back().matching;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      WrappedPair pr;
      pr.i = i;
      pr.j = j;
      pr.result = spheres_disjoint(fam.paths[i], fam.paths[j], fib);
      fam.all_disjoint =
          fam.all_disjoint && pr.result.verdict == DisjointResult::Verdict::Disjoint;
      fam.pairs.push_back(std::move(pr));
    }
  return fam;
}

}  // namespace flipkit::flux
