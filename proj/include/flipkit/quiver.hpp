#pragma once

// Quivers with potential, Fomin-Zelevinsky matrix mutation, the named quivers
// of the flopping-contraction examples, and the CY3 Euler pairing shadow.

#include <cstdint>
#include <string>
#include <vector>

#include "flipkit/errors.hpp"
#include "flipkit/intmat.hpp"

namespace flipkit::quiver {

struct Arrow {
  int from = 0;
  int to = 0;
};

// A cyclic word of arrows, head to tail; stored by arrow id so that parallel
// arrows (conifold e,e',f,f') stay distinguishable.
struct PotentialTerm {
  std::int64_t coef = 1;
  std::vector<int> arrows;
};

struct QuiverWithPotential {
  int vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<PotentialTerm> potential;

  std::int64_t arrow_count(int i, int j) const {
    std::int64_t c = 0;
    for (const auto& a : arrows)
      if (a.from == i && a.to == j) ++c;
    return c;
  }
};

inline void validate(const QuiverWithPotential& q) {
  for (const auto& a : q.arrows)
    if (a.from < 0 || a.to < 0 || a.from >= q.vertices || a.to >= q.vertices)
      throw argument_error("quiver: arrow endpoint out of range");
  for (const auto& t : q.potential) {
    if (t.arrows.empty()) throw argument_error("quiver: empty potential cycle");
    for (size_t i = 0; i < t.arrows.size(); ++i) {
      int id = t.arrows[i];
      if (id < 0 || id >= static_cast<int>(q.arrows.size()))
        throw argument_error("quiver: potential names a missing arrow");
      int next = t.arrows[(i + 1) % t.arrows.size()];
      if (q.arrows[id].to != q.arrows[next].from)
        throw argument_error("quiver: potential cycle does not compose");
    }
  }
}

inline IntMat exchange_matrix(const QuiverWithPotential& q) {
  IntMat b(q.vertices, q.vertices);
  for (const auto& a : q.arrows) {
    if (a.from == a.to) continue;
    b(a.from, a.to) += 1;
    b(a.to, a.from) -= 1;
  }
  return b;
}

// Standard matrix mutation at vertex k.
inline IntMat mutate(const IntMat& b, int k) {
  int n = b.rows();
  if (b.cols() != n) throw argument_error("mutate: matrix must be square");
  if (k < 0 || k >= n) throw argument_error("mutate: vertex out of range");
  IntMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        std::int64_t bik = b(i, k), bkj = b(k, j);
        std::int64_t sgn = bik > 0 ? 1 : bik < 0 ? -1 : 0;
        std::int64_t prod = bik * bkj;
        out(i, j) = b(i, j) + sgn * (prod > 0 ? prod : 0);
      }
    }
  return out;
}

// 2-cycle with potential (ef)^2.
inline QuiverWithPotential double_bubble_quiver() {
  QuiverWithPotential q;
  q.vertices = 2;
  q.arrows = {{0, 1}, {1, 0}};  // e = 0, f = 1
  q.potential = {{1, {0, 1, 0, 1}}};
  return q;
}

// Two vertices, doubled arrows, potential efe'f' - ef'e'f.
inline QuiverWithPotential conifold_quiver() {
  QuiverWithPotential q;
  q.vertices = 2;
  q.arrows = {{0, 1}, {0, 1}, {1, 0}, {1, 0}};  // e = 0, e' = 1, f = 2, f' = 3
  q.potential = {{1, {0, 2, 1, 3}}, {-1, {0, 3, 1, 2}}};
  return q;
}

// Linear orientation, no potential.
inline QuiverWithPotential a_k_quiver(int k) {
  if (k < 1) throw argument_error("a_k_quiver: k must be >= 1");
  QuiverWithPotential q;
  q.vertices = k;
  for (int i = 0; i + 1 < k; ++i) q.arrows.push_back({i, i + 1});
  return q;
}

// chi_ij = a_ij - a_ji: Ext^0/Ext^3 cancel and Ext^1, Ext^2 pair off under
// CY3 duality, leaving the skew-symmetrized arrow count.
inline IntMat euler_pairing_cy3(const QuiverWithPotential& q) {
  IntMat chi(q.vertices, q.vertices);
  for (int i = 0; i < q.vertices; ++i)
    for (int j = 0; j < q.vertices; ++j)
      if (i != j) chi(i, j) = q.arrow_count(i, j) - q.arrow_count(j, i);
  return chi;
}

}  // namespace flipkit::quiver
