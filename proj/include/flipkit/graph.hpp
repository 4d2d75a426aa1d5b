#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flipkit/errors.hpp"

namespace flipkit {

// Simple undirected graph on vertices 0..n-1 with a canonical edge list.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw argument_error("Graph: negative vertex count");
  }

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  void add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw argument_error("Graph::add_edge: vertex out of range");
    if (a == b) throw argument_error("Graph::add_edge: self-loop");
    if (a > b) std::swap(a, b);
    if (edge_set_.insert({a, b}).second) {
      edges_.push_back({a, b});
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }

  void finalize() {
    std::sort(edges_.begin(), edges_.end());
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  bool adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edge_set_.count({a, b}) > 0;
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++found;
          stack.push_back(w);
        }
    }
    return found == n_;
  }

  std::string to_dot(const std::string& name = "g",
                     const std::vector<std::string>& labels = {}) const {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < n_; ++v) {
      os << "  v" << v;
      if (static_cast<size_t>(v) < labels.size()) os << " [label=\"" << labels[v] << "\"]";
      os << ";\n";
    }
    for (auto [a, b] : edges_) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::set<std::pair<int, int>> edge_set_;
};

struct AutomorphismGroup {
  std::uint64_t order = 0;
  // Greedy irredundant generating set, identity omitted, lexicographically ordered.
  std::vector<std::vector<int>> generators;
  // Every automorphism, in lexicographic order (present because the groups met
  // here are tiny; order == all.size()).
  std::vector<std::vector<int>> all;
};

namespace detail {

// Iterated neighbor-color refinement; stable colors prune the backtracking.
inline std::vector<int> wl_colors(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> next_id;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.reserve(g.neighbors(v).size());
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {color[v], std::move(nb)};
    }
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      auto it = next_id.find(sig[v]);
      if (it == next_id.end()) it = next_id.insert({sig[v], static_cast<int>(next_id.size())}).first;
      next[v] = it->second;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

inline std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

}  // namespace detail

// Full automorphism group by color-pruned backtracking. Deterministic output.
inline AutomorphismGroup graph_automorphisms(const Graph& g,
                                             std::uint64_t node_budget = 50'000'000,
                                             std::uint64_t group_cap = 1'000'000) {
  int n = g.vertex_count();
  if (n > 10'000) throw resource_error("graph_automorphisms: vertex limit exceeded");
  if (!g.connected()) throw argument_error("graph_automorphisms: graph must be connected");

  AutomorphismGroup out;
  if (n == 0) {
    out.order = 1;
    return out;
  }

  std::vector<int> color = detail::wl_colors(g);

  // Vertices in a fixed search order: rarest color class first, then index.
  std::map<int, int> class_size;
  for (int c : color) ++class_size[c];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ka = std::make_tuple(class_size[color[a]], color[a], a);
    auto kb = std::make_tuple(class_size[color[b]], color[b], b);
    return ka < kb;
  });

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t nodes = 0;

  auto search = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.all.push_back(image);
      if (out.all.size() > group_cap) throw resource_error("graph_automorphisms: group cap exceeded");
      return;
    }
    int v = order[depth];
    for (int u = 0; u < n; ++u) {
      if (used[u] || color[u] != color[v]) continue;
      if (++nodes > node_budget) throw resource_error("graph_automorphisms: node budget exceeded");
      bool ok = true;
      for (int d = 0; d < depth; ++d) {
        int w = order[d];
        if (g.adjacent(v, w) != g.adjacent(u, image[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = u;
      used[u] = 1;
      self(self, depth + 1);
      image[v] = -1;
      used[u] = 0;
    }
  };
  search(search, 0);

  std::sort(out.all.begin(), out.all.end());
  out.order = out.all.size();

  // Greedy generators: walk the sorted element list, keep what the closure lacks.
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> closure{id};
  auto rebuild_closure = [&]() {
    closure = {id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& f : frontier)
        for (const auto& gen : out.generators) {
          auto prod = detail::compose_perm(gen, f);
          if (closure.insert(prod).second) next.push_back(prod);
        }
      frontier = std::move(next);
    }
  };
  for (const auto& a : out.all) {
    if (closure.count(a)) continue;
    out.generators.push_back(a);
    rebuild_closure();
  }
  return out;
}

}  // namespace flipkit
