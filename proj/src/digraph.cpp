#include "netcomm/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netcomm/errors.hpp"

namespace netcomm {

Digraph::Digraph(int node_count) : n_(node_count), out_(node_count), in_(node_count) {
  if (node_count < 0) throw ParameterError("node count must be nonnegative");
}

Digraph::Digraph(int node_count, std::span<const Edge> edges) : Digraph(node_count) {
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_)
      throw ParameterError("edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                           ") out of range for n=" + std::to_string(n_));
    if (e.src == e.dst)
      throw ParameterError("self-loop (" + std::to_string(e.src) + "," +
                           std::to_string(e.dst) + ") not allowed");
    out_[e.src].push_back(e.dst);
    in_[e.dst].push_back(e.src);
  }
  for (auto& nb : out_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw ParameterError("duplicate edge in edge set");
  }
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
  m_ = edges.size();
}

bool Digraph::has_edge(int src, int dst) const {
  const auto& nb = out_[src];
  return std::binary_search(nb.begin(), nb.end(), dst);
}

std::vector<Edge> Digraph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(m_);
  for_each_edge([&](Edge e) { edges.push_back(e); });
  return edges;
}

std::uint64_t Digraph::fingerprint() const {
  // FNV-1a over (n, src, dst) stream.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for_each_edge([&](Edge e) {
    mix(static_cast<std::uint64_t>(e.src));
    mix(static_cast<std::uint64_t>(e.dst));
  });
  return h;
}

bool Digraph::operator==(const Digraph& other) const {
  return n_ == other.n_ && out_ == other.out_;
}

DegreeVectors degrees(const Digraph& g) {
  DegreeVectors d;
  d.out_degree.resize(g.node_count());
  d.in_degree.resize(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    d.out_degree[i] = static_cast<int>(g.out_neighbors(i).size());
    d.in_degree[i] = static_cast<int>(g.in_neighbors(i).size());
  }
  return d;
}

namespace {

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

void erase_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  v.erase(it);
}

}  // namespace

Digraph apply_modification(const Digraph& g, Edge e, bool add) {
  Digraph out = g;
  if (add) {
    insert_sorted(out.out_[e.src], e.dst);
    insert_sorted(out.in_[e.dst], e.src);
    ++out.m_;
  } else {
    erase_sorted(out.out_[e.src], e.dst);
    erase_sorted(out.in_[e.dst], e.src);
    --out.m_;
  }
  return out;
}

Digraph apply_modification(const Digraph& g, Edge e, ModificationKind kind) {
  const int n = g.node_count();
  if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
    throw InvalidModificationError("edge endpoint out of range");
  if (kind == ModificationKind::update) {
    if (e.src == e.dst) throw InvalidModificationError("cannot add self-loop");
    if (g.has_edge(e.src, e.dst))
      throw InvalidModificationError("update target (" + std::to_string(e.src) + "," +
                                     std::to_string(e.dst) + ") already exists");
    return apply_modification(g, e, true);
  }
  if (!g.has_edge(e.src, e.dst))
    throw InvalidModificationError("downdate target (" + std::to_string(e.src) + "," +
                                   std::to_string(e.dst) + ") is not an edge");
  return apply_modification(g, e, false);
}

Digraph permute(const Digraph& g, std::span<const int> p) {
  const int n = g.node_count();
  if (static_cast<int>(p.size()) != n) throw ParameterError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) throw ParameterError("permutation is not a bijection");
    seen[x] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](Edge e) { edges.push_back({p[e.src], p[e.dst]}); });
  return Digraph(n, edges);
}

Digraph transpose(const Digraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](Edge e) { edges.push_back({e.dst, e.src}); });
  return Digraph(g.node_count(), edges);
}

bool is_weakly_connected(const Digraph& g) {
  const int n = g.node_count();
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  g.for_each_edge([&](Edge e) {
    int a = find(e.src), b = find(e.dst);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  });
  return components == 1;
}

std::size_t BipartiteLift::undirected_edge_count() const {
  std::size_t incidences = 0;
  for (const auto& nb : adj) incidences += nb.size();
  return incidences / 2;
}

BipartiteLift bipartite_lift(const Digraph& g) {
  BipartiteLift lift;
  lift.half = g.node_count();
  lift.adj.resize(2 * static_cast<std::size_t>(lift.half));
  g.for_each_edge([&](Edge e) {
    lift.adj[e.src].push_back(e.dst + lift.half);
    lift.adj[e.dst + lift.half].push_back(e.src);
  });
  for (auto& nb : lift.adj) std::sort(nb.begin(), nb.end());
  return lift;
}

}  // namespace netcomm
