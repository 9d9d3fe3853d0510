#include "netcomm/synthetic.hpp"

#include <random>
#include <unordered_set>
#include <vector>

#include "netcomm/errors.hpp"

namespace netcomm {

namespace {

double unit_double(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and platform-stable.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (n <= 0) throw ParameterError("random_digraph: n must be positive");
  if (p < 0.0 || p > 1.0) throw ParameterError("random_digraph: p must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (unit_double(rng) < p) edges.push_back({i, j});
    }
  return Digraph(n, edges);
}

Digraph random_digraph_with_edges(int n, std::size_t m, std::uint64_t seed) {
  if (n <= 0) throw ParameterError("random_digraph_with_edges: n must be positive");
  const std::uint64_t pairs = std::uint64_t(n) * std::uint64_t(n - 1);
  if (m > pairs) throw ParameterError("random_digraph_with_edges: m exceeds n(n-1)");
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    std::uint64_t code = below(rng, pairs);
    int i = static_cast<int>(code / std::uint64_t(n - 1));
    int rest = static_cast<int>(code % std::uint64_t(n - 1));
    int j = rest < i ? rest : rest + 1;  // skip the diagonal
    if (chosen.insert(code).second) edges.push_back({i, j});
  }
  return Digraph(n, edges);
}

}  // namespace netcomm
