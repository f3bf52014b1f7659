#include "divgraph/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace divgraph {

namespace {

void check_vertex(const OracleGraph& g, std::int64_t n) {
  if (n < 1 || n > g.size()) {
    throw std::out_of_range("vertex " + std::to_string(n) + " outside [1, " +
                            std::to_string(g.size()) + "]");
  }
}

}  // namespace

OracleGraph::OracleGraph(std::int64_t n_max) : n_max_(n_max) {
  if (n_max < 2 || n_max > kMaxVertices) {
    throw std::out_of_range("oracle graph size " + std::to_string(n_max) + " outside [2, " +
                            std::to_string(kMaxVertices) + "]");
  }
  std::size_t pair_count = static_cast<std::size_t>(n_max) * (n_max - 1) / 2;
  bits_.assign((pair_count + 63) / 64, 0);
  neighbors_.assign(static_cast<std::size_t>(n_max) + 1, {});
  // Every edge is a (divisor, multiple) pair, so enumerating multiples of
  // each label visits each edge exactly once.
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 2 * n; m <= n_max; m += n) {
      std::size_t idx = pair_index(n, m);
      bits_[idx / 64] |= std::uint64_t{1} << (idx % 64);
      neighbors_[n].push_back(static_cast<std::int32_t>(m));
      neighbors_[m].push_back(static_cast<std::int32_t>(n));
      ++edge_count_;
    }
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::size_t OracleGraph::pair_index(std::int64_t i, std::int64_t j) const {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + static_cast<std::size_t>(i - 1);
}

bool OracleGraph::adjacent(std::int64_t i, std::int64_t j) const {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i == j) return false;
  std::size_t idx = pair_index(i, j);
  return (bits_[idx / 64] >> (idx % 64)) & 1;
}

const std::vector<std::int32_t>& OracleGraph::neighbors(std::int64_t n) const {
  check_vertex(*this, n);
  return neighbors_[static_cast<std::size_t>(n)];
}

std::int64_t oracle_degree(const OracleGraph& g, std::int64_t n) {
  return static_cast<std::int64_t>(g.neighbors(n).size());
}

std::int64_t oracle_neighbor_edges(const OracleGraph& g, std::int64_t n) {
  const auto& nbrs = g.neighbors(n);
  std::int64_t count = 0;
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (g.adjacent(nbrs[a], nbrs[b])) ++count;
    }
  }
  return count;
}

std::vector<int> oracle_distances(const OracleGraph& g, std::int64_t n) {
  check_vertex(g, n);
  std::vector<int> dist(static_cast<std::size_t>(g.size()) + 1, -1);
  std::deque<std::int64_t> queue{n};
  dist[static_cast<std::size_t>(n)] = 0;
  while (!queue.empty()) {
    std::int64_t v = queue.front();
    queue.pop_front();
    for (std::int32_t w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

double oracle_betweenness(const OracleGraph& g, std::int64_t n) {
  const auto& nbrs = g.neighbors(n);
  double total = 0.0;
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      std::int64_t s = nbrs[a], t = nbrs[b];
      if (g.adjacent(s, t)) continue;
      // All geodesics between non-adjacent s,t have length two, so the
      // geodesic count is the number of common neighbors.
      const auto& s_nbrs = g.neighbors(s);
      const auto& t_nbrs = g.neighbors(t);
      const auto& shorter = s_nbrs.size() <= t_nbrs.size() ? s_nbrs : t_nbrs;
      std::int64_t other = s_nbrs.size() <= t_nbrs.size() ? t : s;
      std::int64_t common = 0;
      for (std::int32_t u : shorter) {
        if (g.adjacent(other, u)) ++common;
      }
      total += 1.0 / static_cast<double>(common);
    }
  }
  return total;
}

}  // namespace divgraph
