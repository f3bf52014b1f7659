#pragma once

#include <cstdint>
#include <vector>

namespace divgraph {

/// Brute-force reference graph for small N: adjacency is materialized
/// explicitly from the divisibility rule and every measure is recomputed from
/// first principles. Correctness reference only; not built for speed.
class OracleGraph {
public:
  static constexpr std::int64_t kMaxVertices = 5000;

  /// Throws std::out_of_range unless 2 <= n_max <= kMaxVertices.
  explicit OracleGraph(std::int64_t n_max);

  std::int64_t size() const { return n_max_; }

  /// True iff i != j and one of the labels divides the other.
  bool adjacent(std::int64_t i, std::int64_t j) const;

  /// Ascending neighbor labels of n.
  const std::vector<std::int32_t>& neighbors(std::int64_t n) const;

  std::int64_t edge_count() const { return edge_count_; }

private:
  std::size_t pair_index(std::int64_t i, std::int64_t j) const;

  std::int64_t n_max_;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;  // packed strict upper triangle, i < j
  std::vector<std::vector<std::int32_t>> neighbors_;
};

/// Row sum of the adjacency structure at n.
std::int64_t oracle_degree(const OracleGraph& g, std::int64_t n);

/// Number of adjacent unordered pairs among the neighbors of n.
std::int64_t oracle_neighbor_edges(const OracleGraph& g, std::int64_t n);

/// Breadth-first distances from n; index m holds d(n,m), index 0 is unused.
std::vector<int> oracle_distances(const OracleGraph& g, std::int64_t n);

/// Sum over unordered non-adjacent neighbor pairs {s,t} of n of
/// 1 / (number of common neighbors of s and t), purely from adjacency.
double oracle_betweenness(const OracleGraph& g, std::int64_t n);

}  // namespace divgraph
