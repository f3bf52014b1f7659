#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divgraph/exact_ratio.hpp"
#include "divgraph/numtheory.hpp"

namespace divgraph {

/// The divisibility graph on labels 1..n_max: an edge joins a and b iff one
/// divides the other. Every measure below is a closed form in the divisor
/// function s(n) and floor(n_max/n); the graph itself is never built.
struct GraphSpec {
  std::int64_t n_max = 2;
};

/// Classification of a prime vertex p by clustering value:
///   zero_band: floor(N/2) < p <= N        => c_p = 0
///   one_band:  floor(N/3) < p <= floor(N/2) => c_p = 1
enum class PrimeBand { zero_band, one_band, general };

/// Inclusive vertex interval.
struct VertexRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

/// Guard for the quadratic neighbor-pair enumeration in betweenness().
/// Vertices with more neighbors than max_neighbors are refused with a
/// BudgetError unless allow_large is set.
struct BetweennessGuard {
  std::int64_t max_neighbors = 10'000;
  bool allow_large = false;
};

struct MeasureSelection {
  bool degree = false;
  bool neighbor_edges = false;
  bool clustering = false;
  bool mean_geodesic = false;
  bool nonedge_pairs = false;
  bool betweenness = false;
};

/// Per-vertex measure bundle; only selected fields are populated.
/// A nonempty error marks the row invalid.
struct MeasureRecord {
  std::int64_t n = 0;
  std::optional<std::int64_t> degree;
  std::optional<std::int64_t> neighbor_edges;
  std::optional<ExactRatio> clustering;
  std::optional<ExactRatio> mean_geodesic;
  std::optional<std::int64_t> nonedge_pairs;
  std::optional<double> betweenness;
  std::string error;
};

/// Consecutive-vertex clustering difference c_n - c_{n+1} with the three
/// classification flags: same floor band, same divisor count, and the signed
/// offset between the divisor-count sums over divisors of n and n+1.
/// When all of same_floor_band, same_s and divisor_sum_offset == 0 hold,
/// delta is necessarily zero.
struct DeltaCRecord {
  std::int64_t n = 0;
  ExactRatio delta;
  bool same_floor_band = false;
  bool same_s = false;
  std::int64_t divisor_sum_offset = 0;
};

inline constexpr double kEulerGamma = 0.577215664901532861;

/// k_n = floor(N/n) + s(n) - 2.
std::int64_t degree(std::int64_t n, GraphSpec spec, const SpfSieve& sieve);

/// e_n: number of adjacent unordered pairs among the neighbors of n
/// (triangles at n), by the closed form
///   sum_{m|n} s(m) - 2 s(n) + 1 + sum_{j=2..M} floor(M/j) + (M-1)(s(n)-2)
/// with M = floor(N/n); the middle sum is dirichlet_sum(M) - M.
std::int64_t neighbor_edge_count(std::int64_t n, GraphSpec spec, const SpfSieve& sieve);

/// c_n = e_n / C(k_n, 2) in lowest terms; 0/1 when k_n < 2.
ExactRatio clustering(std::int64_t n, GraphSpec spec, const SpfSieve& sieve);

/// Throws std::domain_error if p is not prime.
PrimeBand prime_clustering_band(std::int64_t p, GraphSpec spec);

/// 0 iff n == m, 1 iff one divides the other, 2 otherwise.
int geodesic_distance(std::int64_t n, std::int64_t m, GraphSpec spec);

/// l_n = (2N - k_n - 2) / N as an exact ratio in lowest terms.
ExactRatio mean_geodesic(std::int64_t n, GraphSpec spec, const SpfSieve& sieve);

/// g_st = s(gcd(s,t)) + floor(N * gcd(s,t) / (s*t)), the number of length-2
/// geodesics between non-adjacent s and t. Throws std::domain_error when
/// s == t or one divides the other.
std::int64_t geodesic_path_count(std::int64_t s, std::int64_t t, GraphSpec spec,
                                 const SpfSieve& sieve);

/// x_n: sum of 1/g_st over unordered non-adjacent neighbor pairs {s,t} of n.
/// Neighbor set is enumerated as divisors(n)\{n} plus multiples 2n..Mn; terms
/// are accumulated in ascending pair order for determinism. The ordered-pair
/// convention would give exactly twice this value.
double betweenness(std::int64_t n, GraphSpec spec, const SpfSieve& sieve,
                   const BetweennessGuard& guard = {});

/// Prime fast path for x_p:
///   sum_{j=2..M} sum_{k=j+1..M, j∤k} 1 / ( s(gcd(j,k)*p) + floor(N*gcd(j,k)/(p*j*k)) )
/// with M = floor(N/p). Throws std::domain_error if p is not prime.
double betweenness_prime(std::int64_t p, GraphSpec spec, const SpfSieve& sieve);

/// C(k_n, 2) - e_n: neighbor pairs of n with no edge between them.
std::int64_t nonedge_neighbor_pairs(std::int64_t n, GraphSpec spec, const SpfSieve& sieve);

/// Edge count over C(N,2) in lowest terms; the edge count is D(N) - N.
ExactRatio connectance_exact(GraphSpec spec);

/// (N ln N + 2(gamma - 1) N) / C(N,2); the O(sqrt N) term of the edge-count
/// asymptotic is dropped.
double connectance_asymptotic(GraphSpec spec);

/// Delta c_n records for every n in range; range must lie within [1, N-1].
std::vector<DeltaCRecord> delta_clustering_scan(GraphSpec spec, VertexRange range,
                                                const SpfSieve& sieve);

/// One record per vertex in ascending order with the selected fields
/// populated. Per-vertex failures (e.g. a betweenness budget refusal) mark
/// that row invalid instead of aborting the table.
std::vector<MeasureRecord> measure_table(GraphSpec spec, VertexRange range,
                                         const MeasureSelection& selection,
                                         const SpfSieve& sieve,
                                         const BetweennessGuard& guard = {});

}  // namespace divgraph
