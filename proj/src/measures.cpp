#include "divgraph/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "divgraph/errors.hpp"

namespace divgraph {

namespace {

void check_spec(GraphSpec spec) {
  if (spec.n_max < 2) throw std::out_of_range("graph size must be at least 2");
}

void check_vertex(std::int64_t n, GraphSpec spec) {
  check_spec(spec);
  if (n < 1 || n > spec.n_max) {
    throw std::out_of_range("vertex " + std::to_string(n) + " outside [1, " +
                            std::to_string(spec.n_max) + "]");
  }
}

bool fits_int64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

std::int64_t pair_count(std::int64_t k) {
  __int128 pairs = static_cast<__int128>(k) * (k - 1) / 2;
  if (!fits_int64(pairs)) {
    throw std::overflow_error("pair count for " + std::to_string(k) +
                              " vertices exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(pairs);
}

bool is_prime_trial(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

// Neighbor labels of n in ascending order: proper divisors, then multiples.
std::vector<std::int64_t> neighbor_labels(std::int64_t n, GraphSpec spec,
                                          const SpfSieve& sieve) {
  std::vector<std::int64_t> nbrs = divisors(n, sieve);
  nbrs.pop_back();  // drop n itself
  for (std::int64_t m = 2 * n; m <= spec.n_max; m += n) nbrs.push_back(m);
  return nbrs;
}

}  // namespace

std::int64_t degree(std::int64_t n, GraphSpec spec, const SpfSieve& sieve) {
  check_vertex(n, spec);
  return spec.n_max / n + divisor_count(n, sieve) - 2;
}

std::int64_t neighbor_edge_count(std::int64_t n, GraphSpec spec, const SpfSieve& sieve) {
  check_vertex(n, spec);
  Factorization f = factorize(n, sieve);
  std::int64_t s_n = divisor_count(f);
  std::int64_t div_sum = divisor_count_sum_over_divisors(f);
  std::int64_t m = spec.n_max / n;
  // Edges among the multiples of n: sum_{j=2..m} floor(m/j) = D(m) - m.
  std::int64_t multiple_edges = dirichlet_sum(m) - m;
  __int128 total = static_cast<__int128>(div_sum) - 2 * s_n + 1 + multiple_edges +
                   static_cast<__int128>(m - 1) * (s_n - 2);
  if (!fits_int64(total)) {
    throw std::overflow_error("neighbor edge count of " + std::to_string(n) +
                              " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(total);
}

ExactRatio clustering(std::int64_t n, GraphSpec spec, const SpfSieve& sieve) {
  std::int64_t k = degree(n, spec, sieve);
  if (k < 2) return ExactRatio(0, 1);
  return ExactRatio(neighbor_edge_count(n, spec, sieve), pair_count(k));
}

PrimeBand prime_clustering_band(std::int64_t p, GraphSpec spec) {
  check_vertex(p, spec);
  if (!is_prime_trial(p)) {
    throw std::domain_error("vertex " + std::to_string(p) + " is not prime");
  }
  if (p > spec.n_max / 2) return PrimeBand::zero_band;
  if (p > spec.n_max / 3) return PrimeBand::one_band;
  return PrimeBand::general;
}

int geodesic_distance(std::int64_t n, std::int64_t m, GraphSpec spec) {
  check_vertex(n, spec);
  check_vertex(m, spec);
  if (n == m) return 0;
  if (n % m == 0 || m % n == 0) return 1;
  return 2;
}

ExactRatio mean_geodesic(std::int64_t n, GraphSpec spec, const SpfSieve& sieve) {
  std::int64_t k = degree(n, spec, sieve);
  __int128 num = 2 * static_cast<__int128>(spec.n_max) - k - 2;
  if (!fits_int64(num)) {
    throw std::overflow_error("mean geodesic numerator exceeds 64-bit range");
  }
  return ExactRatio(static_cast<std::int64_t>(num), spec.n_max);
}

std::int64_t geodesic_path_count(std::int64_t s, std::int64_t t, GraphSpec spec,
                                 const SpfSieve& sieve) {
  check_vertex(s, spec);
  check_vertex(t, spec);
  if (s == t) throw std::domain_error("geodesic path count requires two distinct vertices");
  if (s % t == 0 || t % s == 0) {
    throw std::domain_error("vertices " + std::to_string(s) + " and " + std::to_string(t) +
                            " are adjacent (one divides the other); the path-count "
                            "formula applies only to non-adjacent pairs");
  }
  std::int64_t d = gcd(s, t);
  __int128 lcm = static_cast<__int128>(s / d) * t;
  std::int64_t multiples = lcm > spec.n_max ? 0 : spec.n_max / static_cast<std::int64_t>(lcm);
  return divisor_count(d, sieve) + multiples;
}

double betweenness(std::int64_t n, GraphSpec spec, const SpfSieve& sieve,
                   const BetweennessGuard& guard) {
  std::int64_t k = degree(n, spec, sieve);
  if (k < 2) return 0.0;
  if (k > guard.max_neighbors && !guard.allow_large) {
    throw BudgetError("vertex " + std::to_string(n) + " has " + std::to_string(k) +
                      " neighbors which exceeds the pair-enumeration budget of " +
                      std::to_string(guard.max_neighbors) +
                      " (pass --allow-large-betweenness to override)");
  }
  std::vector<std::int64_t> nbrs = neighbor_labels(n, spec, sieve);
  double total = 0.0;
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      std::int64_t s = nbrs[a], t = nbrs[b];
      if (t % s == 0) continue;  // ascending order, so only s | t can happen
      std::int64_t d = gcd(s, t);
      __int128 lcm = static_cast<__int128>(s / d) * t;
      std::int64_t g = divisor_count(d, sieve) +
                       (lcm > spec.n_max ? 0 : spec.n_max / static_cast<std::int64_t>(lcm));
      total += 1.0 / static_cast<double>(g);
    }
  }
  return total;
}

double betweenness_prime(std::int64_t p, GraphSpec spec, const SpfSieve& sieve) {
  check_vertex(p, spec);
  if (!is_prime_trial(p)) {
    throw std::domain_error("vertex " + std::to_string(p) + " is not prime");
  }
  std::int64_t m = spec.n_max / p;
  double total = 0.0;
  for (std::int64_t j = 2; j <= m; ++j) {
    for (std::int64_t k = j + 1; k <= m; ++k) {
      if (k % j == 0) continue;
      std::int64_t d = gcd(j, k);
      __int128 lcm = static_cast<__int128>(p) * (j / d) * k;
      std::int64_t g = divisor_count(d * p, sieve) +
                       (lcm > spec.n_max ? 0 : spec.n_max / static_cast<std::int64_t>(lcm));
      total += 1.0 / static_cast<double>(g);
    }
  }
  return total;
}

std::int64_t nonedge_neighbor_pairs(std::int64_t n, GraphSpec spec, const SpfSieve& sieve) {
  std::int64_t k = degree(n, spec, sieve);
  if (k < 2) return 0;
  return pair_count(k) - neighbor_edge_count(n, spec, sieve);
}

ExactRatio connectance_exact(GraphSpec spec) {
  check_spec(spec);
  std::int64_t edges = dirichlet_sum(spec.n_max) - spec.n_max;
  return ExactRatio(edges, pair_count(spec.n_max));
}

double connectance_asymptotic(GraphSpec spec) {
  check_spec(spec);
  double n = static_cast<double>(spec.n_max);
  double edges = n * std::log(n) + 2.0 * (kEulerGamma - 1.0) * n;
  return edges / (0.5 * n * (n - 1.0));
}

namespace {

struct VertexStats {
  ExactRatio c;
  std::int64_t s = 0;
  std::int64_t div_sum = 0;
};

VertexStats vertex_stats(std::int64_t n, GraphSpec spec, const SpfSieve& sieve) {
  Factorization f = factorize(n, sieve);
  VertexStats st;
  st.s = divisor_count(f);
  st.div_sum = divisor_count_sum_over_divisors(f);
  st.c = clustering(n, spec, sieve);
  return st;
}

}  // namespace

std::vector<DeltaCRecord> delta_clustering_scan(GraphSpec spec, VertexRange range,
                                                const SpfSieve& sieve) {
  check_spec(spec);
  if (range.lo < 1 || range.hi > spec.n_max - 1 || range.lo > range.hi) {
    throw std::out_of_range("scan range [" + std::to_string(range.lo) + ", " +
                            std::to_string(range.hi) + "] outside [1, " +
                            std::to_string(spec.n_max - 1) + "]");
  }
  std::vector<DeltaCRecord> out;
  out.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
  VertexStats current = vertex_stats(range.lo, spec, sieve);
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    VertexStats next = vertex_stats(n + 1, spec, sieve);
    DeltaCRecord rec;
    rec.n = n;
    rec.delta = current.c - next.c;
    rec.same_floor_band = (spec.n_max / n) == (spec.n_max / (n + 1));
    rec.same_s = current.s == next.s;
    rec.divisor_sum_offset = current.div_sum - next.div_sum;
    out.push_back(rec);
    current = std::move(next);
  }
  return out;
}

std::vector<MeasureRecord> measure_table(GraphSpec spec, VertexRange range,
                                         const MeasureSelection& selection,
                                         const SpfSieve& sieve,
                                         const BetweennessGuard& guard) {
  check_spec(spec);
  if (range.lo < 1 || range.hi > spec.n_max || range.lo > range.hi) {
    throw std::out_of_range("vertex range [" + std::to_string(range.lo) + ", " +
                            std::to_string(range.hi) + "] outside [1, " +
                            std::to_string(spec.n_max) + "]");
  }
  if (!selection.degree && !selection.neighbor_edges && !selection.clustering &&
      !selection.mean_geodesic && !selection.nonedge_pairs && !selection.betweenness) {
    throw std::invalid_argument("measure selection is empty");
  }
  std::vector<MeasureRecord> out;
  out.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    MeasureRecord rec;
    rec.n = n;
    try {
      if (selection.degree) rec.degree = degree(n, spec, sieve);
      if (selection.neighbor_edges) rec.neighbor_edges = neighbor_edge_count(n, spec, sieve);
      if (selection.clustering) rec.clustering = clustering(n, spec, sieve);
      if (selection.mean_geodesic) rec.mean_geodesic = mean_geodesic(n, spec, sieve);
      if (selection.nonedge_pairs) rec.nonedge_pairs = nonedge_neighbor_pairs(n, spec, sieve);
      if (selection.betweenness) rec.betweenness = betweenness(n, spec, sieve, guard);
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace divgraph
