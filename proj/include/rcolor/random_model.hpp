#pragma once

#include "rcolor/hypergraph.hpp"
#include "rcolor/log_value.hpp"

#include <cstdint>
#include <vector>

namespace rcolor {

/// Parameters of the binomial model H(n, k, p).
struct ModelParams
{
    std::size_t n = 0;
    std::size_t k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument unless 2 <= k <= n and 0 <= p <= 1.
    void validate() const;
};

/// Exact C(n, k); throws CapacityError when it does not fit below 2^63.
std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k);

/// Colex rank of a strictly increasing 1-based k-subset: sum_i C(v_i - 1, i).
std::uint64_t colex_rank(std::span<const Vertex> subset);
/// Inverse of colex_rank for subsets of {1..n}; writes k increasing ids to out.
void colex_unrank(std::uint64_t rank, std::size_t n, std::span<Vertex> out);

/**
 * Draw H(n, k, p).
 *
 * Uses geometric skipping over the colex-ranked universe of C(n, k) edges,
 * so the cost is proportional to the number of edges drawn. Edges come out
 * in increasing colex order. The RNG stream is stream_seed(seed, {stream}).
 */
Hypergraph sample(const ModelParams& params, std::uint64_t stream = 0);

/**
 * Slow reference sampler: one uniform per edge of the universe, edge kept
 * iff its uniform is < p. Two calls that differ only in p share every
 * uniform, so the smaller-p sample is a subhypergraph of the larger one.
 */
Hypergraph sample_coupled(const ModelParams& params, std::uint64_t stream = 0);

/// C(n, k) * p.
double expected_edge_count(const ModelParams& params);

/// exp(-lambda^2 / (2 (mean + lambda / 3))), the binomial upper-tail bound
/// P(X >= EX + lambda).
double chernoff_tail(double mean, double lambda);

/// 4 / floor(sqrt(ln k / ln(2 ln k))), k >= 3.
double phi(double k);

/// (1/2) r^{k-1} / k^{1+phi(k)} * n / C(n, k).
LogValue theorem2_p(double n, double k, double r);

/// r^{k-1} k^{-phi(k)}, the vertex-degree scale in the second growth condition.
LogValue expected_max_degree_threshold(double n, double k, double r);

/// The two side conditions accompanying the p bound.
struct Theorem2Conditions
{
    bool degree_condition; ///< r^{k-1} k^{-phi(k)} >= 6 ln n
    bool growth_condition; ///< (k-1) ln r < (1-delta)/2 ln n
};
Theorem2Conditions theorem2_conditions(double n, double k, double r, double delta);

} // namespace rcolor
