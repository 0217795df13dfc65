#pragma once

// Two-phase random recoloring. Phase 1 colors every vertex uniformly at
// random; Phase 2 walks the vertices in ascending order and lets a vertex of
// a still-monochromatic edge take a proposed color, unless doing so would
// complete an edge that Phase 1 left almost monochromatic in that color.

#include "rcolor/hypergraph.hpp"
#include "rcolor/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rcolor {

struct RecoloringParams
{
    std::size_t r = 2;
    double alpha = 2.0;
    double b = 4.0;
    int t = 1;
    double q = 0.0;
    double p_recolor = 0.0;
    std::size_t omega = 1;
    bool condition1 = false; ///< b <= t < k - omega
    bool condition2 = false; ///< 2/k <= q <= 1/2
    /// The derived q/(r-1) exceeded 1/r and was lowered to 1/r.
    bool p_clamped = false;

    /// AM threshold t + omega - 2 (may be negative, making AM empty).
    long am_threshold() const noexcept { return static_cast<long>(t) + static_cast<long>(omega) - 2; }
};

struct ParamOverrides
{
    std::optional<int> t;
    std::optional<double> q;
    std::optional<double> p_recolor;
};

/**
 * t = floor(sqrt(ln k / ln(alpha ln k))), q = alpha ln k / k,
 * p_recolor = q / (r-1). Omega defaults to floor(sqrt(ln k / ln ln k)),
 * at least 1.
 *
 * Derived values with r * p_recolor > 1 (tiny k) are lowered to 1/r and
 * flagged; overridden values with r * p_recolor > 1 are rejected.
 */
RecoloringParams derive_params(std::size_t k, std::size_t r, double alpha = 2.0, double b = 4.0,
                               std::optional<std::size_t> omega = std::nullopt, const ParamOverrides& overrides = {});

/// 0 < #{s in e : xi_s != u} <= t + omega - 2.
bool is_almost_monochromatic(const Hypergraph& h, EdgeIndex e, Color u, const Coloring& xi,
                             const RecoloringParams& params);

Coloring phase1(const Hypergraph& h, const RecoloringParams& params, Rng& rng);
/// xi_i uniform on L(i).
Coloring phase1(const Hypergraph& h, const ListAssignment& lists, Rng& rng);

/// eta_i = u with probability p_recolor for each u in 1..r, else 0.
std::vector<Color> draw_proposals(std::size_t n, const RecoloringParams& params, Rng& rng);
/// eta_i = each element of L(i) with probability p_recolor, else 0.
std::vector<Color> draw_proposals(const ListAssignment& lists, const RecoloringParams& params, Rng& rng);

/// Phase 2 with the proposals given explicitly (eta_i = 0 means none).
Coloring phase2_with_proposals(const Hypergraph& h, const RecoloringParams& params, const Coloring& xi,
                               std::span<const Color> eta);
Coloring phase2(const Hypergraph& h, const RecoloringParams& params, const Coloring& xi, Rng& rng);

/// Everything one trial produced.
struct TrialTrace
{
    Coloring xi;
    std::vector<Color> eta;
    Coloring zeta;
    std::size_t recolored = 0;
};

/// Trial j draws from stream (seed, j): n values for xi, then n for eta.
TrialTrace run_trial(const Hypergraph& h, const RecoloringParams& params, std::uint64_t seed, std::uint64_t trial);
TrialTrace run_trial(const Hypergraph& h, const ListAssignment& lists, const RecoloringParams& params,
                     std::uint64_t seed, std::uint64_t trial);

struct TrialOutcome
{
    bool success = false;
    std::optional<Coloring> coloring;
    std::size_t trials_used = 0;
    std::size_t recolored_count = 0;
    bool condition1 = false;
    bool condition2 = false;
    bool p_clamped = false;
};

/**
 * Independent trials until one yields a proper coloring. The reported
 * trial is always the lowest-indexed success, so the outcome does not
 * depend on `threads`.
 */
TrialOutcome color(const Hypergraph& h, const RecoloringParams& params, std::size_t max_trials, std::uint64_t seed,
                   std::size_t threads = 1);

/// Same, drawing from lists; success also requires zeta_i in L(i).
TrialOutcome color_from_lists(const Hypergraph& h, const ListAssignment& lists, const RecoloringParams& params,
                              std::size_t max_trials, std::uint64_t seed, std::size_t threads = 1);

} // namespace rcolor
