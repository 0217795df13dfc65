#pragma once

// Exact reference answers for small instances: r-colorability, chromatic
// number, coloring from given lists, and choosability restricted to a
// finite palette. Searches that run out of budget answer "unknown".

#include "rcolor/hypergraph.hpp"

#include <cstdint>
#include <optional>

namespace rcolor {

enum class Decision { yes, no, unknown };

const char* to_string(Decision d) noexcept;

struct OracleLimits
{
    std::size_t max_vertices = 24;
    /// Search nodes per backtracking run before giving up with `unknown`.
    std::uint64_t max_nodes = 200'000'000;
    /// List assignments enumerated by the choosability check; more is a CapacityError.
    std::uint64_t max_assignments = 2'000'000;
};

struct ColorabilityResult
{
    Decision decision = Decision::unknown;
    std::optional<Coloring> witness; ///< set iff decision == yes
    std::uint64_t nodes = 0;
};

/**
 * Backtracking over vertices in decreasing-degree order. An edge is checked
 * when its last vertex gets a color. Colors are introduced in order (a new
 * vertex may use at most one color beyond those already used), which removes
 * the r! relabelings. Throws CapacityError when n exceeds the cap.
 */
ColorabilityResult is_r_colorable(const Hypergraph& h, std::size_t r, const OracleLimits& limits = {});

/// Proper coloring with zeta_i in L(i).
ColorabilityResult list_colorable(const Hypergraph& h, const ListAssignment& lists, const OracleLimits& limits = {});

struct ChromaticResult
{
    Decision decision = Decision::unknown; ///< yes when the value is exact
    std::size_t chromatic_number = 0;
    std::optional<Coloring> witness;
};

/// 1 for an edgeless hypergraph, otherwise the least r with a proper coloring.
ChromaticResult chromatic_number(const Hypergraph& h, const OracleLimits& limits = {});

struct ChoosabilityResult
{
    /// yes: every r-list assignment from {1..palette} admits a list coloring
    /// (a statement about this palette only). no: `counterexample` admits none.
    Decision decision = Decision::unknown;
    std::size_t palette_size = 0;
    std::optional<ListAssignment> counterexample;
    std::uint64_t assignments_checked = 0;
};

/**
 * Enumerates r-subsets of {1..palette_size} for every non-isolated vertex
 * (isolated vertices cannot matter and get {1..r}). Throws CapacityError
 * when the number of assignments exceeds limits.max_assignments.
 */
ChoosabilityResult is_r_choosable_over_palette(const Hypergraph& h, std::size_t r, std::size_t palette_size,
                                               const OracleLimits& limits = {});

} // namespace rcolor
