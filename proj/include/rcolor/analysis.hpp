#pragma once

#include "rcolor/hypergraph.hpp"

#include <cstddef>
#include <string>

namespace rcolor {

/// Structural statistics of a hypergraph: simplicity, degrees, and the
/// triangle counts that decide membership in the sparse class used by the
/// threshold argument (2-simple, at most omega triangles per edge).
struct StructureReport
{
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t max_vertex_degree = 0;
    std::size_t max_edge_degree = 0;
    bool two_simple = true;
    std::size_t heavy_pairs = 0;        ///< pairs with |e ∩ f| >= 3
    std::size_t total_triangles = 0;
    std::size_t max_triangles_per_edge = 0;
    std::size_t omega = 0;
    bool triangles_within_omega = true; ///< max_triangles_per_edge <= omega
    std::size_t max_D = 0;              ///< max over u != u' of D(u', u)
    std::size_t max_d = 0;              ///< max over v, u of d(v, u)
    bool max_D_at_most_4 = true;
    bool max_d_at_most_4 = true;
};

StructureReport analyze(const Hypergraph& h, std::size_t omega);

/// "key=value" lines, one per field, in declaration order.
std::string to_key_value(const StructureReport& report);

} // namespace rcolor
