#pragma once

#include "rcolor/simd/kernels.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rcolor {

/// Vertex ids are 1-based: V = {1, ..., n}.
using Vertex = std::uint32_t;
/// Edge indices are 0-based positions in the stable edge order.
using EdgeIndex = std::uint32_t;
/// Colors are positive integers.
using Color = std::uint32_t;

/// Assignment of a color to every vertex. Entry v-1 is the color of vertex v.
class Coloring
{
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors);

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator()(Vertex v) const { return colors_[v - 1]; }
    void set(Vertex v, Color c);
    std::span<const Color> values() const noexcept { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

/// Lists L(v) of exactly r distinct positive colors, kept sorted.
class ListAssignment
{
public:
    ListAssignment() = default;
    ListAssignment(std::size_t r, std::vector<std::vector<Color>> lists);

    /// Every vertex gets {1, ..., r}.
    static ListAssignment uniform(std::size_t n, std::size_t r);

    std::size_t size() const noexcept { return lists_.size(); }
    std::size_t list_size() const noexcept { return r_; }
    std::span<const Color> list(Vertex v) const { return lists_[v - 1]; }
    bool contains(Vertex v, Color c) const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::size_t r_ = 0;
    std::vector<std::vector<Color>> lists_;
};

/// Unordered triangle (3-cycle) stored with ascending edge indices.
struct Triangle
{
    std::array<EdgeIndex, 3> edges;

    bool contains(EdgeIndex e) const noexcept
    {
        return edges[0] == e || edges[1] == e || edges[2] == e;
    }

    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// How pairwise intersections are computed.
enum class IntersectionMode {
    automatic, ///< bitmasks when n <= bitmask_vertex_limit, sorted merge otherwise
    bitmask,   ///< always build bitmasks
    merge,     ///< never build bitmasks
};

/**
 * Immutable k-uniform hypergraph.
 *
 * Edges are strictly increasing vertex sequences kept in the order given at
 * construction; that order is the fixed edge order used everywhere else
 * (edge indices, triangle reporting, file output). Duplicate edges are
 * rejected. All queries are const and safe to call concurrently.
 */
class Hypergraph
{
public:
    static constexpr std::size_t bitmask_vertex_limit = 512;

    Hypergraph(std::size_t n, std::size_t k, const std::vector<std::vector<Vertex>>& edges,
               IntersectionMode mode = IntersectionMode::automatic);

    /// Edges given as one flat array of m*k ids.
    static Hypergraph from_flat(std::size_t n, std::size_t k, std::vector<Vertex> flat,
                                IntersectionMode mode = IntersectionMode::automatic);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t edge_count() const noexcept { return k_ == 0 ? 0 : verts_.size() / k_; }

    std::span<const Vertex> edge(EdgeIndex e) const;
    std::span<const EdgeIndex> incident_edges(Vertex v) const;
    bool contains(EdgeIndex e, Vertex v) const;

    bool has_bitmasks() const noexcept { return words_ != 0; }
    std::span<const simd::Word> mask(EdgeIndex e) const;

    std::size_t vertex_degree(Vertex v) const;
    std::size_t max_vertex_degree() const noexcept;

    std::size_t intersection_size(EdgeIndex e, EdgeIndex f) const;

    /// Edges f != e with f and e sharing a vertex, ascending.
    std::vector<EdgeIndex> neighbors(EdgeIndex e) const;
    std::size_t edge_degree(EdgeIndex e) const;

    bool is_l_simple(std::size_t l) const;
    /// Pairs e < f with |e ∩ f| >= min_size.
    std::size_t count_heavy_pairs(std::size_t min_size) const;

    std::vector<Triangle> triangles_containing(EdgeIndex e) const;
    std::size_t max_triangles_per_edge() const;

    /// D(u', u): triangles through u that also contain u'.
    std::size_t edge_degree_wrt(EdgeIndex u_prime, EdgeIndex u) const;
    /// d(v, u): triangles (u, u', u'') through u with v in (u' ∩ u'') \ u.
    std::size_t vertex_degree_wrt(Vertex v, EdgeIndex u) const;

    bool is_proper(const Coloring& c) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.verts_ == b.verts_;
    }

private:
    Hypergraph(std::size_t n, std::size_t k, std::vector<Vertex> flat, IntersectionMode mode, int);

    void check_edge(EdgeIndex e) const;
    void check_vertex(Vertex v) const;
    /// (e ∩ f) \ h is nonempty.
    bool has_private_common(EdgeIndex e, EdgeIndex f, EdgeIndex h) const;

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<Vertex> verts_;
    std::vector<std::size_t> inc_offsets_;
    std::vector<EdgeIndex> inc_;
    std::size_t words_ = 0;
    std::vector<simd::Word> masks_;
};

} // namespace rcolor
