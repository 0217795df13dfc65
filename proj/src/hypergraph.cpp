#include "rcolor/hypergraph.hpp"

#include "rcolor/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rcolor {

// ---------------------------------------------------------------------------
// Coloring / ListAssignment

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors))
{
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == 0)
            throw InvalidArgument("color of vertex " + std::to_string(i + 1) + " is not positive");
}

void Coloring::set(Vertex v, Color c)
{
    if (v == 0 || v > colors_.size())
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    if (c == 0)
        throw InvalidArgument("colors must be positive");
    colors_[v - 1] = c;
}

ListAssignment::ListAssignment(std::size_t r, std::vector<std::vector<Color>> lists)
    : r_(r), lists_(std::move(lists))
{
    if (r_ == 0)
        throw InvalidArgument("list size must be positive");
    for (std::size_t i = 0; i < lists_.size(); ++i) {
        auto& l = lists_[i];
        std::sort(l.begin(), l.end());
        if (l.size() != r_)
            throw InvalidArgument("list of vertex " + std::to_string(i + 1) + " has " +
                                  std::to_string(l.size()) + " colors, expected " + std::to_string(r_));
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw InvalidArgument("list of vertex " + std::to_string(i + 1) + " repeats a color");
        if (l.front() == 0)
            throw InvalidArgument("list of vertex " + std::to_string(i + 1) + " contains color 0");
    }
}

ListAssignment ListAssignment::uniform(std::size_t n, std::size_t r)
{
    std::vector<Color> palette(r);
    std::iota(palette.begin(), palette.end(), Color{1});
    return ListAssignment(r, std::vector<std::vector<Color>>(n, palette));
}

bool ListAssignment::contains(Vertex v, Color c) const
{
    const auto l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
}

// ---------------------------------------------------------------------------
// Hypergraph construction

namespace {

std::vector<Vertex> flatten(std::size_t k, const std::vector<std::vector<Vertex>>& edges)
{
    std::vector<Vertex> flat;
    flat.reserve(edges.size() * k);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].size() != k)
            throw InvalidArgument("edge " + std::to_string(e) + " has " + std::to_string(edges[e].size()) +
                                  " vertices, expected " + std::to_string(k));
        flat.insert(flat.end(), edges[e].begin(), edges[e].end());
    }
    return flat;
}

} // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t k, const std::vector<std::vector<Vertex>>& edges,
                       IntersectionMode mode)
    : Hypergraph(n, k, flatten(k, edges), mode, 0)
{
}

Hypergraph Hypergraph::from_flat(std::size_t n, std::size_t k, std::vector<Vertex> flat, IntersectionMode mode)
{
    if (k != 0 && flat.size() % k != 0)
        throw InvalidArgument("flat edge array length is not a multiple of k");
    return Hypergraph(n, k, std::move(flat), mode, 0);
}

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<Vertex> flat, IntersectionMode mode, int)
    : n_(n), k_(k), verts_(std::move(flat))
{
    if (n_ == 0)
        throw InvalidArgument("hypergraph needs at least one vertex");
    if (k_ < 2)
        throw InvalidArgument("edge size k must be at least 2");
    if (k_ > n_)
        throw InvalidArgument("edge size k exceeds vertex count n");
    if (n_ > 0xffffffffULL)
        throw CapacityError("vertex count does not fit 32-bit ids");

    const std::size_t m = verts_.size() / k_;
    for (std::size_t e = 0; e < m; ++e) {
        const Vertex* p = verts_.data() + e * k_;
        for (std::size_t j = 0; j < k_; ++j) {
            if (p[j] < 1 || p[j] > n_)
                throw InvalidArgument("edge " + std::to_string(e) + ": vertex " + std::to_string(p[j]) +
                                      " out of range 1.." + std::to_string(n_));
            if (j > 0 && p[j] <= p[j - 1])
                throw InvalidArgument("edge " + std::to_string(e) + ": vertices are not strictly increasing");
        }
    }

    // Duplicate detection: lexicographic sort of edge indices.
    std::vector<EdgeIndex> order(m);
    std::iota(order.begin(), order.end(), EdgeIndex{0});
    auto less = [&](EdgeIndex a, EdgeIndex b) {
        return std::lexicographical_compare(verts_.begin() + a * k_, verts_.begin() + (a + 1) * k_,
                                            verts_.begin() + b * k_, verts_.begin() + (b + 1) * k_);
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 1; i < m; ++i)
        if (!less(order[i - 1], order[i]))
            throw InvalidArgument("duplicate edge at indices " + std::to_string(std::min(order[i - 1], order[i])) +
                                  " and " + std::to_string(std::max(order[i - 1], order[i])));

    // Vertex -> incident edges (CSR, edges ascending per vertex).
    inc_offsets_.assign(n_ + 2, 0);
    for (Vertex v : verts_)
        ++inc_offsets_[v + 1];
    std::partial_sum(inc_offsets_.begin(), inc_offsets_.end(), inc_offsets_.begin());
    inc_.resize(verts_.size());
    std::vector<std::size_t> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t j = 0; j < k_; ++j)
            inc_[fill[verts_[e * k_ + j]]++] = static_cast<EdgeIndex>(e);

    const bool masks = mode == IntersectionMode::bitmask ||
                       (mode == IntersectionMode::automatic && n_ <= bitmask_vertex_limit);
    if (masks) {
        words_ = (n_ + 63) / 64;
        masks_.assign(m * words_, 0);
        for (std::size_t e = 0; e < m; ++e)
            for (std::size_t j = 0; j < k_; ++j) {
                const std::size_t bit = verts_[e * k_ + j] - 1;
                masks_[e * words_ + bit / 64] |= simd::Word{1} << (bit % 64);
            }
    }
}

// ---------------------------------------------------------------------------
// Accessors

void Hypergraph::check_edge(EdgeIndex e) const
{
    if (e >= edge_count())
        throw InvalidArgument("edge index " + std::to_string(e) + " out of range (m=" +
                              std::to_string(edge_count()) + ")");
}

void Hypergraph::check_vertex(Vertex v) const
{
    if (v < 1 || v > n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

std::span<const Vertex> Hypergraph::edge(EdgeIndex e) const
{
    check_edge(e);
    return {verts_.data() + std::size_t{e} * k_, k_};
}

std::span<const EdgeIndex> Hypergraph::incident_edges(Vertex v) const
{
    check_vertex(v);
    return {inc_.data() + inc_offsets_[v], inc_offsets_[v + 1] - inc_offsets_[v]};
}

bool Hypergraph::contains(EdgeIndex e, Vertex v) const
{
    const auto ed = edge(e);
    return std::binary_search(ed.begin(), ed.end(), v);
}

std::span<const simd::Word> Hypergraph::mask(EdgeIndex e) const
{
    check_edge(e);
    return {masks_.data() + std::size_t{e} * words_, words_};
}

std::size_t Hypergraph::vertex_degree(Vertex v) const
{
    return incident_edges(v).size();
}

std::size_t Hypergraph::max_vertex_degree() const noexcept
{
    std::size_t best = 0;
    for (std::size_t v = 1; v <= n_; ++v)
        best = std::max(best, inc_offsets_[v + 1] - inc_offsets_[v]);
    return best;
}

// ---------------------------------------------------------------------------
// Pairwise structure

std::size_t Hypergraph::intersection_size(EdgeIndex e, EdgeIndex f) const
{
    check_edge(e);
    check_edge(f);
    if (has_bitmasks())
        return simd::kernels().intersection_count(masks_.data() + std::size_t{e} * words_,
                                                  masks_.data() + std::size_t{f} * words_, words_);
    const auto a = edge(e);
    const auto b = edge(f);
    std::size_t count = 0;
    for (std::size_t i = 0, j = 0; i < k_ && j < k_;) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::vector<EdgeIndex> Hypergraph::neighbors(EdgeIndex e) const
{
    std::vector<EdgeIndex> out;
    for (Vertex v : edge(e))
        for (EdgeIndex f : incident_edges(v))
            if (f != e)
                out.push_back(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t Hypergraph::edge_degree(EdgeIndex e) const
{
    return neighbors(e).size();
}

namespace {

// Calls visit(e, f, |e ∩ f|) for every pair e < f sharing at least one vertex;
// stops early when visit returns false.
template <typename Visit>
void for_each_meeting_pair(const Hypergraph& h, std::size_t words, Visit&& visit)
{
    const std::size_t m = h.edge_count();
    if (words != 0) {
        // Dense scan against the contiguous block of later masks.
        std::vector<std::uint32_t> counts(m);
        const auto& k = simd::kernels();
        for (std::size_t e = 0; e + 1 < m; ++e) {
            const simd::Word* base = h.mask(static_cast<EdgeIndex>(e)).data();
            k.intersection_counts(base, base + words, words, m - e - 1, counts.data());
            for (std::size_t j = 0; j < m - e - 1; ++j)
                if (counts[j] != 0 && !visit(e, e + 1 + j, counts[j]))
                    return;
        }
        return;
    }
    for (std::size_t e = 0; e < m; ++e)
        for (EdgeIndex f : h.neighbors(static_cast<EdgeIndex>(e)))
            if (f > e && !visit(e, f, h.intersection_size(static_cast<EdgeIndex>(e), f)))
                return;
}

} // namespace

bool Hypergraph::is_l_simple(std::size_t l) const
{
    if (l == 0)
        throw InvalidArgument("is_l_simple requires l >= 1");
    bool simple = true;
    for_each_meeting_pair(*this, words_, [&](std::size_t, std::size_t, std::size_t size) {
        if (size > l)
            simple = false;
        return simple;
    });
    return simple;
}

std::size_t Hypergraph::count_heavy_pairs(std::size_t min_size) const
{
    if (min_size == 0)
        throw InvalidArgument("count_heavy_pairs requires min_size >= 1");
    std::size_t count = 0;
    for_each_meeting_pair(*this, words_, [&](std::size_t, std::size_t, std::size_t size) {
        if (size >= min_size)
            ++count;
        return true;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Triangles

bool Hypergraph::has_private_common(EdgeIndex e, EdgeIndex f, EdgeIndex h) const
{
    if (has_bitmasks())
        return simd::kernels().and_andnot_any(masks_.data() + std::size_t{e} * words_,
                                              masks_.data() + std::size_t{f} * words_,
                                              masks_.data() + std::size_t{h} * words_, words_);
    const auto a = edge(e);
    const auto b = edge(f);
    const auto c = edge(h);
    for (std::size_t i = 0, j = 0; i < k_ && j < k_;) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            if (!std::binary_search(c.begin(), c.end(), a[i]))
                return true;
            ++i;
            ++j;
        }
    }
    return false;
}

std::vector<Triangle> Hypergraph::triangles_containing(EdgeIndex e) const
{
    // Every condition needs a nonempty pairwise intersection, so both other
    // edges of a triangle through e are neighbors of e.
    const auto nb = neighbors(e);
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        const EdgeIndex f = nb[i];
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            const EdgeIndex h = nb[j];
            if (has_private_common(e, f, h) && has_private_common(e, h, f) && has_private_common(f, h, e)) {
                Triangle t{{e, f, h}};
                std::sort(t.edges.begin(), t.edges.end());
                out.push_back(t);
            }
        }
    }
    return out;
}

std::size_t Hypergraph::max_triangles_per_edge() const
{
    std::size_t best = 0;
    for (std::size_t e = 0; e < edge_count(); ++e)
        best = std::max(best, triangles_containing(static_cast<EdgeIndex>(e)).size());
    return best;
}

std::size_t Hypergraph::edge_degree_wrt(EdgeIndex u_prime, EdgeIndex u) const
{
    check_edge(u_prime);
    check_edge(u);
    if (u_prime == u)
        throw InvalidArgument("edge_degree_wrt requires distinct edges");
    const auto tris = triangles_containing(u);
    return static_cast<std::size_t>(
        std::count_if(tris.begin(), tris.end(), [&](const Triangle& t) { return t.contains(u_prime); }));
}

std::size_t Hypergraph::vertex_degree_wrt(Vertex v, EdgeIndex u) const
{
    check_vertex(v);
    if (contains(u, v))
        return 0;
    std::size_t count = 0;
    for (const Triangle& t : triangles_containing(u)) {
        bool in_all_others = true;
        for (EdgeIndex f : t.edges)
            if (f != u && !contains(f, v))
                in_all_others = false;
        if (in_all_others)
            ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------

bool Hypergraph::is_proper(const Coloring& c) const
{
    if (c.size() != n_)
        throw InvalidArgument("coloring has length " + std::to_string(c.size()) + ", expected " +
                              std::to_string(n_));
    const auto colors = c.values();
    for (std::size_t e = 0; e < edge_count(); ++e) {
        const Vertex* p = verts_.data() + e * k_;
        const Color first = colors[p[0] - 1];
        bool mono = true;
        for (std::size_t j = 1; j < k_ && mono; ++j)
            mono = colors[p[j] - 1] == first;
        if (mono)
            return false;
    }
    return true;
}

} // namespace rcolor
