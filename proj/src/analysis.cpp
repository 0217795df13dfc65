#include "rcolor/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace rcolor {

StructureReport analyze(const Hypergraph& h, std::size_t omega)
{
    StructureReport r;
    r.n = h.n();
    r.k = h.k();
    r.m = h.edge_count();
    r.max_vertex_degree = h.max_vertex_degree();
    r.two_simple = h.is_l_simple(2);
    r.heavy_pairs = h.count_heavy_pairs(3);
    r.omega = omega;

    std::size_t triangle_incidences = 0;
    std::vector<std::size_t> per_edge(r.m, 0);
    std::vector<std::size_t> per_vertex(h.n() + 1, 0);
    for (std::size_t ui = 0; ui < r.m; ++ui) {
        const auto u = static_cast<EdgeIndex>(ui);
        r.max_edge_degree = std::max(r.max_edge_degree, h.edge_degree(u));
        const auto tris = h.triangles_containing(u);
        triangle_incidences += tris.size();
        r.max_triangles_per_edge = std::max(r.max_triangles_per_edge, tris.size());

        // D(u', u) and d(v, u) for this u, from one pass over T_u.
        std::vector<EdgeIndex> touched_edges;
        std::vector<Vertex> touched_vertices;
        for (const Triangle& t : tris) {
            EdgeIndex others[2];
            int j = 0;
            for (EdgeIndex f : t.edges)
                if (f != u)
                    others[j++] = f;
            for (EdgeIndex f : others) {
                if (per_edge[f]++ == 0)
                    touched_edges.push_back(f);
            }
            const auto a = h.edge(others[0]);
            const auto b = h.edge(others[1]);
            for (Vertex v : a)
                if (std::binary_search(b.begin(), b.end(), v) && !h.contains(u, v)) {
                    if (per_vertex[v]++ == 0)
                        touched_vertices.push_back(v);
                }
        }
        for (EdgeIndex f : touched_edges) {
            r.max_D = std::max(r.max_D, per_edge[f]);
            per_edge[f] = 0;
        }
        for (Vertex v : touched_vertices) {
            r.max_d = std::max(r.max_d, per_vertex[v]);
            per_vertex[v] = 0;
        }
    }
    r.total_triangles = triangle_incidences / 3;
    r.triangles_within_omega = r.max_triangles_per_edge <= omega;
    r.max_D_at_most_4 = r.max_D <= 4;
    r.max_d_at_most_4 = r.max_d <= 4;
    return r;
}

std::string to_key_value(const StructureReport& r)
{
    std::ostringstream out;
    auto b = [](bool x) { return x ? "true" : "false"; };
    out << "n=" << r.n << '\n'
        << "k=" << r.k << '\n'
        << "m=" << r.m << '\n'
        << "max_vertex_degree=" << r.max_vertex_degree << '\n'
        << "max_edge_degree=" << r.max_edge_degree << '\n'
        << "2simple=" << b(r.two_simple) << '\n'
        << "heavy_pairs=" << r.heavy_pairs << '\n'
        << "triangles=" << r.total_triangles << '\n'
        << "max_triangles_per_edge=" << r.max_triangles_per_edge << '\n'
        << "omega=" << r.omega << '\n'
        << "triangles_within_omega=" << b(r.triangles_within_omega) << '\n'
        << "max_D=" << r.max_D << '\n'
        << "max_d=" << r.max_d << '\n'
        << "max_D_le_4=" << b(r.max_D_at_most_4) << '\n'
        << "max_d_le_4=" << b(r.max_d_at_most_4) << '\n';
    return out.str();
}

} // namespace rcolor
