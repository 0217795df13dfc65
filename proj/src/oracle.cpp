#include "rcolor/oracle.hpp"

#include "rcolor/error.hpp"

#include <algorithm>
#include <numeric>

namespace rcolor {

const char* to_string(Decision d) noexcept
{
    switch (d) {
    case Decision::yes:
        return "yes";
    case Decision::no:
        return "no";
    case Decision::unknown:
        return "unknown";
    }
    return "?";
}

namespace {

void check_caps(const Hypergraph& h, const OracleLimits& limits)
{
    if (h.n() > limits.max_vertices)
        throw CapacityError("oracle: n = " + std::to_string(h.n()) + " exceeds the cap of " +
                            std::to_string(limits.max_vertices) + " vertices");
}

std::vector<Vertex> search_order(const Hypergraph& h)
{
    std::vector<Vertex> order(h.n());
    std::iota(order.begin(), order.end(), Vertex{1});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return h.vertex_degree(a) > h.vertex_degree(b); });
    return order;
}

/// Shared backtracking engine. `choices(v)` gives the candidate colors of v.
/// With `symmetric` set, all vertices share the palette 1..r and colors are
/// introduced in increasing order.
class Search
{
public:
    Search(const Hypergraph& h, const OracleLimits& limits) : h_(h), limits_(limits), color_(h.n(), 0), filled_(h.edge_count(), 0)
    {
        order_ = search_order(h);
    }

    ColorabilityResult run_symmetric(std::size_t r)
    {
        r_ = r;
        symmetric_ = true;
        return finish(step(0, 0));
    }

    ColorabilityResult run_lists(const ListAssignment& lists)
    {
        lists_ = &lists;
        symmetric_ = false;
        return finish(step(0, 0));
    }

private:
    enum class Step { found, exhausted, budget };

    ColorabilityResult finish(Step s)
    {
        ColorabilityResult res;
        res.nodes = nodes_;
        if (s == Step::found) {
            res.decision = Decision::yes;
            res.witness = Coloring(color_);
            if (!h_.is_proper(*res.witness))
                throw Error("internal: oracle witness is not proper");
        } else {
            res.decision = s == Step::budget ? Decision::unknown : Decision::no;
        }
        return res;
    }

    // Assigns c to v; false if an edge completed by v is monochromatic.
    bool place(Vertex v, Color c)
    {
        color_[v - 1] = c;
        bool ok = true;
        for (EdgeIndex e : h_.incident_edges(v)) {
            if (++filled_[e] != h_.k() || !ok)
                continue;
            const auto ev = h_.edge(e);
            ok = !std::all_of(ev.begin(), ev.end(), [&](Vertex s) { return color_[s - 1] == c; });
        }
        return ok;
    }

    void unplace(Vertex v)
    {
        for (EdgeIndex e : h_.incident_edges(v))
            --filled_[e];
        color_[v - 1] = 0;
    }

    Step step(std::size_t depth, std::size_t used)
    {
        if (depth == order_.size())
            return Step::found;
        if (++nodes_ > limits_.max_nodes)
            return Step::budget;
        const Vertex v = order_[depth];
        auto attempt = [&](Color c, std::size_t next_used) {
            Step s = Step::exhausted;
            if (place(v, c))
                s = step(depth + 1, next_used);
            if (s != Step::found)
                unplace(v);
            return s;
        };
        if (symmetric_) {
            const std::size_t top = std::min(r_, used + 1);
            for (std::size_t c = 1; c <= top; ++c) {
                const Step s = attempt(static_cast<Color>(c), std::max(used, c));
                if (s != Step::exhausted)
                    return s;
            }
        } else {
            for (Color c : lists_->list(v)) {
                const Step s = attempt(c, used);
                if (s != Step::exhausted)
                    return s;
            }
        }
        return Step::exhausted;
    }

    const Hypergraph& h_;
    const OracleLimits& limits_;
    std::vector<Vertex> order_;
    std::vector<Color> color_;
    std::vector<std::size_t> filled_;
    std::uint64_t nodes_ = 0;
    bool symmetric_ = true;
    std::size_t r_ = 0;
    const ListAssignment* lists_ = nullptr;
};

} // namespace

ColorabilityResult is_r_colorable(const Hypergraph& h, std::size_t r, const OracleLimits& limits)
{
    check_caps(h, limits);
    if (r < 1)
        throw InvalidArgument("r must be at least 1");
    return Search(h, limits).run_symmetric(r);
}

ColorabilityResult list_colorable(const Hypergraph& h, const ListAssignment& lists, const OracleLimits& limits)
{
    check_caps(h, limits);
    if (lists.size() != h.n())
        throw InvalidArgument("list assignment size differs from n");
    return Search(h, limits).run_lists(lists);
}

ChromaticResult chromatic_number(const Hypergraph& h, const OracleLimits& limits)
{
    check_caps(h, limits);
    ChromaticResult res;
    if (h.edge_count() == 0) {
        res.decision = Decision::yes;
        res.chromatic_number = 1;
        res.witness = Coloring(std::vector<Color>(h.n(), 1));
        return res;
    }
    // Colorability is monotone in r, and n colors always suffice for k >= 2.
    for (std::size_t r = 2; r <= h.n(); ++r) {
        auto c = is_r_colorable(h, r, limits);
        if (c.decision == Decision::unknown)
            return res;
        if (c.decision == Decision::yes) {
            res.decision = Decision::yes;
            res.chromatic_number = r;
            res.witness = std::move(c.witness);
            return res;
        }
    }
    throw Error("internal: no coloring with n colors");
}

ChoosabilityResult is_r_choosable_over_palette(const Hypergraph& h, std::size_t r, std::size_t palette_size,
                                               const OracleLimits& limits)
{
    check_caps(h, limits);
    if (r < 1)
        throw InvalidArgument("r must be at least 1");
    if (palette_size < r)
        throw InvalidArgument("palette must have at least r colors");

    // All r-subsets of the palette, in lexicographic order.
    std::vector<std::vector<Color>> subsets;
    {
        std::vector<Color> cur(r);
        std::iota(cur.begin(), cur.end(), Color{1});
        for (;;) {
            subsets.push_back(cur);
            std::size_t i = r;
            while (i > 0 && cur[i - 1] == palette_size - r + i)
                --i;
            if (i == 0)
                break;
            ++cur[i - 1];
            for (std::size_t j = i; j < r; ++j)
                cur[j] = cur[j - 1] + 1;
        }
    }

    std::vector<Vertex> active;
    for (Vertex v = 1; v <= h.n(); ++v)
        if (h.vertex_degree(v) > 0)
            active.push_back(v);

    // Total = |subsets|^|active|, checked against the cap without overflow.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (total > limits.max_assignments / subsets.size())
            throw CapacityError("choosability: more than " + std::to_string(limits.max_assignments) +
                                " list assignments");
        total *= subsets.size();
    }

    ChoosabilityResult res;
    res.palette_size = palette_size;
    std::vector<std::vector<Color>> lists(h.n(), subsets.front());
    std::vector<std::size_t> digit(active.size(), 0);
    bool any_unknown = false;
    for (;;) {
        for (std::size_t i = 0; i < active.size(); ++i)
            lists[active[i] - 1] = subsets[digit[i]];
        ListAssignment la(r, lists);
        ++res.assignments_checked;
        const auto c = list_colorable(h, la, limits);
        if (c.decision == Decision::no) {
            res.decision = Decision::no;
            res.counterexample = std::move(la);
            return res;
        }
        any_unknown |= c.decision == Decision::unknown;

        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == subsets.size())
            digit[i++] = 0;
        if (i == digit.size())
            break;
    }
    res.decision = any_unknown ? Decision::unknown : Decision::yes;
    return res;
}

} // namespace rcolor
