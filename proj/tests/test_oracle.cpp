#include "rcolor/error.hpp"
#include "rcolor/oracle.hpp"
#include "rcolor/random_model.hpp"

#include <doctest.h>

using namespace rcolor;

namespace {

Hypergraph fano()
{
    return Hypergraph(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

// Exhaustive r^n scan.
bool brute_colorable(const Hypergraph& h, std::size_t r)
{
    std::vector<Color> c(h.n(), 1);
    for (;;) {
        if (h.is_proper(Coloring(c)))
            return true;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > r)
            c[i++] = 1;
        if (i == c.size())
            return false;
    }
}

} // namespace

TEST_CASE("fixed instances")
{
    const Hypergraph f = fano();
    CHECK(is_r_colorable(f, 2).decision == Decision::no);
    const auto f3 = is_r_colorable(f, 3);
    REQUIRE(f3.decision == Decision::yes);
    CHECK(f.is_proper(*f3.witness));
    CHECK(chromatic_number(f).chromatic_number == 3);

    const Hypergraph k5 = sample(ModelParams{5, 3, 1.0, 0});
    CHECK(is_r_colorable(k5, 2).decision == Decision::no);
    CHECK(is_r_colorable(k5, 3).decision == Decision::yes);
    CHECK(chromatic_number(k5).chromatic_number == 3);

    Hypergraph single(3, 3, {{1, 2, 3}});
    CHECK(is_r_colorable(single, 2).decision == Decision::yes);
    CHECK(chromatic_number(single).chromatic_number == 2);
    CHECK(chromatic_number(Hypergraph(4, 2, {})).chromatic_number == 1);
}

TEST_CASE("caps and budget")
{
    const Hypergraph big = sample(ModelParams{30, 3, 0.01, 1});
    CHECK_THROWS_AS(is_r_colorable(big, 2), CapacityError);
    OracleLimits tiny;
    tiny.max_nodes = 3;
    CHECK(is_r_colorable(fano(), 2, tiny).decision == Decision::unknown);
    CHECK(chromatic_number(fano(), tiny).decision == Decision::unknown);
}

TEST_CASE("agreement with exhaustive search, monotonicity in r and edges")
{
    for (std::uint64_t s = 0; s < 150; ++s) {
        const std::size_t n = 6 + s % 4;
        const Hypergraph h = sample(ModelParams{n, 3, 0.15 + 0.1 * (s % 5), s});
        bool prev = false;
        for (std::size_t r = 1; r <= 3; ++r) {
            const auto res = is_r_colorable(h, r);
            REQUIRE(res.decision != Decision::unknown);
            const bool yes = res.decision == Decision::yes;
            REQUIRE(yes == brute_colorable(h, r));
            if (yes)
                REQUIRE(h.is_proper(*res.witness));
            CHECK((!prev || yes));
            prev = yes;
        }
        const Hypergraph more = sample_coupled(ModelParams{n, 3, 0.5, s});
        const Hypergraph less = sample_coupled(ModelParams{n, 3, 0.3, s});
        CHECK(chromatic_number(less).chromatic_number <= chromatic_number(more).chromatic_number);
        if (is_r_colorable(more, 2).decision == Decision::yes)
            CHECK(is_r_colorable(less, 2).decision == Decision::yes);
    }
}

TEST_CASE("list colorability")
{
    Hypergraph e(2, 2, {{1, 2}});
    CHECK(list_colorable(e, ListAssignment(1, {{1}, {1}})).decision == Decision::no);
    CHECK(list_colorable(e, ListAssignment(1, {{1}, {2}})).decision == Decision::yes);
    CHECK_THROWS_AS(list_colorable(e, ListAssignment(1, {{1}})), InvalidArgument);
}

TEST_CASE("palette-restricted choosability")
{
    CHECK(is_r_choosable_over_palette(Hypergraph(4, 3, {}), 2, 5).decision == Decision::yes);

    Hypergraph e(2, 2, {{1, 2}});
    const auto r = is_r_choosable_over_palette(e, 1, 1);
    CHECK(r.decision == Decision::no);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->list(1)[0] == 1);
    CHECK(is_r_choosable_over_palette(e, 2, 4).decision == Decision::yes);
    CHECK_THROWS_AS(is_r_choosable_over_palette(e, 2, 1), InvalidArgument);

    // Palette exactly {1..r}: every list is the same, so this is colorability.
    CHECK(is_r_choosable_over_palette(fano(), 2, 2).decision == Decision::no);
    CHECK(is_r_choosable_over_palette(fano(), 3, 3).decision == Decision::yes);
    const Hypergraph k5 = sample(ModelParams{5, 3, 1.0, 0});
    CHECK(is_r_choosable_over_palette(k5, 2, 2).decision == Decision::no);
    CHECK(is_r_choosable_over_palette(k5, 3, 3).decision == Decision::yes);

    OracleLimits small;
    small.max_assignments = 100;
    CHECK_THROWS_AS(is_r_choosable_over_palette(fano(), 2, 4, small), CapacityError);

    for (std::uint64_t s = 0; s < 60; ++s) {
        const Hypergraph h = sample(ModelParams{6 + s % 3, 3, 0.1 + 0.15 * (s % 4), s});
        for (std::size_t rr = 2; rr <= 3; ++rr) {
            const bool col = is_r_colorable(h, rr).decision == Decision::yes;
            CHECK((is_r_choosable_over_palette(h, rr, rr).decision == Decision::yes) == col);
            if (!col && h.edge_count() <= 6)
                CHECK(is_r_choosable_over_palette(h, rr, rr + 1).decision == Decision::no);
        }
    }
}
