#include "rcolor/colorer.hpp"
#include "rcolor/error.hpp"
#include "rcolor/oracle.hpp"
#include "rcolor/random_model.hpp"

#include <doctest.h>

#include <cmath>

using namespace rcolor;

TEST_CASE("derived parameters")
{
    const auto p = derive_params(100, 3);
    CHECK(p.t == 1);
    CHECK(p.q == doctest::Approx(0.0921034).epsilon(1e-6));
    CHECK(p.p_recolor == doctest::Approx(0.0460517).epsilon(1e-6));
    CHECK(!p.condition1);
    CHECK(p.condition2);
    CHECK(std::abs(p.q - 2 * std::log(100.0) / 100) <= 1e-12 * p.q);

    CHECK(derive_params(1000000, 2).t == 2);

    const auto small = derive_params(3, 2);
    CHECK(small.q == doctest::Approx(2 * std::log(3.0) / 3).epsilon(1e-12));
    CHECK(!small.condition2);
    CHECK(small.p_clamped);
    CHECK(small.p_recolor * 2 <= 1.0);
    CHECK(small.omega == 3);

    CHECK_THROWS_AS(derive_params(3, 2, 0.5), DomainError);
    CHECK_THROWS_AS(derive_params(10, 1), InvalidArgument);
    CHECK_THROWS_AS(derive_params(10, 2, 2, 4, std::nullopt, ParamOverrides{std::nullopt, 0.9, std::nullopt}),
                    DomainError);
    const auto o = derive_params(10, 3, 2, 4, 5, ParamOverrides{4, 0.2, std::nullopt});
    CHECK(o.t == 4);
    CHECK(o.p_recolor == doctest::Approx(0.1));
    CHECK(o.omega == 5);
}

TEST_CASE("almost monochromatic edges")
{
    Hypergraph h(5, 5, {{1, 2, 3, 4, 5}});
    RecoloringParams p = derive_params(5, 2);
    p.t = 2;
    p.omega = 2;
    CHECK(is_almost_monochromatic(h, 0, 1, Coloring({1, 1, 1, 1, 2}), p));
    CHECK(!is_almost_monochromatic(h, 0, 1, Coloring({1, 1, 1, 1, 1}), p));
    CHECK(!is_almost_monochromatic(h, 0, 1, Coloring({1, 1, 2, 2, 2}), p));
    p.t = 1;
    p.omega = 1;
    CHECK(!is_almost_monochromatic(h, 0, 1, Coloring({1, 1, 1, 1, 2}), p));
}

TEST_CASE("phase 2 hand trace on a single edge")
{
    Hypergraph h(3, 3, {{1, 2, 3}});
    const auto p = derive_params(3, 2);
    const std::vector<Color> eta{2, 0, 0};
    const Coloring z = phase2_with_proposals(h, p, Coloring({1, 1, 1}), eta);
    CHECK(z == Coloring({2, 1, 1}));
    CHECK(h.is_proper(z));

    // Once vertex 1 leaves, the edge is no longer intact and vertex 2 keeps its color.
    const std::vector<Color> both{2, 2, 0};
    CHECK(phase2_with_proposals(h, p, Coloring({1, 1, 1}), both) == Coloring({2, 1, 1}));
}

TEST_CASE("phase 2 blocks a recolor that completes an almost monochromatic edge")
{
    // Edge 0 = {1,2,3} is monochromatic in 1; edge 1 = {1,4,5} carries 2 on 4 and 5.
    Hypergraph h(5, 3, {{1, 2, 3}, {1, 4, 5}});
    auto p = derive_params(3, 2);
    p.t = 2;
    p.omega = 1; // AM window: 1 non-u vertex
    const Coloring xi({1, 1, 1, 2, 2});
    REQUIRE(is_almost_monochromatic(h, 1, 2, xi, p));
    const std::vector<Color> eta{2, 2, 0, 0, 0};
    const Coloring z = phase2_with_proposals(h, p, xi, eta);
    // Vertex 1 is blocked (would make {1,4,5} all 2); vertex 2 then recolors.
    CHECK(z == Coloring({1, 2, 1, 2, 2}));
    CHECK(h.is_proper(z));

    // With an empty AM window nothing blocks vertex 1.
    p.t = 1;
    p.omega = 1;
    CHECK(phase2_with_proposals(h, p, xi, eta) == Coloring({2, 1, 1, 2, 2}));
}

TEST_CASE("phase 1 is uniform and deterministic")
{
    Hypergraph h = sample(ModelParams{6, 3, 0.2, 1});
    const auto p = derive_params(3, 3);
    const int N = 10000;
    std::vector<std::vector<int>> freq(6, std::vector<int>(4, 0));
    for (int s = 0; s < N; ++s) {
        Rng rng = Rng::for_stream(99, {static_cast<std::uint64_t>(s)});
        const Coloring c = phase1(h, p, rng);
        for (Vertex v = 1; v <= 6; ++v)
            ++freq[v - 1][c(v)];
    }
    const double se = std::sqrt(1.0 / 3 * 2.0 / 3 / N);
    for (const auto& f : freq) {
        CHECK(f[0] == 0);
        for (int c = 1; c <= 3; ++c)
            CHECK(std::abs(f[c] / double(N) - 1.0 / 3) <= 4 * se);
    }
    Rng a(5), b(5);
    CHECK(phase1(h, p, a) == phase1(h, p, b));
}

TEST_CASE("proposal frequencies")
{
    auto p = derive_params(20, 3);
    const int N = 20000;
    Rng rng(8);
    std::vector<int> count(4, 0);
    for (int i = 0; i < N; ++i)
        for (Color c : draw_proposals(1, p, rng))
            ++count[c];
    const double pr = p.p_recolor;
    for (int u = 1; u <= 3; ++u)
        CHECK(std::abs(count[u] / double(N) - pr) <= 4 * std::sqrt(pr * (1 - pr) / N));
    const double p0 = 1 - 3 * pr;
    CHECK(std::abs(count[0] / double(N) - p0) <= 4 * std::sqrt(p0 * (1 - p0) / N));
}

TEST_CASE("conservativity and locality on H(40, 4, p)")
{
    const auto p = derive_params(4, 2);
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Hypergraph h = sample(ModelParams{40, 4, 0.0008, s});
        const TrialTrace tr = run_trial(h, p, s, 0);
        for (Vertex i = 1; i <= h.n(); ++i) {
            const Color z = tr.zeta(i);
            REQUIRE((z == tr.xi(i) || z == tr.eta[i - 1]));
            if (z == tr.xi(i))
                continue;
            bool in_mono = false;
            for (EdgeIndex e : h.incident_edges(i)) {
                const auto ev = h.edge(e);
                in_mono |= std::all_of(ev.begin(), ev.end(), [&](Vertex v) { return tr.xi(v) == tr.xi(ev[0]); });
            }
            REQUIRE(in_mono);
        }
        if (h.is_proper(tr.xi))
            REQUIRE(tr.zeta == tr.xi);
    }
}

TEST_CASE("trial determinism")
{
    const Hypergraph h = sample(ModelParams{20, 3, 0.02, 4});
    const auto p = derive_params(3, 2);
    const TrialTrace a = run_trial(h, p, 10, 3), b = run_trial(h, p, 10, 3), c = run_trial(h, p, 10, 4);
    CHECK(a.xi == b.xi);
    CHECK(a.eta == b.eta);
    CHECK(a.zeta == b.zeta);
    CHECK(!(a.xi == c.xi && a.eta == c.eta));
}

TEST_CASE("retry wrapper")
{
    const auto p = derive_params(3, 2);
    const auto empty = color(Hypergraph(5, 3, {}), p, 10, 1);
    CHECK(empty.success);
    CHECK(empty.trials_used == 1);

    Hypergraph single(3, 3, {{1, 2, 3}});
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto out = color(single, p, 50, s);
        REQUIRE(out.success);
        REQUIRE(single.is_proper(*out.coloring));
    }

    Hypergraph fano(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
    const auto f = color(fano, p, 30, 2);
    CHECK(!f.success);
    CHECK(f.trials_used == 30);
    CHECK(!f.coloring);
    CHECK_THROWS_AS(color(fano, p, 0, 2), InvalidArgument);
}

TEST_CASE("outcome does not depend on thread count")
{
    const auto p = derive_params(3, 2);
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Hypergraph h = sample(ModelParams{10, 3, 0.12, s});
        const auto a = color(h, p, 100, s, 1);
        const auto b = color(h, p, 100, s, 4);
        CHECK(a.success == b.success);
        CHECK(a.trials_used == b.trials_used);
        CHECK(a.coloring == b.coloring);
    }
}

TEST_CASE("successes are proper and confirmed by the oracle")
{
    std::size_t successes = 0;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const std::size_t r = 2 + s % 2;
        const Hypergraph h = sample(ModelParams{12, 3, 0.05 + 0.1 * (s % 3), s});
        const auto p = derive_params(3, r);
        const auto out = color(h, p, 100, s);
        if (!out.success)
            continue;
        ++successes;
        REQUIRE(h.is_proper(*out.coloring));
        REQUIRE(is_r_colorable(h, r).decision == Decision::yes);
    }
    CHECK(successes > 100);
}

TEST_CASE("list variant")
{
    Hypergraph h(3, 3, {{1, 2, 3}});
    const auto p = derive_params(3, 2);
    const ListAssignment disjoint(2, {{1, 2}, {3, 4}, {5, 6}});
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto out = color_from_lists(h, disjoint, p, 5, s);
        REQUIRE(out.success);
        CHECK(out.trials_used == 1);
    }
    CHECK_THROWS_AS(color_from_lists(h, ListAssignment(3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}), p, 5, 1),
                    InvalidArgument);

    // Identical lists {1..r} reproduce the plain colorer draw for draw.
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Hypergraph g = sample(ModelParams{12, 3, 0.08, s});
        const auto pr = derive_params(3, 3);
        const ListAssignment u = ListAssignment::uniform(12, 3);
        const auto a = run_trial(g, pr, s, 0), b = run_trial(g, u, pr, s, 0);
        REQUIRE(a.zeta == b.zeta);
        REQUIRE(color(g, pr, 20, s).trials_used == color_from_lists(g, u, pr, 20, s).trials_used);
    }

    // zeta_i in L(i) always.
    Rng lr(4);
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Hypergraph g = sample(ModelParams{10, 3, 0.1, s});
        std::vector<std::vector<Color>> lists(10);
        for (auto& l : lists) {
            const Color base = 1 + static_cast<Color>(lr.below(3));
            l = {base, base + 1 + static_cast<Color>(lr.below(2))};
        }
        const ListAssignment la(2, lists);
        const auto tr = run_trial(g, la, derive_params(3, 2), s, 0);
        for (Vertex v = 1; v <= 10; ++v) {
            REQUIRE(la.contains(v, tr.xi(v)));
            REQUIRE(la.contains(v, tr.zeta(v)));
        }
    }
}
