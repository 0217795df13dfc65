#include "rcolor/error.hpp"
#include "rcolor/sweep.hpp"

#include <doctest.h>

#include <sstream>

using namespace rcolor;

namespace {

std::string csv(const SweepConfig& c)
{
    std::ostringstream out;
    write_sweep_csv(out, run_sweep(c));
    return out.str();
}

} // namespace

TEST_CASE("wilson interval")
{
    for (std::size_t n : {1u, 2u, 10u, 200u})
        for (std::size_t s = 0; s <= n; ++s) {
            const auto w = wilson_interval(s, n);
            const double est = static_cast<double>(s) / n;
            CHECK(w.low >= 0);
            CHECK(w.high <= 1);
            CHECK(w.low <= est);
            CHECK(w.high >= est);
        }
    const auto w = wilson_interval(50, 100);
    CHECK(w.low == doctest::Approx(0.403832).epsilon(1e-5));
    CHECK(w.high == doctest::Approx(0.596168).epsilon(1e-5));
    CHECK_THROWS_AS(wilson_interval(3, 2), InvalidArgument);
}

TEST_CASE("config validation and JSON")
{
    SweepConfig c;
    c.n = 10;
    c.p_grid = {0.1, 0.1};
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.p_grid = {0.1, 1.2};
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.p_grid = {0.1};
    c.samples_per_point = 0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);

    const auto j = load_sweep_config(R"({"n": 14, "k": 3, "r": 2, "p_from": 0, "p_to": 0.3, "p_steps": 4,
                                         "samples": 7, "method": "both", "seed": 9, "omega": 2})");
    CHECK(j.n == 14);
    REQUIRE(j.p_grid.size() == 4);
    CHECK(j.p_grid[1] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(j.p_grid[3] == 0.3);
    CHECK(j.samples_per_point == 7);
    CHECK(j.method == SweepMethod::both);
    CHECK(j.omega == 2u);
    CHECK(load_sweep_config(R"({"p_grid": [0.5]})").p_grid.size() == 1);
    CHECK_THROWS_AS(load_sweep_config("{bad"), ParseError);
    CHECK_THROWS_AS(load_sweep_config(R"({"method": "magic"})"), InvalidArgument);
    CHECK(linear_grid(0, 1, 3) == std::vector<double>{0, 0.5, 1});
}

TEST_CASE("edge probabilities 0 and 1")
{
    SweepConfig c;
    c.n = 14;
    c.k = 3;
    c.r = 2;
    c.p_grid = {0.0, 1.0};
    c.samples_per_point = 1;
    c.method = SweepMethod::both;
    const auto rows = run_sweep(c);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].method == SweepMethod::recolor);
    CHECK(rows[0].estimate == 1.0);
    CHECK(rows[1].estimate == 1.0);
    CHECK(rows[3].method == SweepMethod::oracle);
    CHECK(rows[3].estimate == 0.0);
    CHECK(rows[2].estimate == 0.0);
    CHECK(rows[1].mean_trials == 0.0);
}

TEST_CASE("recolor never beats the oracle; byte-identical across thread counts")
{
    SweepConfig c;
    c.n = 12;
    c.k = 3;
    c.r = 2;
    c.p_grid = linear_grid(0.02, 0.2, 4);
    c.samples_per_point = 30;
    c.method = SweepMethod::both;
    c.max_trials = 50;
    const auto rows = run_sweep(c);
    for (std::size_t i = 0; i < rows.size(); i += 2)
        CHECK(rows[i].successes <= rows[i + 1].successes);

    const std::string one = csv(c);
    c.threads = 4;
    CHECK(csv(c) == one);
    CHECK(one.rfind("# rcolor-sweep v1\nn,k,r,p,samples,successes,estimate,ci_low,ci_high,method,seed,mean_trials,"
                    "frac_2simple,mean_max_triangles,unknown\n",
                    0) == 0);
}

TEST_CASE("over-cap oracle rows count as unknown")
{
    SweepConfig c;
    c.n = 30;
    c.k = 3;
    c.p_grid = {0.001};
    c.samples_per_point = 3;
    c.method = SweepMethod::oracle;
    const auto rows = run_sweep(c);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].unknown == 3);
    CHECK(rows[0].successes == 0);
}
