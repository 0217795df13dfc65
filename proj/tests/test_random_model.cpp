#include "rcolor/error.hpp"
#include "rcolor/random_model.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace rcolor;
using Big = boost::multiprecision::cpp_bin_float_50;

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(sample(ModelParams{5, 6, 0.5, 0}), InvalidArgument);
    CHECK_THROWS_AS(sample(ModelParams{5, 1, 0.5, 0}), InvalidArgument);
    CHECK_THROWS_AS(sample(ModelParams{5, 2, 1.5, 0}), InvalidArgument);
    CHECK_THROWS_AS(sample(ModelParams{5, 2, -0.1, 0}), InvalidArgument);
    CHECK_THROWS_AS(sample(ModelParams{200, 100, 0.5, 0}), CapacityError);
}

TEST_CASE("extreme probabilities")
{
    CHECK(sample(ModelParams{10, 3, 0.0, 4}).edge_count() == 0);
    const Hypergraph full = sample(ModelParams{9, 4, 1.0, 4});
    CHECK(full.edge_count() == 126);
    for (EdgeIndex e = 0; e < full.edge_count(); ++e)
        CHECK(colex_rank(full.edge(e)) == e);
}

TEST_CASE("exact binomials and colex round trip")
{
    CHECK(binomial_checked(20, 5) == 15504);
    CHECK(binomial_checked(62, 31) == 465428353255261088ULL);
    CHECK_THROWS_AS(binomial_checked(70, 35), CapacityError);
    std::vector<Vertex> out(5);
    for (std::uint64_t r = 0; r < binomial_checked(14, 5); r += 7) {
        colex_unrank(r, 14, out);
        CHECK(std::is_sorted(out.begin(), out.end()));
        CHECK(out.front() >= 1);
        CHECK(out.back() <= 14);
        CHECK(colex_rank(out) == r);
    }
    std::vector<Vertex> big(31);
    const std::uint64_t last = binomial_checked(62, 31) - 1;
    colex_unrank(last, 62, big);
    CHECK(big.front() == 32);
    CHECK(colex_rank(big) == last);
}

TEST_CASE("determinism and canonical order")
{
    const ModelParams mp{30, 4, 0.01, 77};
    const Hypergraph a = sample(mp), b = sample(mp);
    CHECK(a == b);
    CHECK(!(sample(mp, 1) == a));
    for (EdgeIndex e = 1; e < a.edge_count(); ++e)
        CHECK(colex_rank(a.edge(e - 1)) < colex_rank(a.edge(e)));
}

TEST_CASE("edge count mean within 4 standard errors")
{
    const ModelParams base{12, 3, 0.05, 0};
    const int N = 2000;
    double sum = 0;
    std::size_t spot = 0;
    const std::vector<Vertex> edge{2, 5, 11};
    for (int s = 0; s < N; ++s) {
        ModelParams mp = base;
        mp.seed = static_cast<std::uint64_t>(s);
        const Hypergraph h = sample(mp);
        sum += static_cast<double>(h.edge_count());
        for (EdgeIndex e = 0; e < h.edge_count(); ++e)
            spot += std::equal(edge.begin(), edge.end(), h.edge(e).begin());
    }
    const double mean = sum / N;
    const double se = std::sqrt(220 * 0.05 * 0.95 / N);
    CHECK(std::abs(mean - 11.0) <= 4 * se);
    const double freq = static_cast<double>(spot) / N;
    CHECK(std::abs(freq - 0.05) <= 4 * std::sqrt(0.05 * 0.95 / N));
}

TEST_CASE("coupled sampling is monotone in p")
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Hypergraph lo = sample_coupled(ModelParams{12, 3, 0.03, s});
        const Hypergraph hi = sample_coupled(ModelParams{12, 3, 0.06, s});
        std::vector<std::uint64_t> a, b;
        for (EdgeIndex e = 0; e < lo.edge_count(); ++e)
            a.push_back(colex_rank(lo.edge(e)));
        for (EdgeIndex e = 0; e < hi.edge_count(); ++e)
            b.push_back(colex_rank(hi.edge(e)));
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("expected edge count")
{
    CHECK(expected_edge_count(ModelParams{10, 3, 0.1, 0}) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(expected_edge_count(ModelParams{10, 3, 0.0, 0}) == 0.0);
    CHECK(expected_edge_count(ModelParams{20, 5, 1.0, 0}) == doctest::Approx(15504).epsilon(1e-14));
}

TEST_CASE("chernoff tail")
{
    // lambda = EX gives exp(-3 EX / 8); with EX = Delta / 2 that is exp(-3 Delta / 16).
    CHECK(chernoff_tail(16, 16) == doctest::Approx(std::exp(-6.0)).epsilon(1e-14));
    CHECK(chernoff_tail(8, 8) == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
    CHECK(chernoff_tail(8, 8) == doctest::Approx(0.049787).epsilon(1e-5));
    const Big lambda = 10, mean = 100;
    const Big ref = exp(-lambda * lambda / (2 * (mean + lambda / 3)));
    CHECK(chernoff_tail(100, 10) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
    CHECK(chernoff_tail(100, 10) == doctest::Approx(0.616393).epsilon(1e-5));
    CHECK(chernoff_tail(5, 1e-12) == doctest::Approx(1.0));
    CHECK_THROWS_AS(chernoff_tail(5, 0), DomainError);
    CHECK_THROWS_AS(chernoff_tail(-1, 1), DomainError);
}

TEST_CASE("phi and the p bound")
{
    CHECK(phi(100) == 4.0);
    CHECK(phi(1e6) == 2.0);
    CHECK_THROWS(phi(2));

    // (1/2) 3^99 100^-5 10^6 / C(10^6, 100) with 50-digit arithmetic.
    Big binom = 1;
    for (int i = 0; i < 100; ++i)
        binom = binom * Big(1000000 - i) / Big(i + 1);
    const Big ref = Big(0.5) * pow(Big(3), 99) * pow(Big(100), -5) * Big(1000000) / binom;
    const LogValue got = theorem2_p(1e6, 100, 3);
    CHECK(got.sign() == 1);
    CHECK(got.log() == doctest::Approx(static_cast<double>(log(ref))).epsilon(1e-12));
    CHECK_THROWS(theorem2_p(1e6, 100, 1));

    const LogValue deg = expected_max_degree_threshold(1e6, 100, 3);
    CHECK(deg.log() == doctest::Approx(99 * std::log(3.0) - 4 * std::log(100.0)).epsilon(1e-14));
    const auto cond = theorem2_conditions(1e6, 5, 2, 0.1);
    CHECK(cond.growth_condition);
    CHECK(!cond.degree_condition); // 2^4 5^-4 < 6 ln 10^6
}
