#include "rcolor/random_model.hpp"

#include "rcolor/error.hpp"
#include "rcolor/rng.hpp"

#include <cmath>
#include <string>

namespace rcolor {

void ModelParams::validate() const
{
    if (k < 2)
        throw InvalidArgument("model requires k >= 2");
    if (k > n)
        throw InvalidArgument("model requires k <= n");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("model requires 0 <= p <= 1");
}

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    constexpr unsigned __int128 limit = static_cast<unsigned __int128>(1) << 63;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // c * (n - k + i) / i stays integral; overflow of the 128-bit
        // intermediate is impossible while c < 2^63 and n < 2^64.
        c = c * (n - k + i) / i;
        if (c >= limit)
            throw CapacityError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") does not fit below 2^63");
    }
    return static_cast<std::uint64_t>(c);
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t s = a + b;
    return s < a ? ~std::uint64_t{0} : s;
}

// rows_[i][c] = C(c, i), saturated. Every entry actually subtracted during
// unranking is <= the rank, hence exact.
class BinomialTable
{
public:
    BinomialTable(std::size_t n, std::size_t k) : n_(n), rows_(k + 1, std::vector<std::uint64_t>(n + 1, 0))
    {
        for (std::size_t c = 0; c <= n; ++c)
            rows_[0][c] = 1;
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t c = i; c <= n; ++c)
                rows_[i][c] = saturating_add(rows_[i][c - 1], rows_[i - 1][c - 1]);
    }

    std::uint64_t operator()(std::size_t c, std::size_t i) const { return c < i ? 0 : rows_[i][c]; }

    // Largest c < bound with C(c, i) <= rank.
    std::size_t largest_below(std::size_t bound, std::size_t i, std::uint64_t rank) const
    {
        std::size_t lo = i - 1, hi = bound - 1; // C(i-1, i) = 0 <= rank always
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (rows_[i][mid] <= rank)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

void unrank_with(const BinomialTable& table, std::uint64_t rank, std::span<Vertex> out)
{
    const std::size_t k = out.size();
    std::size_t bound = table.n();
    for (std::size_t i = k; i >= 1; --i) {
        const std::size_t c = table.largest_below(bound, i, rank);
        out[i - 1] = static_cast<Vertex>(c + 1);
        rank -= table(c, i);
        bound = c;
    }
}

} // namespace

std::uint64_t colex_rank(std::span<const Vertex> subset)
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        rank += binomial_checked(subset[i] - 1, i + 1);
    return rank;
}

void colex_unrank(std::uint64_t rank, std::size_t n, std::span<Vertex> out)
{
    const std::size_t k = out.size();
    if (k == 0 || k > n)
        throw InvalidArgument("colex_unrank requires 1 <= k <= n");
    if (rank >= binomial_checked(n, k))
        throw InvalidArgument("colex rank out of range");
    unrank_with(BinomialTable(n, k), rank, out);
}

Hypergraph sample(const ModelParams& params, std::uint64_t stream)
{
    params.validate();
    const std::uint64_t universe = binomial_checked(params.n, params.k);
    std::vector<Vertex> flat;
    if (params.p == 0.0)
        return Hypergraph::from_flat(params.n, params.k, std::move(flat));

    Rng rng = Rng::for_stream(params.seed, {stream});
    const BinomialTable table(params.n, params.k);
    std::vector<Vertex> edge(params.k);
    auto emit = [&](std::uint64_t rank) {
        unrank_with(table, rank, edge);
        flat.insert(flat.end(), edge.begin(), edge.end());
    };

    if (params.p == 1.0) {
        flat.reserve(universe * params.k);
        for (std::uint64_t r = 0; r < universe; ++r)
            emit(r);
        return Hypergraph::from_flat(params.n, params.k, std::move(flat));
    }

    // Gap before the next kept edge is Geometric(p) on {0, 1, ...}.
    const double log_q = std::log1p(-params.p);
    std::uint64_t next = 0;
    for (;;) {
        const double gap = std::floor(std::log(rng.uniform_open0()) / log_q);
        if (gap >= static_cast<double>(universe - next))
            break;
        next += static_cast<std::uint64_t>(gap);
        emit(next);
        if (++next >= universe)
            break;
    }
    return Hypergraph::from_flat(params.n, params.k, std::move(flat));
}

Hypergraph sample_coupled(const ModelParams& params, std::uint64_t stream)
{
    params.validate();
    const std::uint64_t universe = binomial_checked(params.n, params.k);
    Rng rng = Rng::for_stream(params.seed, {stream});
    const BinomialTable table(params.n, params.k);
    std::vector<Vertex> flat;
    std::vector<Vertex> edge(params.k);
    for (std::uint64_t r = 0; r < universe; ++r) {
        if (rng.uniform01() < params.p) {
            unrank_with(table, r, edge);
            flat.insert(flat.end(), edge.begin(), edge.end());
        }
    }
    return Hypergraph::from_flat(params.n, params.k, std::move(flat));
}

double expected_edge_count(const ModelParams& params)
{
    params.validate();
    double c = 1.0;
    const std::size_t j = std::min(params.k, params.n - params.k);
    for (std::size_t i = 1; i <= j; ++i)
        c = c * static_cast<double>(params.n - j + i) / static_cast<double>(i);
    return c * params.p;
}

double chernoff_tail(double mean, double lambda)
{
    if (!(mean >= 0))
        throw DomainError("chernoff_tail requires mean >= 0");
    if (!(lambda > 0))
        throw DomainError("chernoff_tail requires lambda > 0");
    return std::exp(-lambda * lambda / (2.0 * (mean + lambda / 3.0)));
}

double phi(double k)
{
    if (!(k >= 3))
        throw DomainError("phi(k) requires k >= 3");
    const double lk = std::log(k);
    const double steps = std::floor(std::sqrt(lk / std::log(2.0 * lk)));
    if (steps < 1)
        throw DomainError("phi(k) undefined: floor(sqrt(ln k / ln(2 ln k))) is 0");
    return 4.0 / steps;
}

namespace {

void check_theorem2_domain(double n, double k, double r)
{
    if (!(k >= 3))
        throw DomainError("requires k >= 3");
    if (!(r >= 2))
        throw DomainError("requires r >= 2");
    if (!(n >= k))
        throw DomainError("requires n >= k");
}

} // namespace

LogValue theorem2_p(double n, double k, double r)
{
    check_theorem2_domain(n, k, r);
    return LogValue::from_log(std::log(0.5) + (k - 1) * std::log(r) - (1 + phi(k)) * std::log(k) + std::log(n) -
                              log_binomial(n, k));
}

LogValue expected_max_degree_threshold(double n, double k, double r)
{
    check_theorem2_domain(n, k, r);
    return LogValue::from_log((k - 1) * std::log(r) - phi(k) * std::log(k));
}

Theorem2Conditions theorem2_conditions(double n, double k, double r, double delta)
{
    check_theorem2_domain(n, k, r);
    if (!(delta > 0 && delta < 1))
        throw DomainError("delta must lie in (0, 1)");
    const double ln_n = std::log(n);
    return {
        expected_max_degree_threshold(n, k, r).log() >= std::log(6.0 * ln_n),
        (k - 1) * std::log(r) < (1 - delta) / 2 * ln_n,
    };
}

} // namespace rcolor
