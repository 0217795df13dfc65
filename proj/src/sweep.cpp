#include "rcolor/sweep.hpp"

#include "rcolor/analysis.hpp"
#include "rcolor/colorer.hpp"
#include "rcolor/error.hpp"
#include "rcolor/random_model.hpp"
#include "rcolor/rng.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace rcolor {

const char* to_string(SweepMethod m) noexcept
{
    switch (m) {
    case SweepMethod::recolor:
        return "recolor";
    case SweepMethod::oracle:
        return "oracle";
    case SweepMethod::both:
        return "both";
    }
    return "?";
}

SweepMethod parse_sweep_method(const std::string& s)
{
    if (s == "recolor")
        return SweepMethod::recolor;
    if (s == "oracle")
        return SweepMethod::oracle;
    if (s == "both")
        return SweepMethod::both;
    throw InvalidArgument("unknown sweep method '" + s + "'");
}

void SweepConfig::validate() const
{
    if (n < 1 || k < 2 || k > n)
        throw InvalidArgument("sweep needs 2 <= k <= n");
    if (r < 2)
        throw InvalidArgument("sweep needs r >= 2");
    if (p_grid.empty())
        throw InvalidArgument("p grid is empty");
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] >= 0 && p_grid[i] <= 1))
            throw InvalidArgument("p grid values must lie in [0, 1]");
        if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
            throw InvalidArgument("p grid must be strictly increasing");
    }
    if (samples_per_point < 1)
        throw InvalidArgument("samples per point must be at least 1");
    if (max_trials < 1)
        throw InvalidArgument("max_trials must be at least 1");
}

std::vector<double> linear_grid(double from, double to, std::size_t steps)
{
    if (steps < 1)
        throw InvalidArgument("grid needs at least one step");
    if (steps == 1)
        return {from};
    std::vector<double> g(steps);
    for (std::size_t i = 0; i < steps; ++i)
        g[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    g.back() = to;
    return g;
}

SweepConfig load_sweep_config(const std::string& json_text, SweepConfig c)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("sweep config: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError(0, "sweep config must be a JSON object");
    try {
        auto get = [&](const char* key, auto& field) {
            if (j.contains(key))
                j.at(key).get_to(field);
        };
        get("n", c.n);
        get("k", c.k);
        get("r", c.r);
        get("samples", c.samples_per_point);
        get("max_trials", c.max_trials);
        get("seed", c.seed);
        get("alpha", c.alpha);
        get("b", c.b);
        get("threads", c.threads);
        if (j.contains("omega"))
            c.omega = j.at("omega").get<std::size_t>();
        if (j.contains("method"))
            c.method = parse_sweep_method(j.at("method").get<std::string>());
        if (j.contains("p_grid")) {
            c.p_grid = j.at("p_grid").get<std::vector<double>>();
        } else if (j.contains("p_from") || j.contains("p_to") || j.contains("p_steps")) {
            c.p_grid = linear_grid(j.at("p_from").get<double>(), j.at("p_to").get<double>(),
                                   j.at("p_steps").get<std::size_t>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("sweep config: ") + e.what());
    }
    return c;
}

WilsonInterval wilson_interval(std::size_t successes, std::size_t samples)
{
    if (samples == 0 || successes > samples)
        throw InvalidArgument("wilson interval needs 0 <= successes <= samples, samples > 0");
    constexpr double z = 1.959963984540054;
    const double nn = static_cast<double>(samples);
    const double ph = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1 + z2 / nn;
    const double centre = (ph + z2 / (2 * nn)) / denom;
    const double half = z / denom * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn));
    WilsonInterval w{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    // Rounding can push an endpoint past the estimate at 0 or 1.
    w.low = std::min(w.low, ph);
    w.high = std::max(w.high, ph);
    return w;
}

namespace {

struct SampleResult
{
    bool two_simple = false;
    std::size_t max_triangles = 0;
    bool recolor_success = false;
    std::size_t trials = 0;
    Decision oracle = Decision::unknown;
};

SampleResult run_sample(const SweepConfig& c, const RecoloringParams* params, std::size_t point, std::size_t sample)
{
    ModelParams mp{c.n, c.k, c.p_grid[point], stream_seed(c.seed, {point, sample})};
    const Hypergraph h = rcolor::sample(mp);

    SampleResult res;
    res.two_simple = h.is_l_simple(2);
    res.max_triangles = h.max_triangles_per_edge();

    if (params) {
        const auto out = color(h, *params, c.max_trials, stream_seed(c.seed, {point, sample, 1}));
        res.recolor_success = out.success;
        res.trials = out.trials_used;
    }
    if (c.method != SweepMethod::recolor) {
        try {
            res.oracle = is_r_colorable(h, c.r, c.limits).decision;
        } catch (const CapacityError&) {
            res.oracle = Decision::unknown;
        }
        if (res.recolor_success && res.oracle == Decision::no)
            throw Error("internal: recoloring succeeded on an instance the oracle rejects");
    }
    return res;
}

SweepRecord make_row(const SweepConfig& c, std::size_t point, SweepMethod m, const std::vector<SampleResult>& all)
{
    SweepRecord row;
    row.n = c.n;
    row.k = c.k;
    row.r = c.r;
    row.p = c.p_grid[point];
    row.samples = c.samples_per_point;
    row.method = m;
    row.seed = c.seed;
    std::size_t simple = 0, trials = 0, tri = 0;
    for (std::size_t s = 0; s < c.samples_per_point; ++s) {
        const SampleResult& x = all[point * c.samples_per_point + s];
        simple += x.two_simple;
        tri += x.max_triangles;
        if (m == SweepMethod::recolor) {
            row.successes += x.recolor_success;
            trials += x.trials;
        } else {
            row.successes += x.oracle == Decision::yes;
            row.unknown += x.oracle == Decision::unknown;
        }
    }
    const double ns = static_cast<double>(row.samples);
    row.estimate = static_cast<double>(row.successes) / ns;
    const auto w = wilson_interval(row.successes, row.samples);
    row.ci_low = w.low;
    row.ci_high = w.high;
    row.mean_trials = static_cast<double>(trials) / ns;
    row.frac_2simple = static_cast<double>(simple) / ns;
    row.mean_max_triangles = static_cast<double>(tri) / ns;
    return row;
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& c)
{
    c.validate();
    std::optional<RecoloringParams> params;
    if (c.method != SweepMethod::oracle)
        params = derive_params(c.k, c.r, c.alpha, c.b, c.omega);

    const std::size_t tasks = c.p_grid.size() * c.samples_per_point;
    std::vector<SampleResult> results(tasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks)
                return;
            try {
                results[i] = run_sample(c, params ? &*params : nullptr, i / c.samples_per_point,
                                        i % c.samples_per_point);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(tasks);
                return;
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(c.threads, tasks));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<SweepRecord> rows;
    for (std::size_t point = 0; point < c.p_grid.size(); ++point) {
        if (c.method != SweepMethod::oracle)
            rows.push_back(make_row(c, point, SweepMethod::recolor, results));
        if (c.method != SweepMethod::recolor)
            rows.push_back(make_row(c, point, SweepMethod::oracle, results));
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows)
{
    out << sweep_csv_version << '\n';
    out << "n,k,r,p,samples,successes,estimate,ci_low,ci_high,method,seed,mean_trials,frac_2simple,"
           "mean_max_triangles,unknown\n";
    char buf[512];
    for (const SweepRecord& x : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%zu,%zu,%.6f,%.6f,%.6f,%s,%llu,%.4f,%.6f,%.4f,%zu\n", x.n,
                      x.k, x.r, x.p, x.samples, x.successes, x.estimate, x.ci_low, x.ci_high, to_string(x.method),
                      static_cast<unsigned long long>(x.seed), x.mean_trials, x.frac_2simple, x.mean_max_triangles,
                      x.unknown);
        out << buf;
    }
}

} // namespace rcolor
