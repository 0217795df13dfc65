#include "rcolor/colorer.hpp"

#include "rcolor/bounds.hpp"
#include "rcolor/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace rcolor {

RecoloringParams derive_params(std::size_t k, std::size_t r, double alpha, double b, std::optional<std::size_t> omega,
                               const ParamOverrides& overrides)
{
    if (r < 2)
        throw InvalidArgument("recoloring needs r >= 2");
    if (!(b > 0))
        throw DomainError("b must be positive");
    const double kd = static_cast<double>(k);

    RecoloringParams p;
    p.r = r;
    p.alpha = alpha;
    p.b = b;
    p.omega = omega ? *omega : max_admissible_omega(kd);
    p.t = overrides.t ? *overrides.t : recoloring_t(kd, alpha);
    if (p.t < 1)
        throw DomainError("t must be positive");
    p.q = overrides.q ? *overrides.q : recoloring_q(kd, alpha);
    if (!(p.q > 0 && p.q < 1))
        throw DomainError("q must lie in (0, 1)");

    const double rd = static_cast<double>(r);
    if (overrides.p_recolor) {
        p.p_recolor = *overrides.p_recolor;
        if (!(p.p_recolor > 0 && p.p_recolor < 1))
            throw DomainError("p_recolor must lie in (0, 1)");
    } else {
        p.p_recolor = p.q / (rd - 1);
    }
    if (rd * p.p_recolor > 1) {
        if (overrides.q || overrides.p_recolor)
            throw DomainError("r * p_recolor exceeds 1");
        p.p_recolor = 1 / rd;
        p.p_clamped = true;
    }

    p.condition1 = b <= p.t && static_cast<double>(p.t) < kd - static_cast<double>(p.omega);
    p.condition2 = 2 / kd <= p.q && p.q <= 0.5;
    return p;
}

bool is_almost_monochromatic(const Hypergraph& h, EdgeIndex e, Color u, const Coloring& xi,
                             const RecoloringParams& params)
{
    long off = 0;
    for (Vertex v : h.edge(e))
        off += xi(v) != u;
    return off > 0 && off <= params.am_threshold();
}

Coloring phase1(const Hypergraph& h, const RecoloringParams& params, Rng& rng)
{
    if (params.r < 2)
        throw InvalidArgument("recoloring needs r >= 2");
    std::vector<Color> c(h.n());
    for (auto& x : c)
        x = static_cast<Color>(rng.below(params.r) + 1);
    return Coloring(std::move(c));
}

Coloring phase1(const Hypergraph& h, const ListAssignment& lists, Rng& rng)
{
    if (lists.size() != h.n())
        throw InvalidArgument("list assignment size differs from n");
    std::vector<Color> c(h.n());
    for (Vertex v = 1; v <= h.n(); ++v) {
        const auto l = lists.list(v);
        c[v - 1] = l[rng.below(l.size())];
    }
    return Coloring(std::move(c));
}

namespace {

// Value u_j (j = floor(U / p)) when U < r p, 0 otherwise.
template <class Pick>
Color draw_one(Rng& rng, double p, std::size_t r, Pick pick)
{
    const double u = rng.uniform01();
    if (!(u < static_cast<double>(r) * p))
        return 0;
    const auto j = std::min<std::size_t>(static_cast<std::size_t>(u / p), r - 1);
    return pick(j);
}

} // namespace

std::vector<Color> draw_proposals(std::size_t n, const RecoloringParams& params, Rng& rng)
{
    std::vector<Color> eta(n);
    for (auto& x : eta)
        x = draw_one(rng, params.p_recolor, params.r, [](std::size_t j) { return static_cast<Color>(j + 1); });
    return eta;
}

std::vector<Color> draw_proposals(const ListAssignment& lists, const RecoloringParams& params, Rng& rng)
{
    std::vector<Color> eta(lists.size());
    for (Vertex v = 1; v <= lists.size(); ++v) {
        const auto l = lists.list(v);
        eta[v - 1] = draw_one(rng, params.p_recolor, l.size(), [&](std::size_t j) { return l[j]; });
    }
    return eta;
}

Coloring phase2_with_proposals(const Hypergraph& h, const RecoloringParams& params, const Coloring& xi,
                               std::span<const Color> eta)
{
    const std::size_t n = h.n();
    const std::size_t k = h.k();
    if (xi.size() != n || eta.size() != n)
        throw InvalidArgument("phase 2 inputs must have length n");
    const std::size_t m = h.edge_count();

    // mono[e]: the color of e if e is monochromatic in xi, else 0.
    // intact[e]: no processed vertex of e has left that color yet.
    std::vector<Color> mono(m, 0);
    std::vector<char> intact(m, 0);
    for (EdgeIndex e = 0; e < m; ++e) {
        const auto ev = h.edge(e);
        const Color c = xi(ev[0]);
        if (std::all_of(ev.begin(), ev.end(), [&](Vertex v) { return xi(v) == c; })) {
            mono[e] = c;
            intact[e] = 1;
        }
    }

    const long am = params.am_threshold();
    Coloring z = xi; // zeta for s < i, xi for s >= i
    for (Vertex i = 1; i <= n; ++i) {
        const Color u = eta[i - 1];
        if (u == 0)
            continue;
        const auto inc = h.incident_edges(i);
        const bool d = std::any_of(inc.begin(), inc.end(), [&](EdgeIndex e) { return mono[e] != 0 && intact[e]; });
        if (!d)
            continue;

        bool a = false;
        if (xi(i) != u) {
            for (EdgeIndex f : inc) {
                long off = 0;    // vertices of f with xi != u
                std::size_t now = 0; // vertices s != i of f with z_s == u
                for (Vertex s : h.edge(f)) {
                    off += xi(s) != u;
                    now += s != i && z(s) == u;
                }
                if (off > 0 && off <= am && now == k - 1) {
                    a = true;
                    break;
                }
            }
        }
        if (a || u == xi(i))
            continue;

        z.set(i, u);
        for (EdgeIndex e : inc)
            intact[e] = 0;
    }
    return z;
}

Coloring phase2(const Hypergraph& h, const RecoloringParams& params, const Coloring& xi, Rng& rng)
{
    const auto eta = draw_proposals(h.n(), params, rng);
    return phase2_with_proposals(h, params, xi, eta);
}

namespace {

std::size_t count_changed(const Coloring& a, const Coloring& b)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += a.values()[i] != b.values()[i];
    return c;
}

} // namespace

TrialTrace run_trial(const Hypergraph& h, const RecoloringParams& params, std::uint64_t seed, std::uint64_t trial)
{
    Rng rng = Rng::for_stream(seed, {trial});
    TrialTrace tr;
    tr.xi = phase1(h, params, rng);
    tr.eta = draw_proposals(h.n(), params, rng);
    tr.zeta = phase2_with_proposals(h, params, tr.xi, tr.eta);
    tr.recolored = count_changed(tr.xi, tr.zeta);
    return tr;
}

TrialTrace run_trial(const Hypergraph& h, const ListAssignment& lists, const RecoloringParams& params,
                     std::uint64_t seed, std::uint64_t trial)
{
    Rng rng = Rng::for_stream(seed, {trial});
    TrialTrace tr;
    tr.xi = phase1(h, lists, rng);
    tr.eta = draw_proposals(lists, params, rng);
    tr.zeta = phase2_with_proposals(h, params, tr.xi, tr.eta);
    tr.recolored = count_changed(tr.xi, tr.zeta);
    return tr;
}

namespace {

template <class Trial, class Accept>
TrialOutcome search(const RecoloringParams& params, std::size_t max_trials, std::size_t threads, Trial trial,
                    Accept accept)
{
    if (max_trials < 1)
        throw InvalidArgument("max_trials must be at least 1");
    threads = std::max<std::size_t>(1, threads);

    TrialOutcome out;
    out.condition1 = params.condition1;
    out.condition2 = params.condition2;
    out.p_clamped = params.p_clamped;

    std::vector<std::optional<TrialTrace>> round(threads);
    for (std::size_t base = 0; base < max_trials; base += threads) {
        const std::size_t count = std::min(threads, max_trials - base);
        auto work = [&](std::size_t slot) {
            TrialTrace tr = trial(base + slot);
            round[slot] = accept(tr.zeta) ? std::optional<TrialTrace>(std::move(tr)) : std::nullopt;
        };
        if (count == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t s = 0; s < count; ++s)
                pool.emplace_back(work, s);
        }
        for (std::size_t s = 0; s < count; ++s) {
            if (!round[s])
                continue;
            if (!accept(round[s]->zeta))
                throw Error("internal: accepted coloring is not proper");
            out.success = true;
            out.trials_used = base + s + 1;
            out.recolored_count = round[s]->recolored;
            out.coloring = std::move(round[s]->zeta);
            return out;
        }
    }
    out.trials_used = max_trials;
    return out;
}

} // namespace

TrialOutcome color(const Hypergraph& h, const RecoloringParams& params, std::size_t max_trials, std::uint64_t seed,
                   std::size_t threads)
{
    return search(
        params, max_trials, threads, [&](std::uint64_t j) { return run_trial(h, params, seed, j); },
        [&](const Coloring& z) { return h.is_proper(z); });
}

TrialOutcome color_from_lists(const Hypergraph& h, const ListAssignment& lists, const RecoloringParams& params,
                              std::size_t max_trials, std::uint64_t seed, std::size_t threads)
{
    if (lists.size() != h.n())
        throw InvalidArgument("list assignment size differs from n");
    if (lists.list_size() != params.r)
        throw InvalidArgument("list size differs from r");
    auto from_lists = [&](const Coloring& z) {
        for (Vertex v = 1; v <= h.n(); ++v)
            if (!lists.contains(v, z(v)))
                return false;
        return true;
    };
    return search(
        params, max_trials, threads, [&](std::uint64_t j) { return run_trial(h, lists, params, seed, j); },
        [&](const Coloring& z) { return from_lists(z) && h.is_proper(z); });
}

} // namespace rcolor
