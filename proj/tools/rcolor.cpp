// rcolor: generate, inspect, color and sweep random k-uniform hypergraphs.
//
// Exit codes: 0 success / decided true, 1 not found / decided false,
// 2 unknown or over capacity, 64 usage error, 65 unreadable input.

#include "rcolor/analysis.hpp"
#include "rcolor/bounds.hpp"
#include "rcolor/colorer.hpp"
#include "rcolor/error.hpp"
#include "rcolor/hypergraph_io.hpp"
#include "rcolor/oracle.hpp"
#include "rcolor/random_model.hpp"
#include "rcolor/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rcolor;

constexpr int exit_usage = 64;
constexpr int exit_data = 65;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void print_coloring(const Coloring& c)
{
    std::cout << "coloring=";
    for (std::size_t i = 0; i < c.size(); ++i)
        std::cout << (i ? " " : "") << c.values()[i];
    std::cout << '\n';
}

// ---------------------------------------------------------------------------

struct GenOpts
{
    std::size_t n = 0, k = 0;
    double p = 0;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenOpts& o)
{
    ModelParams mp{o.n, o.k, o.p, o.seed};
    const Hypergraph h = sample(mp);
    const std::string stats = "m=" + std::to_string(h.edge_count()) + "\nexpected=" + fmt(expected_edge_count(mp)) + "\n";
    if (o.out.empty() || o.out == "-") {
        std::cout << write_hypergraph(h);
        std::cerr << stats;
    } else {
        save_hypergraph(h, o.out);
        std::cout << stats;
    }
    return 0;
}

struct AnalyzeOpts
{
    std::string file;
    std::optional<std::size_t> omega;
};

int cmd_analyze(const AnalyzeOpts& o)
{
    const Hypergraph h = load_hypergraph(o.file);
    const std::size_t omega = o.omega ? *o.omega : max_admissible_omega(static_cast<double>(h.k()));
    std::cout << to_key_value(analyze(h, omega));
    return 0;
}

struct ColorOpts
{
    std::string file;
    std::size_t r = 2;
    std::size_t max_trials = 1000;
    std::uint64_t seed = 1;
    double alpha = 2.0;
    double b = 4.0;
    std::optional<std::size_t> omega;
    std::optional<int> t;
    std::optional<double> q;
    std::optional<double> p_recolor;
    std::string lists;
    std::size_t threads = 1;
};

int cmd_color(const ColorOpts& o)
{
    const Hypergraph h = load_hypergraph(o.file);
    const RecoloringParams params =
        derive_params(h.k(), o.r, o.alpha, o.b, o.omega, ParamOverrides{o.t, o.q, o.p_recolor});
    std::cout << "r=" << params.r << "\nt=" << params.t << "\nq=" << fmt(params.q) << "\np_recolor="
              << fmt(params.p_recolor) << "\nomega=" << params.omega << "\ncondition1=" << params.condition1
              << "\ncondition2=" << params.condition2 << "\np_clamped=" << params.p_clamped << '\n';
    TrialOutcome out;
    if (!o.lists.empty()) {
        const ListAssignment la = load_list_assignment(o.lists);
        out = color_from_lists(h, la, params, o.max_trials, o.seed, o.threads);
    } else {
        out = color(h, params, o.max_trials, o.seed, o.threads);
    }
    std::cout << "success=" << (out.success ? "true" : "false") << "\ntrials=" << out.trials_used << '\n';
    if (out.success) {
        std::cout << "recolored=" << out.recolored_count << '\n';
        print_coloring(*out.coloring);
    }
    return out.success ? 0 : 1;
}

struct OracleOpts
{
    std::string file;
    std::optional<std::size_t> r;
    bool chromatic = false;
    bool choosable = false;
    std::optional<std::size_t> palette;
    OracleLimits limits;
};

int decision_exit(Decision d)
{
    return d == Decision::yes ? 0 : d == Decision::no ? 1 : 2;
}

int cmd_oracle(const OracleOpts& o)
{
    const Hypergraph h = load_hypergraph(o.file);
    if (o.chromatic) {
        const auto res = chromatic_number(h, o.limits);
        if (res.decision != Decision::yes) {
            std::cout << "chromatic=unknown\n";
            return 2;
        }
        std::cout << "chromatic=" << res.chromatic_number << '\n';
        print_coloring(*res.witness);
        return 0;
    }
    if (!o.r)
        throw UsageError("oracle needs --r, --chromatic or --choosable");
    if (o.choosable) {
        const std::size_t palette = o.palette ? *o.palette : *o.r;
        const auto res = is_r_choosable_over_palette(h, *o.r, palette, o.limits);
        std::cout << "choosable=" << to_string(res.decision) << "\npalette=" << palette
                  << "\nscope=palette-relative\nassignments_checked=" << res.assignments_checked << '\n';
        if (res.counterexample) {
            std::cout << "counterexample=";
            for (Vertex v = 1; v <= h.n(); ++v) {
                std::cout << (v > 1 ? " | " : "");
                const auto l = res.counterexample->list(v);
                for (std::size_t i = 0; i < l.size(); ++i)
                    std::cout << (i ? "," : "") << l[i];
            }
            std::cout << '\n';
        }
        return decision_exit(res.decision);
    }
    const auto res = is_r_colorable(h, *o.r, o.limits);
    std::cout << "colorable=" << to_string(res.decision) << "\nnodes=" << res.nodes << '\n';
    if (res.witness)
        print_coloring(*res.witness);
    return decision_exit(res.decision);
}

// ---------------------------------------------------------------------------

struct BoundsOpts
{
    std::string id;
    bool list = false;
    bool check_theorem4 = false;
    bool min_k = false;
    bool json = false;
    std::optional<double> n, k, r;
    double eps = 0.01;
    double c = 1.0;
    std::optional<double> delta;
    std::string delta_bound;
    std::optional<double> omega;
    double alpha = 2.0;
    double b = 4.0;
    std::optional<double> d, t, q, p;
    double k_lo = 1e6, k_hi = 1e13;
};

double need(const std::optional<double>& v, const char* name)
{
    if (!v)
        throw UsageError(std::string("missing --") + name);
    return *v;
}

int emit(const BoundReport& rep, bool json)
{
    std::cout << (json ? rep.to_json() + "\n" : rep.to_key_value());
    return 0;
}

int cmd_bounds(const BoundsOpts& o)
{
    if (o.list) {
        for (auto name : all_bound_names())
            std::cout << name << '\n';
        std::cout << "W\n";
        return 0;
    }
    if (o.check_theorem4) {
        const double k = need(o.k, "k");
        const double omega = o.omega ? *o.omega : static_cast<double>(max_admissible_omega(k));
        const auto rep = check_theorem4(k, o.r.value_or(2), omega, o.alpha, o.b, o.d.value_or(0));
        return emit(make_report(rep), o.json);
    }
    if (o.min_k) {
        const OmegaRule rule{o.omega};
        const auto lo = static_cast<std::uint64_t>(o.k_lo);
        const auto hi = static_cast<std::uint64_t>(o.k_hi);
        const auto found = find_min_k_condition3(rule, o.alpha, o.b, lo, hi);
        BoundReport rep;
        rep.bound_id = "min_k_condition3";
        rep.inputs = {{"alpha", o.alpha}, {"b", o.b}, {"k_lo", o.k_lo}, {"k_hi", o.k_hi}};
        if (o.omega)
            rep.inputs.emplace_back("omega", *o.omega);
        rep.details.emplace_back("omega_rule", o.omega ? "constant" : "max_admissible");
        rep.satisfied = found.has_value();
        rep.details.emplace_back("k_min", found ? std::to_string(*found) : "not_found");
        emit(rep, o.json);
        return found ? 0 : 1;
    }
    if (o.id.empty())
        throw UsageError("bounds needs a bound id, --check-theorem4, --min-k or --list");

    if (o.id == "W") {
        const double k = need(o.k, "k"), r = need(o.r, "r"), t = need(o.t, "t"), d = need(o.d, "d");
        const double omega = need(o.omega, "omega");
        const double q = o.q ? *o.q : recoloring_q(k, o.alpha);
        const double p = o.p ? *o.p : q / (r - 1);
        const auto w = eval_W(k, r, omega, t, q, p, d);
        return emit(make_report(w, k, r, omega, t, q, p, d), o.json);
    }

    BoundReport rep;
    rep.bound_id = o.id;
    if (auto id = parse_threshold_bound(o.id)) {
        ThresholdInputs in{need(o.n, "n"), need(o.k, "k"), o.r.value_or(2), o.eps, o.c, std::nullopt};
        if (*id == ThresholdBound::lemma3) {
            if (o.delta)
                in.delta = LogValue::from_linear(*o.delta);
            else if (!o.delta_bound.empty()) {
                const auto db = parse_degree_bound(o.delta_bound);
                if (!db)
                    throw UsageError("unknown degree bound '" + o.delta_bound + "'");
                in.delta = evaluate_degree_bound(*db, in.k, in.r);
                rep.details.emplace_back("delta_bound", o.delta_bound);
            }
        }
        rep.inputs = {{"n", in.n}, {"k", in.k}, {"r", in.r}, {"eps", in.eps}, {"c", in.c}};
        rep.value = evaluate_threshold_bound(*id, in);
        if (*id == ThresholdBound::thm2 || *id == ThresholdBound::list2)
            rep.details.emplace_back("phi", fmt(phi(in.k)));
    } else if (auto did = parse_degree_bound(o.id)) {
        const double k = need(o.k, "k"), r = need(o.r, "r");
        rep.inputs = {{"k", k}, {"r", r}};
        rep.value = evaluate_degree_bound(*did, k, r);
    } else {
        throw UsageError("unknown bound id '" + o.id + "'");
    }
    return emit(rep, o.json);
}

// ---------------------------------------------------------------------------

struct SweepOpts
{
    std::string config;
    std::optional<std::size_t> n, k, r, samples, max_trials, threads, omega;
    std::optional<std::uint64_t> seed;
    std::optional<double> p_from, p_to, alpha, b;
    std::optional<std::size_t> p_steps;
    std::vector<double> p_grid;
    std::string method;
    std::string out;
};

int cmd_sweep(const SweepOpts& o)
{
    SweepConfig c;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in)
            throw Error(o.config + ": cannot open");
        std::stringstream ss;
        ss << in.rdbuf();
        c = load_sweep_config(ss.str());
    }
    auto set = [](auto& field, const auto& opt) {
        if (opt)
            field = *opt;
    };
    set(c.n, o.n);
    set(c.k, o.k);
    set(c.r, o.r);
    set(c.samples_per_point, o.samples);
    set(c.max_trials, o.max_trials);
    set(c.threads, o.threads);
    set(c.seed, o.seed);
    set(c.alpha, o.alpha);
    set(c.b, o.b);
    if (o.omega)
        c.omega = *o.omega;
    if (!o.method.empty())
        c.method = parse_sweep_method(o.method);
    if (!o.p_grid.empty())
        c.p_grid = o.p_grid;
    else if (o.p_from || o.p_to || o.p_steps)
        c.p_grid = linear_grid(need(o.p_from, "p-from"), need(o.p_to, "p-to"), o.p_steps.value_or(10));

    const auto rows = run_sweep(c);
    if (o.out.empty() || o.out == "-") {
        write_sweep_csv(std::cout, rows);
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f)
            throw Error(o.out + ": cannot open for writing");
        write_sweep_csv(f, rows);
        if (!f.flush())
            throw Error(o.out + ": write failed");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Random hypergraph r-colorability toolkit"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* g = app.add_subcommand("gen", "Sample H(n, k, p)");
    g->add_option("--n", gen.n, "vertices")->required();
    g->add_option("--k", gen.k, "edge size")->required();
    g->add_option("--p", gen.p, "edge probability")->required();
    g->add_option("--seed", gen.seed);
    g->add_option("--out,-o", gen.out, "output file (default stdout)");

    AnalyzeOpts an;
    auto* a = app.add_subcommand("analyze", "Structural statistics of a hypergraph file");
    a->add_option("file", an.file)->required();
    a->add_option("--omega", an.omega, "triangle threshold (default floor(sqrt(ln k / ln ln k)), at least 1)");

    ColorOpts co;
    auto* c = app.add_subcommand("color", "Random recoloring with retries");
    c->add_option("file", co.file)->required();
    c->add_option("--r", co.r)->required();
    c->add_option("--max-trials", co.max_trials);
    c->add_option("--seed", co.seed);
    c->add_option("--alpha", co.alpha);
    c->add_option("--b", co.b);
    c->add_option("--omega", co.omega);
    c->add_option("--t", co.t);
    c->add_option("--q", co.q);
    c->add_option("--p-recolor", co.p_recolor);
    c->add_option("--lists", co.lists, "list assignment file");
    c->add_option("--threads", co.threads);

    OracleOpts orc;
    auto* oc = app.add_subcommand("oracle", "Exact colorability, chromatic number, choosability");
    oc->add_option("file", orc.file)->required();
    oc->add_option("--r", orc.r);
    oc->add_flag("--chromatic", orc.chromatic);
    oc->add_flag("--choosable", orc.choosable);
    oc->add_option("--palette", orc.palette);
    oc->add_option("--max-vertices", orc.limits.max_vertices);
    oc->add_option("--max-nodes", orc.limits.max_nodes);
    oc->add_option("--max-assignments", orc.limits.max_assignments);

    BoundsOpts bo;
    auto* b = app.add_subcommand("bounds", "Evaluate a bound, check the recoloring conditions, or search k");
    b->add_option("id", bo.id, "bound id (see --list), or W");
    b->add_flag("--list", bo.list);
    b->add_flag("--check-theorem4", bo.check_theorem4);
    b->add_flag("--min-k", bo.min_k);
    b->add_flag("--json", bo.json);
    b->add_option("--n", bo.n);
    b->add_option("--k", bo.k);
    b->add_option("--r", bo.r);
    b->add_option("--eps", bo.eps);
    b->add_option("--c", bo.c);
    b->add_option("--delta", bo.delta, "Delta(k, r) for lemma3");
    b->add_option("--delta-bound", bo.delta_bound, "degree bound substituted for Delta(k, r)");
    b->add_option("--omega", bo.omega);
    b->add_option("--alpha", bo.alpha);
    b->add_option("--b", bo.b);
    b->add_option("--d", bo.d);
    b->add_option("--t", bo.t);
    b->add_option("--q", bo.q);
    b->add_option("--p", bo.p);
    b->add_option("--k-lo", bo.k_lo);
    b->add_option("--k-hi", bo.k_hi);

    SweepOpts so;
    auto* s = app.add_subcommand("sweep", "Monte Carlo colorability curve along p");
    s->add_option("--config", so.config, "JSON config; flags override its values");
    s->add_option("--n", so.n);
    s->add_option("--k", so.k);
    s->add_option("--r", so.r);
    s->add_option("--p-from", so.p_from);
    s->add_option("--p-to", so.p_to);
    s->add_option("--p-steps", so.p_steps);
    s->add_option("--p-grid", so.p_grid)->delimiter(',');
    s->add_option("--samples", so.samples);
    s->add_option("--method", so.method);
    s->add_option("--max-trials", so.max_trials);
    s->add_option("--seed", so.seed);
    s->add_option("--alpha", so.alpha);
    s->add_option("--b", so.b);
    s->add_option("--omega", so.omega);
    s->add_option("--threads", so.threads);
    s->add_option("--out,-o", so.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (g->parsed())
            return cmd_gen(gen);
        if (a->parsed())
            return cmd_analyze(an);
        if (c->parsed())
            return cmd_color(co);
        if (oc->parsed())
            return cmd_oracle(orc);
        if (b->parsed())
            return cmd_bounds(bo);
        if (s->parsed())
            return cmd_sweep(so);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_data;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}
