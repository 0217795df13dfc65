#include "rcolor/bounds.hpp"

#include "rcolor/error.hpp"
#include "rcolor/random_model.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace rcolor {

namespace {

constexpr double kLn2 = std::numbers::ln2;

struct NamedThreshold
{
    ThresholdBound id;
    std::string_view name;
};
constexpr NamedThreshold kThresholdNames[] = {
    {ThresholdBound::lemma1, "lemma1"},
    {ThresholdBound::lemma2, "lemma2"},
    {ThresholdBound::akkt, "akkt"},
    {ThresholdBound::alon_spencer_lower, "alon_spencer_lower"},
    {ThresholdBound::alon_spencer_upper, "alon_spencer_upper"},
    {ThresholdBound::akkt_2color, "akkt_2color"},
    {ThresholdBound::ach_moore, "ach_moore"},
    {ThresholdBound::lemma3, "lemma3"},
    {ThresholdBound::cor1_1, "cor1_1"},
    {ThresholdBound::cor1_2, "cor1_2"},
    {ThresholdBound::thm2, "thm2"},
    {ThresholdBound::lemma4, "lemma4"},
    {ThresholdBound::cor_krivvu, "cor_krivvu"},
    {ThresholdBound::list1, "list1"},
    {ThresholdBound::list2, "list2"},
};

struct NamedDegree
{
    DegreeBound id;
    std::string_view name;
};
constexpr NamedDegree kDegreeNames[] = {
    {DegreeBound::erdlov_lower, "erdlov_lower"},
    {DegreeBound::erdlov_upper, "erdlov_upper"},
    {DegreeBound::kost_rodl, "kost_rodl"},
    {DegreeBound::radh_srin, "radh_srin"},
    {DegreeBound::shabanov, "shabanov"},
    {DegreeBound::kkr, "kkr"},
    {DegreeBound::thm3, "thm3"},
};

void require(bool ok, std::string_view bound, const std::string& what)
{
    if (!ok)
        throw DomainError(std::string(bound) + ": " + what);
}

// ln of (k / ln k)^{g/(g+1)} with g = floor(log2 r).
double log_kkr_middle(double k, double r)
{
    const double g = std::floor(std::log2(r));
    return g / (g + 1) * (std::log(k) - std::log(std::log(k)));
}

} // namespace

std::optional<ThresholdBound> parse_threshold_bound(std::string_view name)
{
    for (const auto& t : kThresholdNames)
        if (t.name == name)
            return t.id;
    return std::nullopt;
}

std::optional<DegreeBound> parse_degree_bound(std::string_view name)
{
    for (const auto& d : kDegreeNames)
        if (d.name == name)
            return d.id;
    return std::nullopt;
}

std::string_view bound_name(ThresholdBound id)
{
    for (const auto& t : kThresholdNames)
        if (t.id == id)
            return t.name;
    return "?";
}

std::string_view bound_name(DegreeBound id)
{
    for (const auto& d : kDegreeNames)
        if (d.id == id)
            return d.name;
    return "?";
}

std::vector<std::string_view> all_bound_names()
{
    std::vector<std::string_view> out;
    for (const auto& t : kThresholdNames)
        out.push_back(t.name);
    for (const auto& d : kDegreeNames)
        out.push_back(d.name);
    return out;
}

// ---------------------------------------------------------------------------

LogValue evaluate_threshold_bound(ThresholdBound id, const ThresholdInputs& in)
{
    const std::string_view name = bound_name(id);
    const double n = in.n, k = in.k, r = in.r;
    require(k >= 2, name, "requires k >= 2");
    require(n >= k, name, "requires n >= k");
    const bool two_color = id == ThresholdBound::alon_spencer_lower || id == ThresholdBound::alon_spencer_upper ||
                           id == ThresholdBound::akkt_2color || id == ThresholdBound::ach_moore;
    if (!two_color)
        require(r >= 2, name, "requires r >= 2");

    const double lk = std::log(k);
    const double lr = two_color ? kLn2 : std::log(r);
    const double scale = std::log(n) - log_binomial(n, k); // n / C(n, k)
    double body = 0;

    switch (id) {
    case ThresholdBound::lemma1:
    case ThresholdBound::lemma4:
    case ThresholdBound::alon_spencer_lower:
        require(in.c > 0, name, "requires c > 0");
        body = std::log(in.c) + (k - 1) * lr - 2 * lk;
        break;
    case ThresholdBound::lemma2:
    case ThresholdBound::alon_spencer_upper:
        require(in.eps >= 0, name, "requires eps >= 0");
        body = std::log1p(in.eps) + (k - 1) * lr + std::log(lr);
        break;
    case ThresholdBound::ach_moore:
    case ThresholdBound::cor_krivvu:
        require(in.eps >= 0 && in.eps < 1, name, "requires 0 <= eps < 1");
        body = std::log1p(-in.eps) + (k - 1) * lr + std::log(lr);
        if (id == ThresholdBound::cor_krivvu)
            body -= lk;
        break;
    case ThresholdBound::akkt:
        require(k >= 3, name, "requires k >= 3");
        body = std::log(r) + std::lgamma(r + 2) - 2 * (r + 1) * std::log(r + 1) + (k - 1) * lr - lk;
        break;
    case ThresholdBound::akkt_2color:
        body = -std::log(25.0) + (k - 1) * kLn2 - lk;
        break;
    case ThresholdBound::lemma3:
        require(in.delta.has_value(), name, "requires Delta(k, r) as input");
        require(!in.delta->is_zero(), name, "requires Delta(k, r) > 0");
        body = std::log(0.5) + in.delta->log() - lk;
        break;
    case ThresholdBound::cor1_1:
    case ThresholdBound::list1:
        require(k >= 3 && r >= 3, name, "requires k >= 3 and r >= 3");
        body = std::log(3.0 / 32.0) + (k - 1) * lr - 1.5 * lk;
        break;
    case ThresholdBound::cor1_2:
        require(k >= 3, name, "requires k >= 3");
        body = std::log(3.0 / 16.0) - 4 * r * r + log_kkr_middle(k, r) + k * lr - 2 * lk;
        break;
    case ThresholdBound::thm2:
    case ThresholdBound::list2:
        require(k >= 3, name, "requires k >= 3");
        body = std::log(0.5) + (k - 1) * lr - (1 + phi(k)) * lk;
        break;
    }
    return LogValue::from_log(body + scale);
}

LogValue evaluate_degree_bound(DegreeBound id, double k, double r)
{
    const std::string_view name = bound_name(id);
    require(k >= 2, name, "requires k >= 2");
    require(r >= 2, name, "requires r >= 2");
    const double lk = std::log(k);
    const double lr = std::log(r);
    switch (id) {
    case DegreeBound::erdlov_lower:
        return LogValue::from_log((k - 1) * lr - std::log(4 * k));
    case DegreeBound::erdlov_upper:
        return LogValue::from_log(std::log(20.0) + 2 * lk + (k + 1) * lr);
    case DegreeBound::kost_rodl: {
        const double log_value = lk + (k - 1) * lr + std::log(lr);
        if (log_value < 52 * kLn2) // exact ceil while integers are representable
            return LogValue::from_linear(std::ceil(k * std::pow(r, k - 1) * lr));
        return LogValue::from_log(log_value);
    }
    case DegreeBound::radh_srin:
        require(r == 2, name, "requires r = 2");
        require(k >= 3, name, "requires k >= 3");
        return LogValue::from_log(std::log(0.17) + k * kLn2 - 0.5 * (lk + std::log(lk)));
    case DegreeBound::shabanov:
        require(k >= 3 && r >= 3, name, "requires k >= 3 and r >= 3");
        return LogValue::from_log(-std::log(8.0) - 0.5 * lk + (k - 1) * lr);
    case DegreeBound::kkr:
        require(k >= 3, name, "requires k >= 3");
        return LogValue::from_log(-4 * r * r + log_kkr_middle(k, r) + k * lr - lk);
    case DegreeBound::thm3:
        require(k >= 3, name, "requires k >= 3");
        return LogValue::from_log((k - 1) * lr - phi(k) * lk);
    }
    throw InvalidArgument("unknown degree bound");
}

// ---------------------------------------------------------------------------

int recoloring_t(double k, double alpha)
{
    if (!(k >= 3))
        throw DomainError("recoloring parameters require k >= 3");
    if (!(alpha > 0))
        throw DomainError("alpha must be positive");
    const double a = alpha * std::log(k);
    if (!(a > 1))
        throw DomainError("alpha * ln k must exceed 1");
    return static_cast<int>(std::floor(std::sqrt(std::log(k) / std::log(a))));
}

double recoloring_q(double k, double alpha)
{
    return alpha * std::log(k) / k;
}

std::size_t max_admissible_omega(double k)
{
    const double lk = std::log(k);
    if (!(lk > 1))
        return 1; // ln ln k <= 0
    const double w = std::floor(std::sqrt(lk / std::log(lk)));
    return std::max<std::size_t>(1, static_cast<std::size_t>(w));
}

LogValue d_max(double k, double r, double t, double b)
{
    if (!(t >= 1))
        throw DomainError("d_max requires t >= 1");
    const LogValue bound = LogValue::from_log((k - 1) * std::log(r) + (1 - b / t) * std::log(k));
    return minus_clamped(bound, LogValue::one());
}

namespace {

struct Summands
{
    std::array<std::optional<LogValue>, 4> values;
    bool defined = true;
};

Summands condition3_summands(double k, int t, double omega, double alpha, double b)
{
    const double lk = std::log(k);
    const double al = alpha * lk; // alpha ln k
    const double la = std::log(al);
    Summands s;
    s.values[0] = LogValue::from_log(2 * lk - k * kLn2);
    s.values[1] = LogValue::from_log(std::log(t + 1.0) + (1 - alpha) * lk + al * (t + omega) / k + (t + omega) * la);
    s.values[2] = LogValue::from_log(2 * std::log(t + 1.0) - log_factorial(t) + (2 - b) * lk + t * omega * la);
    if (t >= 2) {
        s.values[3] = LogValue::from_log(std::log(t + 1.0) + std::log(static_cast<double>(t)) +
                                         (t - 1) * std::log(2 * std::numbers::e * al / (t - 1)) +
                                         (1 + alpha - b) * lk);
    } else {
        s.defined = false;
    }
    return s;
}

} // namespace

Theorem4Report check_theorem4(double k, double r, double omega, double alpha, double b, double d)
{
    if (!(r >= 2))
        throw DomainError("check_theorem4 requires r >= 2");
    if (!(omega >= 0))
        throw DomainError("check_theorem4 requires omega >= 0");
    if (!(d >= 0))
        throw DomainError("check_theorem4 requires d >= 0");
    if (!(b > 0))
        throw DomainError("check_theorem4 requires b > 0");
    Theorem4Report rep;
    rep.k = k;
    rep.r = r;
    rep.omega = omega;
    rep.alpha = alpha;
    rep.b = b;
    rep.d = d;
    rep.t = recoloring_t(k, alpha);
    rep.q = recoloring_q(k, alpha);
    rep.condition1 = b <= rep.t && rep.t < k - omega;
    rep.condition2 = 2 / k <= rep.q && rep.q <= 0.5;

    const Summands s = condition3_summands(k, rep.t, omega, alpha, b);
    rep.summands = s.values;
    for (const auto& v : s.values)
        if (v)
            rep.summand_sum += *v;
    rep.condition3 = s.defined && rep.summand_sum.log() < std::log(0.25);

    if (rep.t >= 1) {
        rep.d_limit = d_max(k, r, rep.t, b);
        rep.degree_ok = !(LogValue::from_linear(d) > rep.d_limit);
    }
    return rep;
}

bool condition3_holds(double k, double omega, double alpha, double b)
{
    const int t = recoloring_t(k, alpha);
    const Summands s = condition3_summands(k, t, omega, alpha, b);
    if (!s.defined)
        return false;
    LogValue sum;
    for (const auto& v : s.values)
        sum += *v;
    return sum.log() < std::log(0.25);
}

WReport eval_W(double k, double r, double omega, double t, double q, double p, double d)
{
    if (!(t >= 2))
        throw DomainError("eval_W requires t >= 2");
    if (!(d >= t))
        throw DomainError("eval_W requires d >= t");
    if (!(q > 0 && q < 1))
        throw DomainError("eval_W requires 0 < q < 1");
    if (!(r >= 2))
        throw DomainError("eval_W requires r >= 2");
    if (!(p >= 0 && r * p <= 1))
        throw DomainError("eval_W requires 0 <= p and r p <= 1");
    if (!(omega >= 0) || !(k >= 2))
        throw DomainError("eval_W requires omega >= 0 and k >= 2");

    const double lr = std::log(r);
    const double lkq = std::log(k * q);
    const LogValue t1 = LogValue::from_log(std::log(t + 1) + std::log(d + 1));

    WReport w;
    w.terms[0] = t1 * LogValue::from_log(lr + std::log(r - 1)) * LogValue::from_linear(p / r).pow(k);
    w.terms[1] = t1 * LogValue::from_log((1 - k) * lr + (k - t - omega) * std::log1p(-q) + (t + omega) * lkq);

    const LogValue d1 = LogValue::from_log(std::log(d + 1));
    const LogValue d1d = d1 * LogValue::from_log(std::log(d));
    auto binom = [](double a, double b) { return LogValue::from_log(log_binomial(a, b)); };
    const LogValue tp1 = LogValue::from_log(std::log(t + 1));

    const LogValue mult3 = tp1 * (d1 * binom(d, t) + d1d * binom(d - 1, t - 1));
    w.terms[2] = mult3 * LogValue::from_log(-(t + 1) * (k - 1) * lr + t * std::log(q) + t * (t + omega - 2) * lkq);

    const LogValue mult4 = tp1 * (d1 * binom(d, t - 1) + d1d * binom(d - 1, t - 2));
    w.terms[3] = mult4 * LogValue::from_log(-t * (k - 1) * lr + k * std::log1p(q) + (t - 1) * std::log(2 * q));

    for (const auto& term : w.terms)
        w.total += term;
    w.at_most_quarter = w.total.log() <= std::log(0.25);
    return w;
}

LocalLemmaReport local_lemma_margin(std::span<const LogValue> probabilities)
{
    LocalLemmaReport rep;
    double log_product = 0;
    bool product_zero = false;
    for (const LogValue& p : probabilities) {
        if (p.log() > 0)
            throw DomainError("probability exceeds 1");
        rep.sum += p;
        const double x = p.linear();
        if (x >= 0.5)
            product_zero = true;
        else
            log_product += std::log1p(-2 * x);
    }
    rep.satisfied = rep.sum.log() <= std::log(0.25);
    rep.product_lower_bound = product_zero ? LogValue::zero() : LogValue::from_log(log_product);
    return rep;
}

std::optional<std::uint64_t> find_min_k_condition3(OmegaRule omega, double alpha, double b,
                                                   std::uint64_t k_lo, std::uint64_t k_hi)
{
    if (k_lo < 3 || !(k_lo < k_hi))
        throw InvalidArgument("find_min_k requires 3 <= k_lo < k_hi");
    auto holds = [&](std::uint64_t k) {
        const double kd = static_cast<double>(k);
        return condition3_holds(kd, omega(kd), alpha, b);
    };
    if (holds(k_lo))
        return k_lo;

    constexpr int grid = 4096;
    const double a = std::log(static_cast<double>(k_lo));
    const double z = std::log(static_cast<double>(k_hi));
    std::uint64_t fail = k_lo;
    for (int i = 1; i <= grid; ++i) {
        std::uint64_t k = i == grid ? k_hi
                                    : static_cast<std::uint64_t>(std::llround(std::exp(a + (z - a) * i / grid)));
        k = std::clamp(k, k_lo, k_hi);
        if (k <= fail)
            continue;
        if (!holds(k)) {
            fail = k;
            continue;
        }
        // fail < k, holds(k): bisect down to the first holding integer.
        std::uint64_t lo = fail, hi = k;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            (holds(mid) ? hi : lo) = mid;
        }
        return hi;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_short(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt_bool(bool x) { return x ? "true" : "false"; }

} // namespace

std::string BoundReport::to_key_value() const
{
    std::ostringstream out;
    out << "bound=" << bound_id << '\n';
    for (const auto& [key, v] : inputs)
        out << key << '=' << fmt_double(v) << '\n';
    if (value) {
        out << "log_value=" << fmt_double(value->log()) << '\n';
        out << "sign=" << value->sign() << '\n';
        if (value->representable())
            out << "value=" << fmt_short(value->linear()) << '\n';
    }
    if (satisfied)
        out << "satisfied=" << fmt_bool(*satisfied) << '\n';
    for (const auto& [key, v] : details)
        out << key << '=' << v << '\n';
    return out.str();
}

std::string BoundReport::to_json() const
{
    nlohmann::ordered_json j;
    j["bound"] = bound_id;
    for (const auto& [key, v] : inputs)
        j[key] = v;
    if (value) {
        if (value->is_zero())
            j["log_value"] = nullptr; // -inf
        else
            j["log_value"] = value->log();
        j["sign"] = value->sign();
        if (value->representable())
            j["value"] = value->linear();
    }
    if (satisfied)
        j["satisfied"] = *satisfied;
    for (const auto& [key, v] : details)
        j[key] = v;
    return j.dump(2);
}

BoundReport make_report(const Theorem4Report& rep)
{
    BoundReport out;
    out.bound_id = "theorem4";
    out.inputs = {{"k", rep.k}, {"r", rep.r}, {"omega", rep.omega}, {"alpha", rep.alpha}, {"b", rep.b}, {"d", rep.d}};
    out.value = rep.summand_sum;
    out.satisfied = rep.condition3;
    out.details.emplace_back("t", std::to_string(rep.t));
    out.details.emplace_back("q", fmt_double(rep.q));
    out.details.emplace_back("condition1", fmt_bool(rep.condition1));
    out.details.emplace_back("condition2", fmt_bool(rep.condition2));
    out.details.emplace_back("condition3", fmt_bool(rep.condition3));
    std::size_t dominant = 0;
    for (std::size_t i = 0; i < rep.summands.size(); ++i) {
        const std::string key = "summand" + std::to_string(i + 1);
        if (rep.summands[i]) {
            out.details.emplace_back(key, rep.summands[i]->to_string());
            if (rep.summands[dominant] == std::nullopt || *rep.summands[i] > *rep.summands[dominant])
                dominant = i;
        } else {
            out.details.emplace_back(key, "undefined");
        }
    }
    out.details.emplace_back("dominant_summand", std::to_string(dominant + 1));
    out.details.emplace_back("d_max", rep.d_limit.to_string());
    out.details.emplace_back("degree_ok", fmt_bool(rep.degree_ok));
    out.details.emplace_back("all_hold", fmt_bool(rep.all_hold()));
    return out;
}

BoundReport make_report(const WReport& w, double k, double r, double omega, double t, double q, double p, double d)
{
    BoundReport out;
    out.bound_id = "W";
    out.inputs = {{"k", k}, {"r", r}, {"omega", omega}, {"t", t}, {"q", q}, {"p", p}, {"d", d}};
    out.value = w.total;
    out.satisfied = w.at_most_quarter;
    for (std::size_t i = 0; i < w.terms.size(); ++i)
        out.details.emplace_back("term" + std::to_string(i + 1), w.terms[i].to_string());
    return out;
}

} // namespace rcolor
