#pragma once

// Threshold and degree bounds for hypergraph r-colorability, evaluated in
// natural-log space, plus the feasibility checks of the recoloring argument:
// the parameter conditions, the four-summand inequality, the exact W sum
// and a numeric Local Lemma checker.

#include "rcolor/log_value.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcolor {

// ---------------------------------------------------------------------------
// Threshold bounds on p (all carry the factor n / C(n, k))

enum class ThresholdBound {
    lemma1,             ///< c r^{k-1} / k^2                      (r-colorable whp below)
    lemma2,             ///< (1+eps) r^{k-1} ln r                 (not r-colorable whp above)
    akkt,               ///< r (r+1)! / (r+1)^{2(r+1)} r^{k-1} / k
    alon_spencer_lower, ///< c 2^{k-1} / k^2
    alon_spencer_upper, ///< (1+eps) 2^{k-1} ln 2
    akkt_2color,        ///< (1/25) 2^{k-1} / k
    ach_moore,          ///< (1-eps) 2^{k-1} ln 2
    lemma3,             ///< (1/2) Delta / k, Delta supplied by the caller
    cor1_1,             ///< (3/32) r^{k-1} / k^{3/2}
    cor1_2,             ///< (3/16) e^{-4r^2} (k / ln k)^{g/(g+1)} r^k / k^2, g = floor(log2 r)
    thm2,               ///< (1/2) r^{k-1} / k^{1+phi(k)}
    lemma4,             ///< c r^{k-1} / k^2 (choosability)
    cor_krivvu,         ///< (1-eps) r^{k-1} ln r / k (choosability)
    list1,              ///< cor1_1 for choosability
    list2,              ///< thm2 for choosability
};

struct ThresholdInputs
{
    double n = 0;
    double k = 0;
    double r = 0;
    double eps = 0.01;
    double c = 1.0;
    /// Required by lemma3 only.
    std::optional<LogValue> delta;
};

LogValue evaluate_threshold_bound(ThresholdBound id, const ThresholdInputs& in);

inline LogValue evaluate_threshold_bound(ThresholdBound id, double n, double k, double r, double eps = 0.01)
{
    return evaluate_threshold_bound(id, ThresholdInputs{n, k, r, eps, 1.0, std::nullopt});
}

// ---------------------------------------------------------------------------
// Bounds on Delta(k, r), the least max-degree of a non-r-colorable k-graph

enum class DegreeBound {
    erdlov_lower, ///< r^{k-1} / (4k)
    erdlov_upper, ///< 20 k^2 r^{k+1}
    kost_rodl,    ///< ceil(k r^{k-1} ln r)
    radh_srin,    ///< 0.17 2^k / sqrt(k ln k), r = 2 only
    shabanov,     ///< (1/8) k^{-1/2} r^{k-1}, k, r >= 3
    kkr,          ///< e^{-4r^2} (k / ln k)^{g/(g+1)} r^k / k
    thm3,         ///< r^{k-1} k^{-phi(k)} (2-simple, few triangles)
};

LogValue evaluate_degree_bound(DegreeBound id, double k, double r);

std::optional<ThresholdBound> parse_threshold_bound(std::string_view name);
std::optional<DegreeBound> parse_degree_bound(std::string_view name);
std::string_view bound_name(ThresholdBound id);
std::string_view bound_name(DegreeBound id);
std::vector<std::string_view> all_bound_names();

// ---------------------------------------------------------------------------
// Recoloring feasibility

/// floor(sqrt(ln k / ln(alpha ln k))); DomainError unless alpha ln k > 1.
int recoloring_t(double k, double alpha);
/// alpha ln k / k.
double recoloring_q(double k, double alpha);

/// floor(sqrt(ln k / ln ln k)), clamped to >= 1 where ln ln k <= 0.
std::size_t max_admissible_omega(double k);

/// max(r^{k-1} k^{1-b/t} - 1, 0): the largest admissible edge degree.
LogValue d_max(double k, double r, double t, double b);

struct Theorem4Report
{
    double k = 0, r = 0, omega = 0, alpha = 0, b = 0, d = 0;
    int t = 0;
    double q = 0;
    bool condition1 = false; ///< b <= t < k - omega
    bool condition2 = false; ///< 2/k <= q <= 1/2
    /// k^2/2^k, the second/third/fourth summands; the fourth is undefined for t < 2.
    std::array<std::optional<LogValue>, 4> summands;
    bool condition3 = false; ///< all summands defined and their sum < 1/4
    LogValue summand_sum;
    LogValue d_limit;        ///< d_max(k, r, t, b)
    bool degree_ok = false;  ///< d <= d_limit
    bool all_hold() const { return condition1 && condition2 && condition3 && degree_ok; }
};

Theorem4Report check_theorem4(double k, double r, double omega, double alpha, double b, double d);

/// Only evaluates condition 3 (no r or d needed); the form used by searches.
bool condition3_holds(double k, double omega, double alpha, double b);

struct WReport
{
    std::array<LogValue, 4> terms;
    LogValue total;
    bool at_most_quarter = false;
};

/// The Local Lemma sum W with the multiplicities of the worst case.
WReport eval_W(double k, double r, double omega, double t, double q, double p, double d);

struct LocalLemmaReport
{
    LogValue sum;
    bool satisfied = false;          ///< sum <= 1/4
    LogValue product_lower_bound;    ///< prod (1 - 2 p_j), 0 if some p_j >= 1/2
};

LocalLemmaReport local_lemma_margin(std::span<const LogValue> probabilities);

/// Omega as a function of k: either the admissible maximum or a constant.
struct OmegaRule
{
    std::optional<double> constant;
    double operator()(double k) const
    {
        return constant ? *constant : static_cast<double>(max_admissible_omega(k));
    }
};

/// Smallest k in [k_lo, k_hi] where condition 3 holds, located by a
/// log-spaced scan followed by integer bisection inside the first holding
/// bracket. The result r satisfies holds(r) and, when r > k_lo, !holds(r-1).
std::optional<std::uint64_t> find_min_k_condition3(OmegaRule omega, double alpha, double b,
                                                   std::uint64_t k_lo, std::uint64_t k_hi);

// ---------------------------------------------------------------------------
// Flat record used by the command-line front end

struct BoundReport
{
    std::string bound_id;
    std::vector<std::pair<std::string, double>> inputs;
    std::optional<LogValue> value;
    std::optional<bool> satisfied;
    std::vector<std::pair<std::string, std::string>> details;

    std::string to_key_value() const;
    std::string to_json() const;
};

BoundReport make_report(const Theorem4Report& report);
BoundReport make_report(const WReport& report, double k, double r, double omega, double t, double q, double p, double d);

} // namespace rcolor
