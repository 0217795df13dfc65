#pragma once

// Monte Carlo estimate of P(H(n, k, p) is r-colorable) along a grid of p,
// using the recoloring colorer, the exact oracle, or both on the same
// sampled instances.

#include "rcolor/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rcolor {

enum class SweepMethod { recolor, oracle, both };

const char* to_string(SweepMethod m) noexcept;
SweepMethod parse_sweep_method(const std::string& s);

struct SweepConfig
{
    std::size_t n = 0;
    std::size_t k = 3;
    std::size_t r = 2;
    std::vector<double> p_grid;
    std::size_t samples_per_point = 100;
    SweepMethod method = SweepMethod::oracle;
    std::size_t max_trials = 200;
    std::uint64_t seed = 1;
    double alpha = 2.0;
    double b = 4.0;
    std::optional<std::size_t> omega;
    std::size_t threads = 1;
    OracleLimits limits;

    /// Throws InvalidArgument on an empty or non-increasing grid, p outside
    /// [0, 1], zero samples, or k outside [2, n].
    void validate() const;
};

/// `steps` evenly spaced values from `from` to `to` inclusive.
std::vector<double> linear_grid(double from, double to, std::size_t steps);

/**
 * Reads a JSON object with keys n, k, r, samples, method, max_trials, seed,
 * alpha, b, omega, threads and either "p_grid": [..] or p_from/p_to/p_steps.
 * Keys that are absent keep the values already in `base`.
 */
SweepConfig load_sweep_config(const std::string& json_text, SweepConfig base = {});

struct SweepRecord
{
    std::size_t n = 0, k = 0, r = 0;
    double p = 0;
    std::size_t samples = 0;
    std::size_t successes = 0;
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    SweepMethod method = SweepMethod::oracle;
    std::uint64_t seed = 0;
    double mean_trials = 0;
    double frac_2simple = 0;
    double mean_max_triangles = 0;
    /// Samples the oracle could not decide (budget or capacity).
    std::size_t unknown = 0;
};

struct WilsonInterval
{
    double low;
    double high;
};

/// 95% Wilson score interval for `successes` out of `samples`.
WilsonInterval wilson_interval(std::size_t successes, std::size_t samples);

/// One row per (point, method), points in grid order, recolor before oracle.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

inline constexpr const char* sweep_csv_version = "# rcolor-sweep v1";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);

} // namespace rcolor
