#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ulfo/gdta.hpp"

// Batch studies over the analysis engines: Monte-Carlo scenario sampling,
// single-parameter sweeps and a finite-difference sensitivity table.
//
// Random draws use splitmix64 keyed by (seed, attempt index), so results are
// reproducible and independent of evaluation order. The generator id
// "splitmix64" is reported in the Monte-Carlo summary.

namespace ulfo {

inline constexpr const char* kRngAlgorithm = "splitmix64";

// Per-parameter multiplier ranges relative to a base parameter set, with the
// hard clamps Ty <= 0.5 s and TW >= 1 s.
struct ScenarioRanges {
    std::array<double, 9> lo;  // canonical parameter order
    std::array<double, 9> hi;
    double ty_max = 0.5;
    double tw_min = 1.0;

    static ScenarioRanges defaults();  // multipliers [0.5, 1.5] on each
};

struct SweepSpec {
    std::string param;          // one of the nine names
    std::vector<double> grid;   // ascending
    SystemParams base;
};

struct ScenarioRecord {
    int scenario_id;
    SystemParams params;
    double omega;      // rad/s, from eigenanalysis
    double Dm;         // exact governor damping torque
    double ratio;      // proportional criterion
    Complex lambda;    // dominant mode
    bool ok;
    std::string error; // set when !ok
};

struct MonteCarloSummary {
    int n;
    int negative_count;       // scenarios with Dm < 0
    int ratio_above_one;      // scenarios with ratio > 1
    int failed;
    double fraction_negative; // negative_count / n
};

struct SweepRecord {
    double value;
    Complex lambda;
    double Dtotal;
    double ratio;
    bool oscillatory;  // false: grid point skipped in summaries
};

struct Sensitivity {
    std::string param;
    double d_re_dtheta;           // central finite difference at +-1%
    std::string direction;        // "increase" or "decrease" to reduce re(lambda)
    bool ok;
};

// Deterministic sampling of n valid, oscillatory parameter sets. Resamples
// any draw whose dominant mode is non-oscillatory or invalid; throws
// std::runtime_error once 100*n attempts are exhausted.
std::vector<SystemParams> sample_scenarios(const SystemParams& base,
                                           const ScenarioRanges& r, int n,
                                           std::uint64_t seed);

// Evaluates every scenario (omega from eigenanalysis, Dm from the exact
// decomposition, ratio from the proportional criterion). Per-scenario
// failures are recorded, not fatal. Runs data-parallel; output order matches
// input order. max_threads = 0 picks the hardware count.
std::vector<ScenarioRecord> montecarlo_dm(const std::vector<SystemParams>& scenarios,
                                          unsigned max_threads = 0);

MonteCarloSummary summarize(const std::vector<ScenarioRecord>& records);

std::vector<SweepRecord> sweep(const SweepSpec& spec);

// Central finite-difference d re(lambda)/d theta at +-1% for each of the
// nine parameters, with the direction that reduces re(lambda).
std::vector<Sensitivity> adjustment_report(const SystemParams& p);

// CSV writers.
// montecarlo: scenario_id,TJ,D,KL,TW,KP2,Ty,KP1,KI1,bP,omega,Dm,ratio,re_lambda,im_lambda
// sweep:      param,value,re_lambda,im_lambda,D_total,ratio
void write_montecarlo_csv(std::ostream& os, const std::vector<ScenarioRecord>& records);
void write_sweep_csv(std::ostream& os, const std::string& param,
                     const std::vector<SweepRecord>& records);

// Parallelism cap from the ULFO_THREADS environment variable (0 or unset =
// hardware count).
unsigned env_thread_cap();

}  // namespace ulfo
