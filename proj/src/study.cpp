#include "ulfo/study.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace ulfo {

namespace {

// splitmix64: counter-based, trivially splittable by keying on the attempt
// index. Fixed algorithm so runs are reproducible across platforms.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

bool oscillatory(const SystemParams& p, Complex* lambda = nullptr) {
    if (!check_params(p).empty()) return false;
    try {
        const auto eigs = eigenvalues(matrix_a(coeffs_a(p)).m);
        const auto mode = dominant_oscillatory_mode(eigs);
        if (lambda) *lambda = mode.lambda;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

template <typename Fn>
void parallel_for(size_t n, unsigned max_threads, Fn&& fn) {
    unsigned nthreads = max_threads == 0
                            ? std::max(1u, std::thread::hardware_concurrency())
                            : max_threads;
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<size_t>(1, n)));
    if (nthreads <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += nthreads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ScenarioRanges ScenarioRanges::defaults() {
    ScenarioRanges r;
    r.lo.fill(0.5);
    r.hi.fill(1.5);
    return r;
}

std::vector<SystemParams> sample_scenarios(const SystemParams& base,
                                           const ScenarioRanges& r, int n,
                                           std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_scenarios: n must be >= 1");
    const auto& names = param_names();
    std::vector<SystemParams> out;
    out.reserve(static_cast<size_t>(n));

    const std::uint64_t cap = 100ULL * static_cast<std::uint64_t>(n);
    std::uint64_t attempt = 0;
    while (out.size() < static_cast<size_t>(n)) {
        if (attempt >= cap)
            throw std::runtime_error("sample_scenarios: resample cap exceeded");
        std::uint64_t stream = splitmix64(seed ^ splitmix64(attempt));
        ++attempt;

        SystemParams p = base;
        for (size_t i = 0; i < names.size(); ++i) {
            stream = splitmix64(stream);
            const double u = uniform01(stream);
            const double mult = r.lo[i] + (r.hi[i] - r.lo[i]) * u;
            set_param(p, names[i], get_param(base, names[i]) * mult);
        }
        p.Ty = std::min(p.Ty, r.ty_max);
        p.TW = std::max(p.TW, r.tw_min);
        if (!oscillatory(p)) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<ScenarioRecord> montecarlo_dm(const std::vector<SystemParams>& scenarios,
                                          unsigned max_threads) {
    std::vector<ScenarioRecord> recs(scenarios.size());
    parallel_for(scenarios.size(), max_threads, [&](size_t i) {
        ScenarioRecord& rec = recs[i];
        rec.scenario_id = static_cast<int>(i);
        rec.params = scenarios[i];
        try {
            const auto eigs = eigenvalues(matrix_a(coeffs_a(scenarios[i])).m);
            const auto mode = dominant_oscillatory_mode(eigs);
            rec.lambda = mode.lambda;
            rec.omega = mode.lambda.imag();
            const auto d = damping_decomposition(scenarios[i], rec.omega);
            rec.Dm = d.Dm;
            rec.ratio = d.criterion;
            rec.ok = true;
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
        }
    });
    return recs;
}

MonteCarloSummary summarize(const std::vector<ScenarioRecord>& records) {
    MonteCarloSummary s{};
    s.n = static_cast<int>(records.size());
    for (const auto& r : records) {
        if (!r.ok) {
            ++s.failed;
            continue;
        }
        if (r.Dm < 0.0) ++s.negative_count;
        if (r.ratio > 1.0) ++s.ratio_above_one;
    }
    s.fraction_negative =
        s.n > 0 ? static_cast<double>(s.negative_count) / s.n : 0.0;
    return s;
}

std::vector<SweepRecord> sweep(const SweepSpec& spec) {
    if (std::find(param_names().begin(), param_names().end(), spec.param) ==
        param_names().end())
        throw std::invalid_argument("sweep: unknown parameter: " + spec.param);
    if (!std::is_sorted(spec.grid.begin(), spec.grid.end()))
        throw std::invalid_argument("sweep: grid must be ascending");
    std::vector<SweepRecord> out;
    out.reserve(spec.grid.size());
    for (double v : spec.grid) {
        SystemParams p = spec.base;
        set_param(p, spec.param, v);
        SweepRecord rec{};
        rec.value = v;
        Complex lambda;
        if (oscillatory(p, &lambda)) {
            rec.lambda = lambda;
            rec.oscillatory = true;
            const auto d = damping_decomposition(p, lambda.imag());
            rec.Dtotal = d.Dtotal;
            rec.ratio = d.criterion;
        }
        out.push_back(rec);
    }
    return out;
}

std::vector<Sensitivity> adjustment_report(const SystemParams& p) {
    validate_params(p);
    std::vector<Sensitivity> out;
    for (const auto& name : param_names()) {
        Sensitivity s;
        s.param = name;
        const double v = get_param(p, name);
        SystemParams lo = p, hi = p;
        set_param(lo, name, v * 0.99);
        set_param(hi, name, v * 1.01);
        Complex ll, lh;
        if (v != 0.0 && oscillatory(lo, &ll) && oscillatory(hi, &lh)) {
            s.d_re_dtheta = (lh.real() - ll.real()) / (0.02 * v);
            s.direction = s.d_re_dtheta < 0.0 ? "increase" : "decrease";
            s.ok = true;
        } else {
            s.d_re_dtheta = 0.0;
            s.direction = "unknown";
            s.ok = false;
        }
        out.push_back(std::move(s));
    }
    return out;
}

void write_montecarlo_csv(std::ostream& os,
                          const std::vector<ScenarioRecord>& records) {
    os << "scenario_id,TJ,D,KL,TW,KP2,Ty,KP1,KI1,bP,omega,Dm,ratio,re_lambda,"
          "im_lambda\n";
    char buf[1024];
    for (const auto& r : records) {
        if (!r.ok) continue;
        const auto& p = r.params;
        std::snprintf(buf, sizeof buf,
                      "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.scenario_id, p.TJ, p.D, p.KL, p.TW, p.KP2, p.Ty, p.KP1,
                      p.KI1, p.bP, r.omega, r.Dm, r.ratio, r.lambda.real(),
                      r.lambda.imag());
        os << buf;
    }
}

void write_sweep_csv(std::ostream& os, const std::string& param,
                     const std::vector<SweepRecord>& records) {
    os << "param,value,re_lambda,im_lambda,D_total,ratio\n";
    char buf[512];
    for (const auto& r : records) {
        if (!r.oscillatory) continue;
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      param.c_str(), r.value, r.lambda.real(), r.lambda.imag(),
                      r.Dtotal, r.ratio);
        os << buf;
    }
}

unsigned env_thread_cap() {
    const char* v = std::getenv("ULFO_THREADS");
    if (!v || !*v) return 0;
    const long n = std::strtol(v, nullptr, 10);
    return n > 0 ? static_cast<unsigned>(n) : 0;
}

}  // namespace ulfo
