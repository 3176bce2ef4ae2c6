// Acceptance suite: verifies the toolkit against the published reference
// results for the typical parameter set, one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "test_support.hpp"
#include "ulfo/gdta.hpp"
#include "ulfo/sim.hpp"
#include "ulfo/study.hpp"

using namespace ulfo;

namespace {

int failures = 0;

void report(int id, bool ok, const char* what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what,
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const SystemParams kP = SystemParams::typical();

// 1. eigenvalues of the original matrix contain -0.0031 +- j0.4846
//    (|d re| <= 5e-4, |d im| <= 5e-3), in under 1 ms
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto eigs = eigenvalues(matrix_a(coeffs_a(kP)).m);
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    bool found = false;
    Complex got;
    for (const auto& e : eigs)
        if (std::abs(e.real() - (-0.0031)) <= 5e-4 &&
            std::abs(e.imag() - 0.4846) <= 5e-3) {
            found = true;
            got = e;
        }
    report(1, found && us < 1000, "ULFO mode reproduction",
           fmt("mode %.6f%+.6fj, %lld us", got.real(), got.imag(),
               static_cast<long long>(us)));
}

void criterion_2() {
    const auto mode =
        dominant_oscillatory_mode(eigenvalues(matrix_a(coeffs_a(kP)).m));
    report(2, std::abs(mode.frequency_hz - 0.077) <= 0.001,
           "dominant mode frequency 0.077 Hz",
           fmt("%.5f Hz", mode.frequency_hz));
}

void criterion_3() {
    const auto b = coeffs_b(coeffs_a(kP), kP.TJ);
    const double v = kP.TJ * b.b22;
    report(3, std::abs(v - 9.56) <= 0.01, "inherent damping TJ*b22 = 9.56",
           fmt("%.5f", v));
}

void criterion_4() {
    const double omega = 0.4846;
    const double p1 = approx_path1(kP, omega);
    const double p2 = approx_path2(kP, omega);
    const bool ok = std::abs(p1 - 149.4) / 149.4 <= 0.01 &&
                    std::abs(-p2 - 158.92) / 158.92 <= 0.01;
    report(4, ok, "closed-form path values 149.4 / 158.92 at omega=0.4846",
           fmt("path1 %.3f, path2 %.3f", p1, p2));
}

void criterion_5() {
    // evaluated at the dominant mode, where the torque balance is exact
    const auto mode =
        dominant_oscillatory_mode(eigenvalues(matrix_a(coeffs_a(kP)).m));
    const auto d = damping_decomposition(kP, mode.lambda.imag(),
                                         mode.lambda.real());
    const double re_pred = -d.Dtotal / (2.0 * kP.TJ);
    const bool ok =
        std::abs(d.Dtotal - 0.04) <= 0.01 && std::abs(re_pred - (-0.0031)) <= 5e-4;
    report(5, ok, "total damping 0.04 and real-part consistency",
           fmt("Dtotal %.5f, -Dtotal/2TJ %.6f", d.Dtotal, re_pred));
}

void criterion_6() {
    const double omega = self_consistent_omega(kP);
    const auto rep = proportional_criterion(kP, omega);
    const bool ok = std::abs(rep.ratio - 1.064) / 1.064 <= 0.02 &&
                    rep.verdict == CriterionReport::Verdict::governor_negative;
    report(6, ok, "proportional criterion 1.064, governor_negative",
           fmt("ratio %.5f", rep.ratio));
}

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto scenarios =
        sample_scenarios(kP, ScenarioRanges::defaults(), 500, 2026);
    const auto recs = montecarlo_dm(scenarios, env_thread_cap());
    const auto s = summarize(recs);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    const bool ok = s.failed == 0 && s.negative_count == 500 &&
                    s.ratio_above_one == 500 && ms < 5000;
    report(7, ok, "Monte-Carlo: Dm < 0 and ratio > 1 in 500/500",
           fmt("negative %d/500, ratio>1 %d/500, %lld ms", s.negative_count,
               s.ratio_above_one, static_cast<long long>(ms)));
}

void criterion_8() {
    std::mt19937_64 rng(4242);
    double worst = 0.0;
    auto residual = [](const SystemParams& p) {
        const CoeffA a = coeffs_a(p);
        const Mat4 A = matrix_a(a).m;
        const Mat4 B = matrix_b(a, coeffs_b(a, p.TJ)).m;
        const Mat4 t = transform_matrix(a, p.TJ);
        return max_abs_diff(t * A * inverse(t), B);
    };
    worst = residual(kP);
    for (int i = 0; i < 1000; ++i)
        worst = std::max(worst, residual(test::random_valid_params(rng)));
    report(8, worst <= 1e-10, "similarity max|T A T^-1 - B| <= 1e-10",
           fmt("worst %.3e", worst));
}

void criterion_9() {
    const auto a = coeffs_a(kP);
    SimConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 200.0;
    cfg.basis = Basis::jerk;
    cfg.x0 = transform_matrix(a, kP.TJ) * Vec4{0.01, 0.0, 0.0, 0.0};
    const double dev = equivalence_check(kP, cfg);
    report(9, dev <= 1e-8, "jerk-form equivalence <= 1e-8 over 200 s",
           fmt("max deviation %.3e", dev));
}

void criterion_10() {
    SimConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 600.0;
    const auto tr = simulate(matrix_a(coeffs_a(kP)), cfg);
    const auto est = estimate_damping(tr);
    const bool ok = std::abs(est.sigma - (-0.0031)) <= 0.002 &&
                    std::abs(est.omega - 0.4846) / 0.4846 <= 0.02;
    report(10, ok, "log-decrement closure sigma/omega",
           fmt("sigma %.5f, omega %.5f", est.sigma, est.omega));
}

void criterion_11() {
    auto re_at = [](SystemParams p) {
        return dominant_oscillatory_mode(eigenvalues(matrix_a(coeffs_a(p)).m))
            .lambda.real();
    };
    auto fd = [&](const char* name) {
        SystemParams lo = kP, hi = kP;
        set_param(lo, name, get_param(kP, name) * 0.99);
        set_param(hi, name, get_param(kP, name) * 1.01);
        return (re_at(hi) - re_at(lo)) / (0.02 * get_param(kP, name));
    };
    bool ok = fd("KI1") > 0 && fd("bP") < 0 && fd("KP2") < 0 && fd("D") < 0 &&
              fd("TJ") < 0 && fd("KL") < 0 && fd("TW") > 0;

    // KP1 non-monotonicity over [0.3, 5]
    bool rising = false, falling = false;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < 50; ++i) {
        SystemParams p = kP;
        p.KP1 = 0.3 + (5.0 - 0.3) * i / 49.0;
        const double re = re_at(p);
        if (have_prev) ((re > prev) ? rising : falling) = true;
        prev = re;
        have_prev = true;
    }
    ok = ok && rising && falling;
    report(11, ok, "sensitivity directions and KP1 non-monotonicity",
           fmt("dKI1 %+0.3f, dbP %+0.3f, dKP2 %+0.5f, dD %+0.3f, dTJ %+0.4f, "
               "dKL %+0.3f, dTW %+0.3f, KP1 rise/fall %d/%d",
               fd("KI1"), fd("bP"), fd("KP2"), fd("D"), fd("TJ"), fd("KL"),
               fd("TW"), rising ? 1 : 0, falling ? 1 : 0));
}

void criterion_12() {
    std::mt19937_64 rng(99);
    double worst_res = 0.0, worst_trace = 0.0, worst_det = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Mat4 m = test::random_matrix(rng);
        const auto eigs = eigenvalues(m);
        const double norm = std::max(1.0, 4.0 * max_abs(m));
        const double scale = norm * norm * norm * norm;
        Complex sum = 0.0, prod = 1.0;
        for (const auto& l : eigs) {
            worst_res = std::max(worst_res,
                                 std::abs(test::det_shifted(m, l)) / scale);
            sum += l;
            prod *= l;
        }
        worst_trace = std::max(worst_trace, std::abs(sum - trace(m)) /
                                                std::max(1.0, std::abs(trace(m))));
        const double det = char_poly(m)[4];
        worst_det = std::max(worst_det,
                             std::abs(prod - det) / std::max(1.0, std::abs(det)));
    }
    const bool ok = worst_res <= 1e-6 && worst_trace <= 1e-7 && worst_det <= 1e-7;
    report(12, ok, "eigensolver oracle on 1000 random matrices",
           fmt("residual %.2e, trace %.2e, det %.2e", worst_res, worst_trace,
               worst_det));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
