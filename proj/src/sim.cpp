#include "ulfo/sim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ulfo {

namespace {

void check_config(const SimConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.dt <= 0.1))
        throw std::invalid_argument("sim: dt must satisfy 0 < dt <= 0.1");
    if (!(cfg.t_end >= 10.0 * cfg.dt))
        throw std::invalid_argument("sim: t_end must be >= 10*dt");
    for (double v : cfg.x0)
        if (!std::isfinite(v)) throw std::invalid_argument("sim: x0 must be finite");
}

Vec4 axpy(const Vec4& x, double h, const Vec4& d) {
    return Vec4{x[0] + h * d[0], x[1] + h * d[1], x[2] + h * d[2], x[3] + h * d[3]};
}

Vec4 rk4_step(const Mat4& m, const Vec4& x, double dt) {
    const Vec4 k1 = m * x;
    const Vec4 k2 = m * axpy(x, 0.5 * dt, k1);
    const Vec4 k3 = m * axpy(x, 0.5 * dt, k2);
    const Vec4 k4 = m * axpy(x, dt, k3);
    Vec4 r;
    for (int i = 0; i < 4; ++i)
        r[static_cast<size_t>(i)] =
            x[static_cast<size_t>(i)] +
            dt / 6.0 *
                (k1[static_cast<size_t>(i)] + 2.0 * k2[static_cast<size_t>(i)] +
                 2.0 * k3[static_cast<size_t>(i)] + k4[static_cast<size_t>(i)]);
    return r;
}

bool finite(const Vec4& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace

SimTrace simulate(const StateMatrix& m, const SimConfig& cfg) {
    check_config(cfg);
    const size_t steps = static_cast<size_t>(std::llround(cfg.t_end / cfg.dt));

    SimTrace tr;
    tr.basis = m.basis;
    tr.times.reserve(steps + 1);
    tr.states.reserve(steps + 1);
    tr.alpha.reserve(steps + 1);
    tr.zeta.reserve(steps + 1);

    Vec4 x = cfg.x0;
    for (size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * cfg.dt;
        if (!finite(x))
            throw std::runtime_error("sim: state diverged at t = " +
                                     std::to_string(t) + " s");
        const Vec4 dx = m.m * x;
        tr.times.push_back(t);
        tr.states.push_back(x);
        tr.alpha.push_back(dx[0]);            // d(df)/dt from row 1
        tr.zeta.push_back((m.m * dx)[0]);     // d2(df)/dt2
        if (k < steps) x = rk4_step(m.m, x, cfg.dt);
    }
    return tr;
}

double equivalence_check(const SystemParams& p, const SimConfig& cfg) {
    check_config(cfg);
    const CoeffA a = coeffs_a(p);
    const CoeffB b = coeffs_b(a, p.TJ);
    const StateMatrix B = matrix_b(a, b);

    // Route (i): the jerk-basis matrix as-is.
    SimConfig cfg_b = cfg;
    cfg_b.basis = Basis::jerk;
    const SimTrace direct = simulate(B, cfg_b);

    // Route (ii): the second-order jerk equation
    //   TJ*dzeta + TJ*b22*dalpha - b21*df = b23*dmu - b24*dyL
    // closed through the governor rows, with states (df, dalpha, dmu, dyL).
    // Same flow as B conjugated by diag(1, TJ, 1, 1).
    Mat4 J;
    J(0, 1) = 1.0;
    J(1, 0) = b.b21 / p.TJ;
    J(1, 1) = -b.b22;
    J(1, 2) = b.b23 / p.TJ;
    J(1, 3) = -b.b24 / p.TJ;
    J(2, 0) = -a.a31; J(2, 2) = -a.a33; J(2, 3) = a.a34;
    J(3, 0) = a.a41;  J(3, 3) = -a.a44;

    SimConfig cfg_j = cfg;
    cfg_j.basis = Basis::jerk;
    cfg_j.x0[1] = cfg.x0[1] / p.TJ;  // dalpha = dx / TJ
    const SimTrace second_order = simulate(StateMatrix{J, Basis::jerk}, cfg_j);

    double max_dev = 0.0;
    for (size_t k = 0; k < direct.states.size(); ++k) {
        max_dev = std::max(max_dev, std::abs(direct.states[k][0] -
                                             second_order.states[k][0]));
        // dx = TJ * dalpha along route (ii)
        max_dev = std::max(max_dev, std::abs(direct.states[k][1] -
                                             p.TJ * second_order.states[k][1]));
    }
    return max_dev;
}

std::vector<std::pair<double, double>> phase_trace(const SimTrace& trace) {
    if (trace.basis != Basis::jerk)
        throw std::invalid_argument("phase_trace: requires a jerk-basis trace");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(trace.states.size());
    for (size_t k = 0; k < trace.states.size(); ++k)
        pts.emplace_back(trace.states[k][0], trace.alpha[k]);
    return pts;
}

DampingEstimate estimate_damping(const SimTrace& trace) {
    // Positive peaks of df with parabolic interpolation of time and height.
    std::vector<double> peak_t, peak_h;
    const auto& s = trace.states;
    for (size_t k = 1; k + 1 < s.size(); ++k) {
        const double y0 = s[k - 1][0], y1 = s[k][0], y2 = s[k + 1][0];
        if (y1 > 0.0 && y1 >= y0 && y1 > y2) {
            const double denom = y0 - 2.0 * y1 + y2;
            double dt_frac = 0.0, h = y1;
            if (denom < 0.0) {
                dt_frac = 0.5 * (y0 - y2) / denom;
                h = y1 - 0.25 * (y0 - y2) * dt_frac;
            }
            const double step = trace.times[1] - trace.times[0];
            peak_t.push_back(trace.times[k] + dt_frac * step);
            peak_h.push_back(h);
        }
    }
    if (peak_t.size() < 3)
        throw std::runtime_error("estimate_damping: insufficient oscillation cycles");

    double period_sum = 0.0, logdec_sum = 0.0;
    const size_t n = peak_t.size();
    for (size_t k = 0; k + 1 < n; ++k) {
        period_sum += peak_t[k + 1] - peak_t[k];
        logdec_sum += std::log(peak_h[k + 1] / peak_h[k]);
    }
    const double mean_period = period_sum / static_cast<double>(n - 1);
    DampingEstimate e;
    e.omega = 2.0 * std::numbers::pi / mean_period;
    e.sigma = logdec_sum / period_sum;
    e.peaks_used = static_cast<int>(n);
    if (!std::isfinite(e.sigma) || !std::isfinite(e.omega))
        throw std::runtime_error("estimate_damping: non-finite estimate");
    return e;
}

void write_trace_csv(std::ostream& os, const SimTrace& trace) {
    os << "t,df,dx_or_dTmd,dmu,dyL,alpha,zeta\n";
    char buf[512];
    for (size_t k = 0; k < trace.states.size(); ++k) {
        const auto& x = trace.states[k];
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      trace.times[k], x[0], x[1], x[2], x[3], trace.alpha[k],
                      trace.zeta[k]);
        os << buf;
    }
}

}  // namespace ulfo
