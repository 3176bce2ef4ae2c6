#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "ulfo/model.hpp"

// Fixed-step RK4 simulation of either state-space form, plus the derived
// frequency acceleration / jerk channels and trajectory-based damping
// estimation.

namespace ulfo {

struct SimConfig {
    double dt = 0.01;             // step (s), 0 < dt <= 0.1
    double t_end = 120.0;         // horizon (s), >= 10*dt
    Vec4 x0{0.01, 0.0, 0.0, 0.0}; // initial state in the chosen basis
    Basis basis = Basis::original;
};

struct SimTrace {
    std::vector<double> times;
    std::vector<Vec4> states;
    std::vector<double> alpha;  // dalpha = d(df)/dt
    std::vector<double> zeta;   // dzeta = d2(df)/dt2, from the state equation
    Basis basis = Basis::original;
};

struct DampingEstimate {
    double sigma;  // 1/s, negative for decay
    double omega;  // rad/s
    int peaks_used;
};

// Classical RK4 on dx/dt = M x. alpha/zeta are taken from the state
// equations (no numerical differentiation): alpha = (Mx)[0],
// zeta = (M(Mx))[0] in either basis; in the jerk basis this reduces to
// alpha = a12*dx. Throws std::invalid_argument on a bad config and
// std::runtime_error (with the blow-up time) when the state leaves the
// floating-point range.
SimTrace simulate(const StateMatrix& m, const SimConfig& cfg);

// Simulates (i) the jerk-basis matrix directly and (ii) the second-order
// jerk equation closed through the governor rows, from the same initial
// condition (cfg.x0 in the jerk basis). Returns the max |df| deviation over
// the horizon. Also verifies dx = TJ*dalpha along route (ii).
double equivalence_check(const SystemParams& p, const SimConfig& cfg);

// (df, dalpha) pairs for phase-portrait plotting. Requires a jerk-basis
// trace.
std::vector<std::pair<double, double>> phase_trace(const SimTrace& trace);

// Log-decrement estimate from the positive peaks of df. Needs at least
// 3 detectable peaks; throws std::runtime_error otherwise.
DampingEstimate estimate_damping(const SimTrace& trace);

// CSV export: header t,df,dx_or_dTmd,dmu,dyL,alpha,zeta and one row per
// step, full double precision.
void write_trace_csv(std::ostream& os, const SimTrace& trace);

}  // namespace ulfo
