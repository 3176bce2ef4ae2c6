#pragma once

#include "ulfo/eigen.hpp"
#include "ulfo/model.hpp"

// Damping torque analysis in the jerk space. The turbine-generator cascade
// obeys
//
//   TJ * ddf/dt^2 + TJ*b22 * dalpha - b21 * df = dT(s)
//
// where dT = dT_mu + dT_yL is the generalized torque fed back by the
// governor. Writing dT = K(s)*df and projecting onto (df, dalpha) gives the
// damping torque Dm = -Im(K)/omega and synchronizing torque Km, so the total
// damping is D_total = TJ*b22 + Dm and D_total > 0 is the stability
// criterion.
//
// Sign bookkeeping: K_yL below is defined as +b24*H_yL (the negative of the
// torque transfer dT_yL/df) so that the two-part split
// Dm = Im(K_yL)/omega - Im(K_mu)/omega holds with the yL path positive and
// the mu path negative for the typical parameters.

namespace ulfo {

// Governor torque contributions at s = sigma + j*omega.
struct TorqueResponse {
    double omega;    // rad/s
    double sigma;    // evaluation abscissa (0 for the pure-frequency axis)
    Complex K_yL;    // b24 * H_yL
    Complex K_mu;    // b23 * H_mu
    Complex K_total; // K_mu - K_yL = dT/df
};

struct DampingDecomposition {
    double inherent;    // TJ*b22 = D + KL + 2*TJ/TW
    double path1;       // Im(K_yL)/omega, governor integral loop, positive
    double path2;       // -Im(K_mu)/omega, full governor/servo path, negative
    double Dm;          // path1 + path2
    double Dtotal;      // inherent + Dm
    double Km;          // synchronizing torque
    double criterion;   // proportional criterion ratio at omega_eval
    double omega_eval;  // rad/s
    double sigma_eval;  // 0 unless evaluated at a complex mode
    bool stable;        // Dtotal > 0
};

struct CriterionReport {
    enum class Verdict { governor_positive, governor_negative };
    double ratio;                 // |path2|/path1 in closed form
    double governor_net_damping;  // Dm
    Verdict verdict;              // governor_negative iff ratio > 1
};

// Frequency responses of the two governor state equations at
// s = sigma + j*omega: H_yL = df->dyL = a41/(s + a44),
// H_mu = df->dmu = (-a31 + a34*H_yL)/(s + a33).
// Returns (H_mu, H_yL). Requires omega > 0.
std::pair<Complex, Complex> governor_response(const CoeffA& a, double omega,
                                              double sigma = 0.0);

TorqueResponse torque_response(const CoeffA& a, const CoeffB& b, double omega,
                               double sigma = 0.0);

// Full decomposition from the exact responses. sigma = 0 evaluates on the
// imaginary axis; passing the real part of the mode evaluates at the mode
// itself, which makes -Dtotal/(2*TJ) reproduce the eigenvalue real part
// exactly.
DampingDecomposition damping_decomposition(const SystemParams& p, double omega,
                                           double sigma = 0.0);

// Closed form of the integral-loop damping torque,
// 2*KI1*KP2/Ty / |j*omega*(1+KP1*bP) + KI1*bP|^2; always positive.
// Coincides with the exact path1 (the yL row is decoupled from mu).
double approx_path1(const SystemParams& p, double omega);

// Closed form of the governor/servo path damping torque (derived with the
// b24 feedthrough dropped); always negative. |approx_path2|/approx_path1
// equals the proportional criterion ratio identically.
double approx_path2(const SystemParams& p, double omega);

// Proportional criterion:
// ratio = (1/TW + KP2/Ty)/|j*omega + KP2/Ty|^2
//         * (KP2/Ty + KI1*(bP + KP1/KI1^2*omega^2*(1+KP1*bP))).
// The governor net damping is negative exactly when ratio > 1.
CriterionReport proportional_criterion(const SystemParams& p, double omega);

// Mode predicted by the torque balance: the oscillatory root of
// TJ*lambda^2 + Dtotal*lambda + (Km - b21) = 0, i.e. real part
// -Dtotal/(2*TJ), imaginary part sqrt(|4*TJ*(Km - b21) - Dtotal^2|)/(2*TJ).
ModeEstimate mode_from_torque(const SystemParams& p,
                              const DampingDecomposition& d);

// Evaluation frequency for the decomposition. Default: the imaginary part of
// the dominant oscillatory mode of the original state matrix. With
// refine=true, runs the fixed-point iteration
// omega <- im(mode_from_torque(p, decomposition(p, omega))) until |d omega| <
// 1e-6 (at most 50 sweeps); on non-convergence falls back to the eigen omega
// and sets *fallback = true if provided.
double self_consistent_omega(const SystemParams& p, bool refine = false,
                             bool* fallback = nullptr);

}  // namespace ulfo
