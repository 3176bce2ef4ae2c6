#include "ulfo/gdta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ulfo {

std::pair<Complex, Complex> governor_response(const CoeffA& a, double omega,
                                              double sigma) {
    if (!(omega > 0.0)) throw std::invalid_argument("governor_response: omega must be > 0");
    const Complex s(sigma, omega);
    const Complex h_yl = a.a41 / (s + a.a44);
    const Complex h_mu = (-a.a31 + a.a34 * h_yl) / (s + a.a33);
    return {h_mu, h_yl};
}

TorqueResponse torque_response(const CoeffA& a, const CoeffB& b, double omega,
                               double sigma) {
    const auto [h_mu, h_yl] = governor_response(a, omega, sigma);
    TorqueResponse r;
    r.omega = omega;
    r.sigma = sigma;
    r.K_yL = b.b24 * h_yl;
    r.K_mu = b.b23 * h_mu;
    r.K_total = r.K_mu - r.K_yL;
    return r;
}

DampingDecomposition damping_decomposition(const SystemParams& p, double omega,
                                           double sigma) {
    validate_params(p);
    const CoeffA a = coeffs_a(p);
    const CoeffB b = coeffs_b(a, p.TJ);
    const TorqueResponse t = torque_response(a, b, omega, sigma);

    DampingDecomposition d;
    d.inherent = p.TJ * b.b22;
    d.path1 = t.K_yL.imag() / omega;
    d.path2 = -t.K_mu.imag() / omega;
    d.Dm = d.path1 + d.path2;
    d.Dtotal = d.inherent + d.Dm;
    // Decomposing K(s) = c + d*s along s = sigma + j*omega gives
    // c = Re(K) - sigma*Im(K)/omega; Km is its negative. Reduces to -Re(K)
    // on the imaginary axis.
    d.Km = -(t.K_total.real() - sigma * t.K_total.imag() / omega);
    d.criterion = proportional_criterion(p, omega).ratio;
    d.omega_eval = omega;
    d.sigma_eval = sigma;
    d.stable = d.Dtotal > 0.0;
    return d;
}

double approx_path1(const SystemParams& p, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("approx_path1: omega must be > 0");
    const double den = 1.0 + p.KP1 * p.bP;
    const double wre = p.KI1 * p.bP;    // real part of jw(1+KP1 bP)+KI1 bP
    const double wim = omega * den;
    return 2.0 * p.KI1 * p.KP2 / p.Ty / (wre * wre + wim * wim);
}

double approx_path2(const SystemParams& p, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("approx_path2: omega must be > 0");
    const double den = 1.0 + p.KP1 * p.bP;
    const double q = p.KP2 / p.Ty;
    const double servo = (1.0 / p.TW + q) / (omega * omega + q * q);
    const double m = den * den * omega * omega + p.KI1 * p.bP * p.KI1 * p.bP;
    const double branch22 =
        2.0 * (p.bP * p.KI1 * p.KI1 + p.KP1 * den * omega * omega) / m;
    return -q * servo * (approx_path1(p, omega) + branch22);
}

CriterionReport proportional_criterion(const SystemParams& p, double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("proportional_criterion: omega must be > 0");
    validate_params(p);
    const double q = p.KP2 / p.Ty;
    const double first = (1.0 / p.TW + q) / (omega * omega + q * q);
    const double brace =
        q + p.KI1 * (p.bP + p.KP1 / (p.KI1 * p.KI1) * omega * omega *
                                (1.0 + p.KP1 * p.bP));
    CriterionReport r;
    r.ratio = first * brace;
    const CoeffA a = coeffs_a(p);
    const CoeffB b = coeffs_b(a, p.TJ);
    const TorqueResponse t = torque_response(a, b, omega);
    r.governor_net_damping = (t.K_yL.imag() - t.K_mu.imag()) / omega;
    r.verdict = r.ratio > 1.0 ? CriterionReport::Verdict::governor_negative
                              : CriterionReport::Verdict::governor_positive;
    return r;
}

ModeEstimate mode_from_torque(const SystemParams& p,
                              const DampingDecomposition& d) {
    // Oscillatory root of TJ*l^2 + Dtotal*l + (Km - b21) = 0.
    const CoeffA a = coeffs_a(p);
    const CoeffB b = coeffs_b(a, p.TJ);
    const double radicand =
        4.0 * p.TJ * (d.Km - b.b21) - d.Dtotal * d.Dtotal;
    ModeEstimate m;
    const double re = -d.Dtotal / (2.0 * p.TJ);
    const double im = std::sqrt(std::abs(radicand)) / (2.0 * p.TJ);
    m.lambda = Complex(re, im);
    m.frequency_hz = im / (2.0 * std::numbers::pi);
    const double mag = std::abs(m.lambda);
    m.damping_ratio = mag > 0.0 ? -re / mag : 0.0;
    m.source = ModeEstimate::Source::torque_formula;
    return m;
}

double self_consistent_omega(const SystemParams& p, bool refine,
                             bool* fallback) {
    validate_params(p);
    const auto eigs = eigenvalues(matrix_a(coeffs_a(p)).m);
    const ModeEstimate mode = dominant_oscillatory_mode(eigs);
    const double omega_eig = mode.lambda.imag();
    if (fallback) *fallback = false;
    if (!refine) return omega_eig;

    double omega = omega_eig;
    for (int i = 0; i < 50; ++i) {
        const DampingDecomposition d = damping_decomposition(p, omega);
        const double next = mode_from_torque(p, d).lambda.imag();
        if (!(next > 0.0) || !std::isfinite(next)) break;
        if (std::abs(next - omega) < 1e-6) return next;
        omega = next;
    }
    if (fallback) *fallback = true;
    return omega_eig;
}

}  // namespace ulfo
