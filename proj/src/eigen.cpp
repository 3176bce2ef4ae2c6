#include "ulfo/eigen.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace ulfo {

std::array<double, 5> char_poly(const Mat4& m) {
    if (!all_finite(m)) throw std::invalid_argument("char_poly: non-finite matrix");
    // Faddeev-LeVerrier: M_k = M*(M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
    std::array<double, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
    Mat4 mk = m;
    for (int k = 1; k <= 4; ++k) {
        c[static_cast<size_t>(k)] = -trace(mk) / k;
        if (k < 4) mk = m * (mk + c[static_cast<size_t>(k)] * Mat4::identity());
    }
    return c;
}

namespace {

using LComplex = std::complex<long double>;

LComplex horner(const std::array<long double, 5>& c, LComplex z) {
    LComplex r = c[0];
    for (int i = 1; i < 5; ++i) r = r * z + c[static_cast<size_t>(i)];
    return r;
}

LComplex horner_deriv(const std::array<long double, 5>& c, LComplex z) {
    LComplex r = 4.0L * c[0];
    r = r * z + 3.0L * c[1];
    r = r * z + 2.0L * c[2];
    r = r * z + c[3];
    return r;
}

}  // namespace

RootResult poly_roots_detailed(const std::array<double, 5>& coeffs) {
    if (coeffs[0] != 1.0)
        throw std::invalid_argument("poly_roots: polynomial must be monic");
    for (double v : coeffs)
        if (!std::isfinite(v))
            throw std::invalid_argument("poly_roots: non-finite coefficient");

    std::array<long double, 5> c;
    for (size_t i = 0; i < 5; ++i) c[i] = coeffs[i];

    // Cauchy bound for the starting circle, slightly de-symmetrized so no
    // starting point sits on a root ray.
    long double bound = 0.0L;
    for (size_t i = 1; i < 5; ++i) bound = std::max(bound, std::abs(c[i]));
    const long double radius = 1.0L + bound;

    std::array<LComplex, 4> z;
    for (int k = 0; k < 4; ++k) {
        const long double phi =
            2.0L * std::numbers::pi_v<long double> * k / 4.0L + 0.4L;
        z[static_cast<size_t>(k)] =
            radius * LComplex(std::cos(phi), std::sin(phi));
    }

    constexpr int kMaxIter = 200;
    int iter = 0;
    long double max_rel_corr = 0.0L;
    bool converged = false;
    for (; iter < kMaxIter && !converged; ++iter) {
        max_rel_corr = 0.0L;
        for (int k = 0; k < 4; ++k) {
            const LComplex zk = z[static_cast<size_t>(k)];
            const LComplex p = horner(c, zk);
            if (p == LComplex(0.0L, 0.0L)) continue;
            const LComplex dp = horner_deriv(c, zk);
            const LComplex w = p / dp;  // Newton correction
            LComplex repel(0.0L, 0.0L);
            for (int j = 0; j < 4; ++j)
                if (j != k) repel += 1.0L / (zk - z[static_cast<size_t>(j)]);
            const LComplex corr = w / (1.0L - w * repel);
            z[static_cast<size_t>(k)] = zk - corr;
            max_rel_corr = std::max(max_rel_corr,
                                    std::abs(corr) / (1.0L + std::abs(zk)));
        }
        converged = max_rel_corr < 1e-17L;
    }
    // Multiple roots stagnate without meeting the correction threshold, so
    // convergence is judged by the residual, scaled by the coefficient size.
    const long double res_tol =
        1e-8L * std::max(1.0L, bound);
    for (const auto& zk : z) {
        const long double zs = std::max(1.0L, std::abs(zk));
        if (std::abs(horner(c, zk)) > res_tol * zs * zs * zs * zs)
            throw std::runtime_error("poly_roots: Aberth iteration did not converge");
    }

    RootResult res;
    res.iterations = iter;
    res.max_correction = static_cast<double>(max_rel_corr);
    for (int k = 0; k < 4; ++k)
        res.roots[static_cast<size_t>(k)] =
            Complex(static_cast<double>(z[static_cast<size_t>(k)].real()),
                    static_cast<double>(z[static_cast<size_t>(k)].imag()));

    // Real coefficients: snap near-real roots onto the axis and make complex
    // pairs exact conjugates.
    auto& r = res.roots;
    std::array<bool, 4> used{};
    for (int k = 0; k < 4; ++k) {
        const double scale = std::max(1.0, std::abs(r[static_cast<size_t>(k)]));
        if (std::abs(r[static_cast<size_t>(k)].imag()) <= 1e-9 * scale) {
            r[static_cast<size_t>(k)] = Complex(r[static_cast<size_t>(k)].real(), 0.0);
            used[static_cast<size_t>(k)] = true;  // real, nothing to pair
        }
    }
    for (int k = 0; k < 4; ++k) {
        if (used[static_cast<size_t>(k)]) continue;
        used[static_cast<size_t>(k)] = true;
        int best = -1;
        double bestd = std::numeric_limits<double>::infinity();
        for (int j = k + 1; j < 4; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            const double d = std::abs(r[static_cast<size_t>(k)] -
                                      std::conj(r[static_cast<size_t>(j)]));
            if (d < bestd) { bestd = d; best = j; }
        }
        if (best < 0) {
            // unpaired non-real root of a real polynomial: numerical fuzz
            r[static_cast<size_t>(k)] = Complex(r[static_cast<size_t>(k)].real(), 0.0);
            continue;
        }
        used[static_cast<size_t>(best)] = true;
        const double re = 0.5 * (r[static_cast<size_t>(k)].real() +
                                 r[static_cast<size_t>(best)].real());
        const double im = 0.5 * (std::abs(r[static_cast<size_t>(k)].imag()) +
                                 std::abs(r[static_cast<size_t>(best)].imag()));
        const double sk = r[static_cast<size_t>(k)].imag() >= 0.0 ? 1.0 : -1.0;
        r[static_cast<size_t>(k)] = Complex(re, sk * im);
        r[static_cast<size_t>(best)] = Complex(re, -sk * im);
    }
    return res;
}

std::array<Complex, 4> poly_roots(const std::array<double, 5>& coeffs) {
    return poly_roots_detailed(coeffs).roots;
}

std::array<Complex, 4> eigenvalues(const Mat4& m) {
    auto roots = poly_roots(char_poly(m));
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return roots;
}

ModeEstimate dominant_oscillatory_mode(std::span<const Complex> eigs) {
    const Complex* best = nullptr;
    for (const auto& e : eigs) {
        if (e.imag() <= 1e-9) continue;
        if (!best || e.real() > best->real()) best = &e;
    }
    if (!best) throw NoOscillatoryMode("no oscillatory mode");
    ModeEstimate m;
    m.lambda = *best;
    m.frequency_hz = best->imag() / (2.0 * std::numbers::pi);
    const double mag = std::abs(*best);
    m.damping_ratio = mag > 0.0 ? -best->real() / mag : 0.0;
    m.source = ModeEstimate::Source::full_eigen;
    return m;
}

}  // namespace ulfo
