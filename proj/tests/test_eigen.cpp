#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "ulfo/eigen.hpp"

using namespace ulfo;

namespace {
Mat4 diag(double d0, double d1, double d2, double d3) {
    Mat4 m;
    m(0, 0) = d0; m(1, 1) = d1; m(2, 2) = d2; m(3, 3) = d3;
    return m;
}

Mat4 typical_A() { return matrix_a(coeffs_a(SystemParams::typical())).m; }
}  // namespace

TEST_CASE("char_poly of identity and zero matrices") {
    const auto ci = char_poly(Mat4::identity());
    CHECK(ci == std::array<double, 5>{1.0, -4.0, 6.0, -4.0, 1.0});
    const auto cz = char_poly(Mat4::zero());
    CHECK(cz == std::array<double, 5>{1.0, 0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("char_poly s^3 coefficient is minus the trace") {
    const Mat4 A = typical_A();
    CHECK(char_poly(A)[1] == doctest::Approx(-trace(A)).epsilon(1e-14));
    // frozen: a11+a22+a33+a44 for the typical parameters (trace(A) < 0)
    CHECK(char_poly(A)[1] == doctest::Approx(18.33921465355805).epsilon(1e-12));
}

TEST_CASE("char_poly rejects non-finite input") {
    Mat4 m;
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(char_poly(m), std::invalid_argument);
}

TEST_CASE("poly_roots on (s^2+1)(s^2+4)") {
    const auto roots = poly_roots({1.0, 0.0, 5.0, 0.0, 4.0});
    auto has = [&](Complex want) {
        return std::any_of(roots.begin(), roots.end(), [&](Complex r) {
            return std::abs(r - want) < 1e-10;
        });
    };
    CHECK(has({0, 1}));
    CHECK(has({0, -1}));
    CHECK(has({0, 2}));
    CHECK(has({0, -2}));
}

TEST_CASE("poly_roots on the quadruple root (s-1)^4") {
    const auto res = poly_roots_detailed({1.0, -4.0, 6.0, -4.0, 1.0});
    for (const auto& r : res.roots) CHECK(std::abs(r - Complex(1.0)) < 1e-4);
    // conditioning indicator reflects the stagnation near the multiple root
    CHECK(res.max_correction > 1e-12);
}

TEST_CASE("poly_roots requires a monic polynomial") {
    CHECK_THROWS_AS(poly_roots({2.0, 0.0, 0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("char poly of the typical matrix contains the ULFO mode") {
    const auto roots = poly_roots(char_poly(typical_A()));
    const bool found = std::any_of(roots.begin(), roots.end(), [](Complex r) {
        return std::abs(r - Complex(-0.0031, 0.4846)) < 1e-3;
    });
    CHECK(found);
}

TEST_CASE("eigenvalues of a diagonal matrix, sorted") {
    const auto e = eigenvalues(diag(-3, -1, -4, -2));
    CHECK(e[0].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e[1].real() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(e[2].real() == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(e[3].real() == doctest::Approx(-4.0).epsilon(1e-12));
    for (const auto& v : e) CHECK(v.imag() == 0.0);
}

TEST_CASE("eigenvalue sorting breaks real ties by descending imaginary part") {
    // rotation block plus distinct reals
    Mat4 m;
    m(0, 1) = -2.0; m(1, 0) = 2.0;  // +-2i
    m(2, 2) = -1.0; m(3, 3) = -3.0;
    const auto e = eigenvalues(m);
    CHECK(e[0].imag() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(e[1].imag() == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(e[0] == std::conj(e[1]));
}

TEST_CASE("random-matrix oracle: residual, trace and determinant identities") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 1000; ++i) {
        const Mat4 m = test::random_matrix(rng);
        const auto eigs = eigenvalues(m);
        const double norm = std::max(1.0, max_abs(m) * 4.0);
        const double scale = norm * norm * norm * norm;

        Complex sum = 0.0, prod = 1.0;
        for (const auto& l : eigs) {
            // independent oracle: determinant of (lambda I - M) directly
            CHECK(std::abs(test::det_shifted(m, l)) <= 1e-6 * scale);
            sum += l;
            prod *= l;
        }
        CHECK(std::abs(sum - trace(m)) <= 1e-7 * std::max(1.0, std::abs(trace(m))));
        const double det = char_poly(m)[4];  // det(M) via the constant coefficient
        CHECK(std::abs(prod - det) <= 1e-7 * std::max(1.0, std::abs(det)));

        // conjugate symmetry, exact after pairing
        for (const auto& l : eigs) {
            if (l.imag() == 0.0) continue;
            CHECK(std::any_of(eigs.begin(), eigs.end(),
                              [&](Complex o) { return o == std::conj(l); }));
        }
    }
}

TEST_CASE("dominant_oscillatory_mode on the typical spectrum") {
    const auto eigs = eigenvalues(typical_A());
    const auto mode = dominant_oscillatory_mode(eigs);
    CHECK(mode.lambda.real() == doctest::Approx(-0.0031).epsilon(0.2));
    CHECK(mode.lambda.imag() == doctest::Approx(0.4846).epsilon(1e-3));
    CHECK(mode.frequency_hz == doctest::Approx(0.0771).epsilon(1e-2));
    CHECK(mode.damping_ratio > 0.0);
    CHECK(mode.source == ModeEstimate::Source::full_eigen);
}

TEST_CASE("dominant_oscillatory_mode errors on an all-real spectrum") {
    const std::array<Complex, 4> eigs{Complex(-1), Complex(-2), Complex(-3),
                                      Complex(-4)};
    CHECK_THROWS_AS(dominant_oscillatory_mode(eigs), NoOscillatoryMode);
}

TEST_CASE("dominant_oscillatory_mode picks the largest real part") {
    const std::array<Complex, 4> eigs{Complex(-5, 3), Complex(-5, -3),
                                      Complex(-0.1, 0.5), Complex(-0.1, -0.5)};
    const auto mode = dominant_oscillatory_mode(eigs);
    CHECK(mode.lambda == Complex(-0.1, 0.5));
}
