#include "ulfo/model.hpp"

namespace ulfo {

CoeffA coeffs_a(const SystemParams& p) {
    validate_params(p);
    const double den = 1.0 + p.KP1 * p.bP;
    CoeffA a{};
    a.a11 = (p.D + p.KL) / p.TJ;
    a.a12 = 1.0 / p.TJ;
    a.a13 = 2.0 / p.TJ;
    a.a22 = 2.0 / p.TW;
    a.a23 = 3.0 * a.a22;  // 6/TW
    a.a33 = p.KP2 / p.Ty;
    a.a34 = p.KP2 / (p.Ty * den);
    a.a31 = p.KP1 * a.a34;  // KP2*KP1/(Ty*den)
    a.a41 = p.KI1 * (-1.0 + p.bP * p.KP1 / den);
    a.a44 = p.KI1 * p.bP / den;
    return a;
}

CoeffB coeffs_b(const CoeffA& a, double TJ) {
    CoeffB b{};
    b.b21 = TJ * (a.a13 * a.a31 - a.a22 * a.a11);
    b.b22 = a.a11 + a.a22;
    b.b23 = TJ * (a.a12 * a.a23 + a.a13 * a.a33 - a.a22 * a.a13);
    b.b24 = 2.0 * a.a34;  // TJ*a13 = 2
    return b;
}

StateMatrix matrix_a(const CoeffA& a) {
    Mat4 m;
    m(0, 0) = -a.a11; m(0, 1) = a.a12;  m(0, 2) = -a.a13;
    m(1, 1) = -a.a22; m(1, 2) = a.a23;
    m(2, 0) = -a.a31; m(2, 2) = -a.a33; m(2, 3) = a.a34;
    m(3, 0) = a.a41;  m(3, 3) = -a.a44;
    return StateMatrix{m, Basis::original};
}

Mat4 transform_matrix(const CoeffA& a, double TJ) {
    Mat4 t = Mat4::identity();
    t(1, 0) = -TJ * a.a11;
    t(1, 1) = TJ * a.a12;
    t(1, 2) = -TJ * a.a13;
    return t;
}

StateMatrix matrix_b(const CoeffA& a, const CoeffB& b) {
    Mat4 m;
    m(0, 1) = a.a12;
    m(1, 0) = b.b21; m(1, 1) = -b.b22; m(1, 2) = b.b23; m(1, 3) = -b.b24;
    m(2, 0) = -a.a31; m(2, 2) = -a.a33; m(2, 3) = a.a34;
    m(3, 0) = a.a41;  m(3, 3) = -a.a44;
    return StateMatrix{m, Basis::jerk};
}

}  // namespace ulfo
