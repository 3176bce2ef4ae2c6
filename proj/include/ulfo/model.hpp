#pragma once

#include "ulfo/linalg.hpp"
#include "ulfo/params.hpp"

// State-space models of the test system.
//
// Original basis: states (df, dTmd, dmu, dyL) -- frequency deviation, turbine
// torque (fast split), gate opening, governor integral output.
//
// Jerk basis: dTmd is replaced by the multi-information variable
// dx = -TJ*a11*df + TJ*a12*dTmd - TJ*a13*dmu, which equals TJ*d(df)/dt, so the
// turbine-generator cascade becomes a second-order equation in df whose
// highest derivative is the frequency jerk.

namespace ulfo {

// Coefficients of the original state matrix.
struct CoeffA {
    double a11, a12, a13, a22, a23, a31, a33, a34, a41, a44;
};

// Coefficients of the dx row of the transformed state matrix. Always derived
// from a CoeffA; never construct one by hand.
struct CoeffB {
    double b21, b22, b23, b24;
};

enum class Basis { original, jerk };

struct StateMatrix {
    Mat4 m;
    Basis basis;
};

// a11=(D+KL)/TJ, a12=1/TJ, a13=2/TJ, a22=2/TW, a23=6/TW, a33=KP2/Ty,
// a31=KP2*KP1/(Ty*(1+KP1*bP)), a34=KP2/(Ty*(1+KP1*bP)),
// a41=KI1*(-1+bP*KP1/(1+KP1*bP)), a44=KI1*bP/(1+KP1*bP).
// a41 evaluates negative for the typical parameters; that is the printed
// formula, validated downstream against the known eigenvalues.
CoeffA coeffs_a(const SystemParams& p);

// b21=TJ*(a13*a31-a22*a11), b22=a11+a22, b23=TJ*(a12*a23+a13*a33-a22*a13),
// b24=TJ*a13*a34.
CoeffB coeffs_b(const CoeffA& a, double TJ);

// Original-basis state matrix:
//   [-a11  a12 -a13  0 ]
//   [  0  -a22  a23  0 ]
//   [-a31   0  -a33  a34]
//   [ a41   0    0  -a44]
StateMatrix matrix_a(const CoeffA& a);

// The basis change (df,dx,dmu,dyL) = T (df,dTmd,dmu,dyL):
//   [   1       0       0     0]
//   [-TJ*a11  TJ*a12 -TJ*a13  0]
//   [   0       0       1     0]
//   [   0       0       0     1]
// Unit determinant (TJ*a12 = 1), hence always invertible.
Mat4 transform_matrix(const CoeffA& a, double TJ);

// Jerk-basis state matrix:
//   [ 0    a12   0    0 ]
//   [b21  -b22  b23 -b24]
//   [-a31   0  -a33  a34]
//   [a41    0    0  -a44]
// Similar to matrix_a via transform_matrix: B = T A T^-1.
StateMatrix matrix_b(const CoeffA& a, const CoeffB& b);

}  // namespace ulfo
