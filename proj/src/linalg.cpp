#include "ulfo/linalg.hpp"

#include <stdexcept>

namespace ulfo {

Mat4 inverse(const Mat4& a) {
    // Gauss-Jordan on [a | I] with partial pivoting.
    double w[4][8];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) w[i][j] = a(i, j);
        for (int j = 4; j < 8; ++j) w[i][j] = (j - 4 == i) ? 1.0 : 0.0;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(w[r][col]) > std::abs(w[piv][col])) piv = r;
        if (std::abs(w[piv][col]) < 1e-300)
            throw std::runtime_error("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < 8; ++j) std::swap(w[piv][j], w[col][j]);
        const double d = w[col][col];
        for (int j = 0; j < 8; ++j) w[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = w[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < 8; ++j) w[r][j] -= f * w[col][j];
        }
    }
    Mat4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv(i, j) = w[i][j + 4];
    return inv;
}

}  // namespace ulfo
