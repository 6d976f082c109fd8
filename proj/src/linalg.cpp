#include "elast/linalg.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace elast {

namespace {

double max_abs(const double* m, int n) {
    double s = 0.0;
    for (int i = 0; i < n * n; ++i) s = std::max(s, std::fabs(m[i]));
    return s;
}

double max_off_diag(const double* a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s = std::max(s, std::fabs(a[p * n + q]));
    return s;
}

}  // namespace

SymmetricEigenResult symmetric_eigen(const double* m, int n) {
    if (n != 3 && n != 6) throw std::invalid_argument("symmetric_eigen supports n = 3 or 6");
    const double scale = max_abs(m, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(m[i * n + j] - m[j * n + i]) > 1e-9 * std::max(1.0, scale))
                throw std::invalid_argument("symmetric_eigen: asymmetric input");

    double a[36];
    double q[36];
    std::memcpy(a, m, sizeof(double) * n * n);
    // symmetrize exactly so rotations preserve symmetry bit-for-bit
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = a[j * n + i] = v;
        }
    for (int i = 0; i < n * n; ++i) q[i] = 0.0;
    for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;

    const double stop = 1e-12 * std::max(scale, 1e-300);
    for (int sweep = 0; sweep < 64 && max_off_diag(a, n) >= stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int qq = p + 1; qq < n; ++qq) {
                const double apq = a[p * n + qq];
                if (std::fabs(apq) < stop * 1e-4) continue;
                const double theta = (a[qq * n + qq] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a[p * n + p], aqq2 = a[qq * n + qq];
                a[p * n + p] = app - t * apq;
                a[qq * n + qq] = aqq2 + t * apq;
                a[p * n + qq] = a[qq * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == qq) continue;
                    const double akp = a[k * n + p], akq = a[k * n + qq];
                    a[k * n + p] = akp - s * (akq + tau * akp);
                    a[k * n + qq] = akq + s * (akp - tau * akq);
                    a[p * n + k] = a[k * n + p];
                    a[qq * n + k] = a[k * n + qq];
                }
                for (int k = 0; k < n; ++k) {
                    const double qkp = q[k * n + p], qkq = q[k * n + qq];
                    q[k * n + p] = qkp - s * (qkq + tau * qkp);
                    q[k * n + qq] = qkq + s * (qkp - tau * qkq);
                }
            }
        }
    }

    SymmetricEigenResult out;
    out.n = n;
    std::array<int, 6> order{};
    std::iota(order.begin(), order.begin() + n, 0);
    std::sort(order.begin(), order.begin() + n,
              [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[order[k] * n + order[k]];
        for (int i = 0; i < n; ++i) out.eigenvectors[k][i] = q[i * n + order[k]];
    }
    return out;
}

SymmetricEigenResult symmetric_eigen(const Mat3& m) { return symmetric_eigen(&m[0][0], 3); }
SymmetricEigenResult symmetric_eigen(const Mat6& m) { return symmetric_eigen(&m[0][0], 6); }

Eigen3 eigen3(const Mat3& m) {
    const SymmetricEigenResult r = symmetric_eigen(&m[0][0], 3);
    Eigen3 e;
    for (int k = 0; k < 3; ++k) {
        e.values[k] = r.eigenvalues[k];
        for (int i = 0; i < 3; ++i) e.vectors[k][i] = r.eigenvectors[k][i];
    }
    return e;
}

bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
        if (std::fabs(a[piv * n + col]) < 1e-300) return false;
        if (piv != col) {
            for (int k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
            std::swap(b[col], b[piv]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] * inv;
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double s = b[row];
        for (int k = row + 1; k < n; ++k) s -= a[row * n + k] * b[k];
        b[row] = s / a[row * n + row];
    }
    return true;
}

}  // namespace elast
