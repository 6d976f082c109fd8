#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace elast {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat6 = std::array<std::array<double, 6>, 6>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return scaled(a, 1.0 / n);
}

inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

inline double quad_form(const Mat3& m, const Vec3& v) { return dot(v, mat_vec(m, v)); }

inline double max_abs_component(const Vec3& v) {
    return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

/// Eigendecomposition of a small symmetric matrix, ascending eigenvalues.
/// eigenvectors[k] is the unit eigenvector belonging to eigenvalues[k].
struct SymmetricEigenResult {
    std::vector<double> eigenvalues;
    std::vector<std::array<double, 6>> eigenvectors;  // first n entries used
    int n = 0;
};

/// Cyclic Jacobi diagonalization for symmetric n-by-n matrices, n in {3, 6}.
/// Sweeps until every off-diagonal entry is below 1e-12 * max|m|.
/// Throws std::invalid_argument if the input is asymmetric beyond 1e-9 relative.
SymmetricEigenResult symmetric_eigen(const double* m, int n);

SymmetricEigenResult symmetric_eigen(const Mat3& m);
SymmetricEigenResult symmetric_eigen(const Mat6& m);

/// Ascending eigenvalues and matching unit eigenvectors of a symmetric 3x3.
/// Convenience wrapper used by the eigenpair iterations.
struct Eigen3 {
    std::array<double, 3> values;
    std::array<Vec3, 3> vectors;
};

Eigen3 eigen3(const Mat3& m);

/// Solve a dense n-by-n system in place via partial-pivot elimination.
/// Returns false if a pivot collapses.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n);

}  // namespace elast
