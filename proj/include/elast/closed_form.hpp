#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elast/tensor.hpp"

namespace elast {

/// One closed-form eigenvalue. `degenerate` is set when the formula's
/// denominator vanished; the value is then absent rather than invented.
struct LabeledEigenvalue {
    std::optional<double> value;
    std::string label;
    bool degenerate = false;
};

/// Per-class M-eigenvalue lists: 2 (isotropic), 6 (cubic), 6 (transverse),
/// 10 (tetragonal), 13 (orthotropic). Duplicates are preserved; the labels
/// are the audit trail. Throws std::invalid_argument for the general tag.
std::vector<LabeledEigenvalue> m_eigenvalues(const SymmetryClass& sc);

/// Per-class Z-eigenvalue lists: 1, 3, 3, 4, or 7 entries. Labels note the
/// coinciding M-eigenvalue where one is identified.
std::vector<LabeledEigenvalue> z_eigenvalues(const SymmetryClass& sc);

struct TransverseTableRow {
    Vec3 x;
    Vec3 y;
    double theta;
    std::string label;
    double residual;  // max equation residual, relative to max(1, |theta|)
};

/// Eigenvector catalogue for the transverse class: the four constants, the
/// three selector matrices, and one representative (x, y, theta) row per
/// sign family. Rows whose constants are undefined (negative radicand or
/// vanishing denominator) are omitted and listed in `diagnostics`; every
/// emitted row has been residual-checked against the tensor contractions.
struct TransverseEigenvectorTable {
    std::optional<double> zeta, phi, eta, psi;
    Mat3 lambda_mat;  // diag(1, 0, -1)
    Mat3 d_mat;       // diag(0, 1, -1)
    Mat3 p_mat;       // cyclic permutation
    std::vector<TransverseTableRow> rows;
    std::vector<std::string> diagnostics;
};

TransverseEigenvectorTable transverse_eigenpairs(const SymmetryClass& sc);

/// 2 c66 / (c11 - c12) for the cubic class; 1 means isotropic.
/// Throws std::domain_error when c11 == c12.
double anisotropy_factor(const SymmetryClass& sc);

struct WaveVelocities {
    double vp;
    double vs;
};

/// Longitudinal and shear wave speeds of an isotropic solid.
/// Throws std::domain_error for rho <= 0 or negative moduli.
WaveVelocities wave_velocities(const SymmetryClass& sc, double rho);

}  // namespace elast
