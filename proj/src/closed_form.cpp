#include "elast/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace elast {

namespace {

double degeneracy_floor(const SymmetryClass& sc) { return 1e-12 * sc.scale(); }

LabeledEigenvalue plain(double v, std::string label) {
    return LabeledEigenvalue{v, std::move(label), false};
}

LabeledEigenvalue rational(double num, double den, double floor, std::string label) {
    if (std::fabs(den) < floor) return LabeledEigenvalue{std::nullopt, std::move(label), true};
    return LabeledEigenvalue{num / den, std::move(label), false};
}

void require_classed(const SymmetryClass& sc) {
    if (sc.tag == Symmetry::general)
        throw std::invalid_argument("no closed forms for the general class; use the numeric solver");
    sc.validate();
}

}  // namespace

std::vector<LabeledEigenvalue> m_eigenvalues(const SymmetryClass& sc) {
    require_classed(sc);
    const double eps = degeneracy_floor(sc);
    const auto& p = sc.params;
    std::vector<LabeledEigenvalue> out;

    switch (sc.tag) {
        case Symmetry::isotropic: {
            const double K = p[0], G = p[1];
            out.push_back(plain(G, "isotropic.theta1"));
            out.push_back(plain(K + 4.0 * G / 3.0, "isotropic.theta2"));
            break;
        }
        case Symmetry::cubic: {
            const double b1 = p[0], b2 = p[1], b3 = p[2];
            out.push_back(plain(b1, "cubic.theta1"));
            out.push_back(plain(b2, "cubic.theta2"));
            out.push_back(plain(0.5 * (b1 - b3), "cubic.theta3"));
            out.push_back(plain(0.5 * (b1 + 2.0 * b2 + b3), "cubic.theta4"));
            out.push_back(plain((b1 + 4.0 * b2 + 2.0 * b3) / 3.0, "cubic.theta5"));
            out.push_back(rational(b1 * b1 + 2.0 * b1 * b2 + b1 * b3 - 2.0 * b3 * b3,
                                   3.0 * b1 + 2.0 * b2 + 5.0 * b3, eps, "cubic.theta6"));
            break;
        }
        case Symmetry::transverse_isotropic: {
            const double a1 = p[0], a2 = p[1], a3 = p[2], a4 = p[3], a5 = p[4];
            const double T = 2.0 * a3 + a5;
            out.push_back(plain(a1, "transverse.theta1"));
            out.push_back(plain(a2, "transverse.theta2"));
            out.push_back(plain(a3, "transverse.theta3"));
            out.push_back(plain(a4, "transverse.theta4"));
            out.push_back(rational(a1 * a2 - a5 * a5, a1 + a2 + 2.0 * a5, eps,
                                   "transverse.theta5"));
            out.push_back(rational(a1 * a2 - T * T, a1 + a2 - 2.0 * T, eps,
                                   "transverse.theta6"));
            break;
        }
        case Symmetry::tetragonal: {
            const double a1 = p[0], a2 = p[1], a3 = p[2], a4 = p[3], a5 = p[4], a6 = p[5];
            const double T = 2.0 * a3 + a5;
            const double s7 = a6 + 2.0 * a4 + a1;  // 2 theta7
            out.push_back(plain(a1, "tetragonal.theta1"));
            out.push_back(plain(a2, "tetragonal.theta2"));
            out.push_back(plain(a3, "tetragonal.theta3"));
            out.push_back(plain(a4, "tetragonal.theta4"));
            out.push_back(rational(a1 * a2 - a5 * a5, a1 + a2 + 2.0 * a5, eps,
                                   "tetragonal.theta5"));
            out.push_back(rational(a1 * a2 - T * T, a1 + a2 - 2.0 * T, eps,
                                   "tetragonal.theta6"));
            out.push_back(plain(0.5 * s7, "tetragonal.theta7"));
            out.push_back(plain(0.5 * (a1 - a6), "tetragonal.theta8"));
            out.push_back(rational(a2 * s7 - 2.0 * a5 * a5,
                                   2.0 * a2 + s7 + 4.0 * a5, eps, "tetragonal.theta9"));
            out.push_back(rational(s7 * a2 - 2.0 * T * T,
                                   s7 + 2.0 * a2 - 4.0 * T, eps, "tetragonal.theta10"));
            break;
        }
        case Symmetry::orthotropic: {
            const double d1 = p[0], d2 = p[1], d3 = p[2], d4 = p[3], d5 = p[4], d6 = p[5],
                         d7 = p[6], d8 = p[7], d9 = p[8];
            for (int i = 0; i < 6; ++i)
                out.push_back(plain(p[i], "orthotropic.theta" + std::to_string(i + 1)));
            out.push_back(rational(d2 * d3 - d7 * d7, d2 + d3 + 2.0 * d7, eps,
                                   "orthotropic.theta7"));
            out.push_back(rational(d1 * d3 - d8 * d8, d1 + d3 + 2.0 * d8, eps,
                                   "orthotropic.theta8"));
            out.push_back(rational(d1 * d2 - d9 * d9, d1 + d2 + 2.0 * d9, eps,
                                   "orthotropic.theta9"));
            const double c23 = 2.0 * d4 + d7, c13 = 2.0 * d5 + d8, c12 = 2.0 * d6 + d9;
            out.push_back(rational(d2 * d3 - c23 * c23, d2 + d3 - 2.0 * c23, eps,
                                   "orthotropic.theta10"));
            out.push_back(rational(d1 * d3 - c13 * c13, d1 + d3 - 2.0 * c13, eps,
                                   "orthotropic.theta11"));
            out.push_back(rational(d1 * d2 - c12 * c12, d1 + d2 - 2.0 * c12, eps,
                                   "orthotropic.theta12"));
            // theta13: coupled three-component family. Writing M for the 3x3
            // symmetric matrix with diagonal (d1, d2, d3) and off-diagonals
            // (d9+2d6, d8+2d5, d7+2d4), the value is det(M) / sum(adj(M)),
            // which expands to the long polynomial quotient.
            const double num =
                4 * d1 * d4 * d4 + 4 * d2 * d5 * d5 + 4 * d3 * d6 * d6 + d1 * d7 * d7 +
                d2 * d8 * d8 + d3 * d9 * d9 - d1 * d2 * d3 - 16 * d4 * d5 * d6 -
                8 * d5 * d6 * d7 - 4 * d6 * d7 * d8 - 2 * d7 * d8 * d9 + 4 * d1 * d4 * d7 +
                4 * d2 * d5 * d8 + 4 * d3 * d6 * d9 - 8 * d4 * d6 * d8 - 8 * d4 * d5 * d9 -
                4 * d5 * d7 * d9 - 4 * d4 * d8 * d9;
            const double den =
                4 * d4 * d4 + 4 * d5 * d5 + 4 * d6 * d6 + d7 * d7 + d8 * d8 + d9 * d9 -
                d1 * d2 - d1 * d3 - d2 * d3 - 8 * d4 * d5 - 8 * d4 * d6 - 8 * d5 * d6 -
                2 * d7 * d8 - 2 * d7 * d9 - 2 * d8 * d9 + 4 * d1 * d4 + 4 * d2 * d5 +
                4 * d3 * d6 + 2 * d1 * d7 + 2 * d2 * d8 + 2 * d3 * d9 + 4 * d4 * d7 -
                4 * d4 * d8 - 4 * d4 * d9 - 4 * d5 * d7 + 4 * d5 * d8 - 4 * d5 * d9 -
                4 * d6 * d7 - 4 * d6 * d8 + 4 * d6 * d9;
            out.push_back(rational(num, den, eps, "orthotropic.theta13"));
            break;
        }
        case Symmetry::general:
            break;  // unreachable
    }
    return out;
}

std::vector<LabeledEigenvalue> z_eigenvalues(const SymmetryClass& sc) {
    require_classed(sc);
    const double eps = degeneracy_floor(sc);
    const auto& p = sc.params;
    std::vector<LabeledEigenvalue> out;

    switch (sc.tag) {
        case Symmetry::isotropic:
            out.push_back(plain(p[0] + 4.0 * p[1] / 3.0, "isotropic.eta"));
            break;
        case Symmetry::cubic: {
            const double b1 = p[0], b2 = p[1], b3 = p[2];
            out.push_back(plain(b1, "cubic.eta1"));
            out.push_back(plain(0.5 * (b1 + b3) + b2, "cubic.eta2"));
            out.push_back(plain((b1 + 2.0 * b3 + 4.0 * b2) / 3.0, "cubic.eta3"));
            break;
        }
        case Symmetry::transverse_isotropic: {
            const double a1 = p[0], a2 = p[1], a3 = p[2], a5 = p[4];
            const double T = 2.0 * a3 + a5;
            out.push_back(plain(a1, "transverse.eta1"));
            out.push_back(plain(a2, "transverse.eta2"));
            out.push_back(rational(a1 * a2 - T * T, a1 + a2 - 2.0 * T, eps,
                                   "transverse.eta3=theta6"));
            break;
        }
        case Symmetry::tetragonal: {
            const double a1 = p[0], a2 = p[1], a3 = p[2], a4 = p[3], a5 = p[4], a6 = p[5];
            const double T = 2.0 * a3 + a5;
            const double s7 = a6 + 2.0 * a4 + a1;
            out.push_back(plain(0.5 * s7, "tetragonal.eta1"));
            out.push_back(plain(a2, "tetragonal.eta2"));
            out.push_back(rational(a1 * a2 - T * T, a1 + a2 - 2.0 * T, eps,
                                   "tetragonal.eta3"));
            out.push_back(rational(s7 * a2 - 2.0 * T * T, s7 + 2.0 * a2 - 4.0 * T, eps,
                                   "tetragonal.eta4"));
            break;
        }
        case Symmetry::orthotropic: {
            const std::vector<LabeledEigenvalue> m = m_eigenvalues(sc);
            const int picks[7] = {0, 1, 2, 9, 10, 11, 12};  // theta 1,2,3,10,11,12,13
            for (int k = 0; k < 7; ++k) {
                LabeledEigenvalue e = m[picks[k]];
                e.label = "orthotropic.eta" + std::to_string(k + 1) + "=theta" +
                          std::to_string(picks[k] + 1);
                out.push_back(std::move(e));
            }
            break;
        }
        case Symmetry::general:
            break;  // unreachable
    }
    return out;
}

namespace {

/// One candidate table row; emitted only if both eigen equations hold.
void try_row(const ElasticityTensor& t, double scale, Vec3 x, Vec3 y, double theta,
             const std::string& label, TransverseEigenvectorTable& table) {
    x = normalized(x);
    y = normalized(y);
    const Mat3 A = a_matrix(t, y);
    const Mat3 B = b_matrix(t, x);
    const Vec3 ax = mat_vec(A, x);
    const Vec3 by = mat_vec(B, y);
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        r = std::max(r, std::fabs(ax[i] - theta * x[i]));
        r = std::max(r, std::fabs(by[i] - theta * y[i]));
    }
    if (r < 1e-10 * std::max(1.0, scale)) {
        table.rows.push_back({x, y, theta, label, r / std::max(1.0, std::fabs(theta))});
    } else {
        table.diagnostics.push_back(label + ": residual " + std::to_string(r) +
                                    " exceeds bound, row dropped");
    }
}

}  // namespace

TransverseEigenvectorTable transverse_eigenpairs(const SymmetryClass& sc) {
    if (sc.tag != Symmetry::transverse_isotropic)
        throw std::invalid_argument("transverse_eigenpairs needs the transverse tag");
    sc.validate();
    const double a1 = sc.params[0], a2 = sc.params[1], a3 = sc.params[2], a4 = sc.params[3],
                 a5 = sc.params[4];
    const ElasticityTensor t = from_class(sc);
    const double scale = t.scale();

    TransverseEigenvectorTable table;
    table.lambda_mat = Mat3{{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}};
    table.d_mat = Mat3{{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
    table.p_mat = Mat3{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};

    const double S = a1 + a2 + 2.0 * a5;
    const double T = 2.0 * a3 + a5;
    const double Q = 4.0 * a3 + 2.0 * a5 - a1 - a2;

    auto radical = [&](double num, double den, const char* name) -> std::optional<double> {
        if (std::fabs(den) < 1e-12 * std::max(1.0, scale)) {
            table.diagnostics.push_back(std::string(name) + ": denominator vanishes");
            return std::nullopt;
        }
        const double r2 = num / den;
        if (r2 < 0.0) {
            table.diagnostics.push_back(std::string(name) + ": negative radicand " +
                                        std::to_string(r2));
            return std::nullopt;
        }
        return std::sqrt(r2);
    };

    table.zeta = radical(T - a1, Q, "zeta");
    table.eta = radical(T - a2, Q, "eta");
    table.phi = radical(a1 + a5, S, "phi");
    table.psi = radical(a2 + a5, S, "psi");

    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    try_row(t, scale, e1, e1, a1, "theta1.x=e1", table);
    try_row(t, scale, e2, e2, a1, "theta1.x=e2", table);
    try_row(t, scale, e3, e3, a2, "theta2.x=e3", table);
    try_row(t, scale, e1, e3, a3, "theta3.x=e1.y=Px", table);
    try_row(t, scale, e3, e2, a3, "theta3.x=e3.y=Px", table);
    try_row(t, scale, e2, e3, a3, "theta3.x=e2.y=PPx", table);
    try_row(t, scale, e2, e1, a4, "theta4.x=e2.y=Px", table);
    try_row(t, scale, e1, e2, a4, "theta4.x=e1.y=PPx", table);

    const double theta5_den = S, theta6_den = a1 + a2 - 2.0 * T;
    if (table.psi && table.phi && std::fabs(theta5_den) >= 1e-12 * std::max(1.0, scale)) {
        const double th5 = (a1 * a2 - a5 * a5) / theta5_den;
        const Vec3 x13{*table.psi, 0, *table.phi};
        try_row(t, scale, x13, mat_vec(table.lambda_mat, x13), th5, "theta5.y=Lx", table);
        const Vec3 x23{0, *table.psi, *table.phi};
        try_row(t, scale, x23, mat_vec(table.d_mat, x23), th5, "theta5.y=Dx", table);
    } else {
        table.diagnostics.push_back("theta5 rows omitted: constants undefined");
    }
    if (table.eta && table.zeta && std::fabs(theta6_den) >= 1e-12 * std::max(1.0, scale)) {
        const double th6 = (a1 * a2 - T * T) / theta6_den;
        try_row(t, scale, Vec3{0, *table.eta, *table.zeta}, Vec3{0, *table.eta, *table.zeta},
                th6, "theta6.x23.y=x", table);
        try_row(t, scale, Vec3{*table.eta, 0, *table.zeta}, Vec3{*table.eta, 0, *table.zeta},
                th6, "theta6.x13.y=x", table);
    } else {
        table.diagnostics.push_back("theta6 rows omitted: constants undefined");
    }
    return table;
}

double anisotropy_factor(const SymmetryClass& sc) {
    if (sc.tag != Symmetry::cubic)
        throw std::invalid_argument("anisotropy_factor needs the cubic tag");
    sc.validate();
    const double b1 = sc.params[0], b2 = sc.params[1], b3 = sc.params[2];
    if (std::fabs(b1 - b3) < 1e-12 * sc.scale())
        throw std::domain_error("anisotropy_factor: c11 == c12");
    return 2.0 * b2 / (b1 - b3);
}

WaveVelocities wave_velocities(const SymmetryClass& sc, double rho) {
    if (sc.tag != Symmetry::isotropic)
        throw std::invalid_argument("wave_velocities needs the isotropic tag");
    sc.validate();
    if (!(rho > 0.0)) throw std::domain_error("wave_velocities: density must be positive");
    const double theta1 = sc.params[1];
    const double theta2 = sc.params[0] + 4.0 * sc.params[1] / 3.0;
    if (theta1 < 0.0 || theta2 < 0.0)
        throw std::domain_error("wave_velocities: negative modulus");
    return {std::sqrt(theta2 / rho), std::sqrt(theta1 / rho)};
}

}  // namespace elast
