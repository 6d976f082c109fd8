#pragma once

#include <array>
#include <string>
#include <vector>

#include "elast/linalg.hpp"

namespace elast {

/// Voigt pair compression: 11->0, 22->1, 33->2, 23/32->3, 13/31->4, 12/21->5.
constexpr int voigt_index(int i, int j) { return i == j ? i : 6 - i - j; }

/// Packed upper-triangle index of the symmetric 6x6, row a, column b, a <= b.
constexpr int packed_index(int a, int b) { return a * 6 - a * (a - 1) / 2 + (b - a); }

struct VoigtMatrix {
    Mat6 m{};

    double& operator()(int a, int b) { return m[a][b]; }
    double operator()(int a, int b) const { return m[a][b]; }
};

/// 6x6 matrix form of the symmetric-eigentensor problem. Relative to the
/// Voigt matrix, normal-shear blocks carry sqrt(2) and the shear-shear block
/// carries 2, all derived from one fixed sqrt(2) constant.
struct MandelMatrix {
    Mat6 m{};

    double& operator()(int a, int b) { return m[a][b]; }
    double operator()(int a, int b) const { return m[a][b]; }
};

/// exactly rounded sqrt(2); the single constant behind every Mandel scaling
inline constexpr double kSqrt2 = 1.4142135623730951;

/// Fourth-order stiffness tensor with both minor symmetries and the major
/// symmetry. Storage is the canonical 21-vector keyed by the Voigt pair
/// (a, b) with a <= b; the full C_ijkl is always materialized through the
/// index map, never stored, so the symmetries cannot drift.
class ElasticityTensor {
public:
    ElasticityTensor() = default;

    double component(int i, int j, int k, int l) const {
        return c_[storage_index(i, j, k, l)];
    }

    double voigt(int a, int b) const {
        return c_[a <= b ? packed_index(a, b) : packed_index(b, a)];
    }

    void set_voigt(int a, int b, double value) {
        c_[a <= b ? packed_index(a, b) : packed_index(b, a)] = value;
    }

    const std::array<double, 21>& packed() const { return c_; }

    /// Largest absolute component; the scale used by tolerance checks.
    double scale() const {
        double s = 0.0;
        for (double v : c_) s = std::max(s, std::fabs(v));
        return s;
    }

    bool operator==(const ElasticityTensor& o) const { return c_ == o.c_; }

    static constexpr int storage_index(int i, int j, int k, int l) {
        const int a = voigt_index(i, j);
        const int b = voigt_index(k, l);
        return a <= b ? packed_index(a, b) : packed_index(b, a);
    }

private:
    std::array<double, 21> c_{};
};

enum class Symmetry {
    isotropic,
    cubic,
    transverse_isotropic,
    tetragonal,
    orthotropic,
    general,
};

const char* symmetry_name(Symmetry s);
Symmetry symmetry_from_name(const std::string& name);  // throws std::invalid_argument

/// Parameter counts: isotropic {K, G}, cubic {b1=c11, b2=c66, b3=c12},
/// transverse {a1=c11, a2=c33, a3=c44, a4=c66, a5=c13} with c12 = a1 - 2 a4,
/// tetragonal {a1..a5, a6=c12}, orthotropic {d1..d9 = c11, c22, c33, c44,
/// c55, c66, c23, c13, c12}. The `general` tag carries no parameters.
struct SymmetryClass {
    Symmetry tag = Symmetry::general;
    std::vector<double> params;

    static SymmetryClass isotropic(double K, double G);
    static SymmetryClass isotropic_lame(double lambda, double mu);
    static SymmetryClass cubic(double b1, double b2, double b3);
    static SymmetryClass transverse(double a1, double a2, double a3, double a4, double a5);
    static SymmetryClass tetragonal(double a1, double a2, double a3, double a4, double a5,
                                    double a6);
    static SymmetryClass orthotropic(const std::array<double, 9>& d);
    static SymmetryClass general();

    double bulk() const;        // isotropic K
    double shear() const;       // isotropic G
    double lame_lambda() const; // K - 2G/3
    double scale() const;       // max(1, max |param|)

    /// Throws std::invalid_argument on wrong parameter count or non-finite values.
    void validate() const;
};

/// Generalized moduli of a transversely isotropic solid. Ep/Et are the
/// in-plane and axial Young's moduli, nu_p the in-plane Poisson ratio,
/// nu_tp/nu_pt the axial-plane ratios, mu_t the axial shear modulus.
struct EngineeringConstants {
    double ep;
    double et;
    double nu_p;
    double nu_tp;
    double nu_pt;
    double mu_t;
};

ElasticityTensor from_class(const SymmetryClass& sc);

VoigtMatrix to_voigt(const ElasticityTensor& t);

/// Accepts matrices symmetric to 1e-9 relative (entries are averaged);
/// anything worse is rejected as bad data.
ElasticityTensor from_voigt(const VoigtMatrix& m);

MandelMatrix to_mandel(const ElasticityTensor& t);

/// Full four-linear contraction C(w, x, y, z) = C_ijkl w_i x_j y_k z_l.
double contract4(const ElasticityTensor& t, const Vec3& w, const Vec3& x, const Vec3& y,
                 const Vec3& z);

/// f(x, y) = C_ijkl x_i y_j x_k y_l, the quadratic form behind strong ellipticity.
double f_quadform(const ElasticityTensor& t, const Vec3& x, const Vec3& y);

/// Acoustic-type matrix A(y)_ik = C_ijkl y_j y_l; symmetric by the major symmetry.
Mat3 a_matrix(const ElasticityTensor& t, const Vec3& y);

/// B(x)_jl = C_ijkl x_i x_k. With both minor symmetries B(v) equals A(v);
/// kept as its own entry point because the two play different roles in the
/// eigenpair equations.
Mat3 b_matrix(const ElasticityTensor& t, const Vec3& x);

/// Most specific symmetry class whose zero/equality pattern holds within
/// tol * max|component|, with parameters extracted by averaging the entries
/// each pattern equates. Falls back to `general`.
SymmetryClass detect_class(const ElasticityTensor& t, double tol);

/// Transverse parameters from the generalized engineering constants.
/// Throws std::domain_error when a gamma or shear denominator collapses.
SymmetryClass engineering_to_transverse(const EngineeringConstants& ec);

/// C'_ijkl = Q_ip Q_jq Q_kr Q_ls C_pqrs.
ElasticityTensor rotate(const ElasticityTensor& t, const Mat3& q);

}  // namespace elast
