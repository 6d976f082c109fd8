#include "elast/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elast {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

double mean(std::initializer_list<double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

}  // namespace

const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::isotropic: return "isotropic";
        case Symmetry::cubic: return "cubic";
        case Symmetry::transverse_isotropic: return "transverse_isotropic";
        case Symmetry::tetragonal: return "tetragonal";
        case Symmetry::orthotropic: return "orthotropic";
        case Symmetry::general: return "general";
    }
    return "general";
}

Symmetry symmetry_from_name(const std::string& name) {
    if (name == "isotropic") return Symmetry::isotropic;
    if (name == "cubic") return Symmetry::cubic;
    if (name == "transverse_isotropic") return Symmetry::transverse_isotropic;
    if (name == "tetragonal") return Symmetry::tetragonal;
    if (name == "orthotropic") return Symmetry::orthotropic;
    if (name == "general") return Symmetry::general;
    throw std::invalid_argument("unknown symmetry tag: " + name);
}

SymmetryClass SymmetryClass::isotropic(double K, double G) {
    SymmetryClass sc{Symmetry::isotropic, {K, G}};
    sc.validate();
    return sc;
}

SymmetryClass SymmetryClass::isotropic_lame(double lambda, double mu) {
    return isotropic(lambda + 2.0 * mu / 3.0, mu);
}

SymmetryClass SymmetryClass::cubic(double b1, double b2, double b3) {
    SymmetryClass sc{Symmetry::cubic, {b1, b2, b3}};
    sc.validate();
    return sc;
}

SymmetryClass SymmetryClass::transverse(double a1, double a2, double a3, double a4, double a5) {
    SymmetryClass sc{Symmetry::transverse_isotropic, {a1, a2, a3, a4, a5}};
    sc.validate();
    return sc;
}

SymmetryClass SymmetryClass::tetragonal(double a1, double a2, double a3, double a4, double a5,
                                        double a6) {
    SymmetryClass sc{Symmetry::tetragonal, {a1, a2, a3, a4, a5, a6}};
    sc.validate();
    return sc;
}

SymmetryClass SymmetryClass::orthotropic(const std::array<double, 9>& d) {
    SymmetryClass sc{Symmetry::orthotropic, {d.begin(), d.end()}};
    sc.validate();
    return sc;
}

SymmetryClass SymmetryClass::general() { return SymmetryClass{Symmetry::general, {}}; }

double SymmetryClass::bulk() const {
    require(tag == Symmetry::isotropic, "bulk() needs the isotropic tag");
    return params[0];
}

double SymmetryClass::shear() const {
    require(tag == Symmetry::isotropic, "shear() needs the isotropic tag");
    return params[1];
}

double SymmetryClass::lame_lambda() const { return bulk() - 2.0 * shear() / 3.0; }

double SymmetryClass::scale() const {
    double s = 1.0;
    for (double p : params) s = std::max(s, std::fabs(p));
    return s;
}

void SymmetryClass::validate() const {
    std::size_t want = 0;
    switch (tag) {
        case Symmetry::isotropic: want = 2; break;
        case Symmetry::cubic: want = 3; break;
        case Symmetry::transverse_isotropic: want = 5; break;
        case Symmetry::tetragonal: want = 6; break;
        case Symmetry::orthotropic: want = 9; break;
        case Symmetry::general: want = 0; break;
    }
    require(params.size() == want, "wrong parameter count for symmetry class");
    require(all_finite(params), "symmetry class parameters must be finite");
}

ElasticityTensor from_class(const SymmetryClass& sc) {
    sc.validate();
    ElasticityTensor t;
    const auto& p = sc.params;
    switch (sc.tag) {
        case Symmetry::isotropic: {
            const double K = p[0], G = p[1];
            const double lambda = K - 2.0 * G / 3.0;
            for (int a = 0; a < 3; ++a) {
                t.set_voigt(a, a, lambda + 2.0 * G);
                t.set_voigt(a + 3, a + 3, G);
            }
            t.set_voigt(0, 1, lambda);
            t.set_voigt(0, 2, lambda);
            t.set_voigt(1, 2, lambda);
            break;
        }
        case Symmetry::cubic: {
            for (int a = 0; a < 3; ++a) {
                t.set_voigt(a, a, p[0]);
                t.set_voigt(a + 3, a + 3, p[1]);
            }
            t.set_voigt(0, 1, p[2]);
            t.set_voigt(0, 2, p[2]);
            t.set_voigt(1, 2, p[2]);
            break;
        }
        case Symmetry::transverse_isotropic:
        case Symmetry::tetragonal: {
            const double c12 = sc.tag == Symmetry::tetragonal ? p[5] : p[0] - 2.0 * p[3];
            t.set_voigt(0, 0, p[0]);
            t.set_voigt(1, 1, p[0]);
            t.set_voigt(2, 2, p[1]);
            t.set_voigt(3, 3, p[2]);
            t.set_voigt(4, 4, p[2]);
            t.set_voigt(5, 5, p[3]);
            t.set_voigt(0, 2, p[4]);
            t.set_voigt(1, 2, p[4]);
            t.set_voigt(0, 1, c12);
            break;
        }
        case Symmetry::orthotropic: {
            for (int a = 0; a < 6; ++a) t.set_voigt(a, a, p[a]);
            t.set_voigt(1, 2, p[6]);
            t.set_voigt(0, 2, p[7]);
            t.set_voigt(0, 1, p[8]);
            break;
        }
        case Symmetry::general:
            throw std::invalid_argument("from_class: general tag has no template");
    }
    return t;
}

VoigtMatrix to_voigt(const ElasticityTensor& t) {
    VoigtMatrix v;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) v.m[a][b] = t.voigt(a, b);
    return v;
}

ElasticityTensor from_voigt(const VoigtMatrix& v) {
    double scale = 0.0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            require(std::isfinite(v.m[a][b]), "from_voigt: non-finite entry");
            scale = std::max(scale, std::fabs(v.m[a][b]));
        }
    double worst = 0.0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            worst = std::max(worst, std::fabs(v.m[a][b] - v.m[b][a]));
    if (worst > 1e-9 * std::max(scale, 1e-300))
        throw std::invalid_argument("from_voigt: matrix asymmetric beyond tolerance");
    ElasticityTensor t;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) t.set_voigt(a, b, 0.5 * (v.m[a][b] + v.m[b][a]));
    return t;
}

MandelMatrix to_mandel(const ElasticityTensor& t) {
    MandelMatrix m;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            double f = 1.0;
            if (a >= 3) f *= kSqrt2;
            if (b >= 3) f *= kSqrt2;
            m.m[a][b] = f * t.voigt(a, b);
        }
    // shear-shear entries are exactly 2x, not sqrt(2)^2
    for (int a = 3; a < 6; ++a)
        for (int b = 3; b < 6; ++b) m.m[a][b] = 2.0 * t.voigt(a, b);
    return m;
}

double contract4(const ElasticityTensor& t, const Vec3& w, const Vec3& x, const Vec3& y,
                 const Vec3& z) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    s += t.component(i, j, k, l) * w[i] * x[j] * y[k] * z[l];
    return s;
}

double f_quadform(const ElasticityTensor& t, const Vec3& x, const Vec3& y) {
    return quad_form(a_matrix(t, y), x);
}

Mat3 a_matrix(const ElasticityTensor& t, const Vec3& y) {
    Mat3 a{};
    for (int i = 0; i < 3; ++i)
        for (int k = i; k < 3; ++k) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j) {
                s += t.component(i, j, k, j) * y[j] * y[j];
                for (int l = j + 1; l < 3; ++l)
                    s += (t.component(i, j, k, l) + t.component(i, l, k, j)) * y[j] * y[l];
            }
            a[i][k] = a[k][i] = s;
        }
    return a;
}

Mat3 b_matrix(const ElasticityTensor& t, const Vec3& x) {
    Mat3 b{};
    for (int j = 0; j < 3; ++j)
        for (int l = j; l < 3; ++l) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i) {
                s += t.component(i, j, i, l) * x[i] * x[i];
                for (int k = i + 1; k < 3; ++k)
                    s += (t.component(i, j, k, l) + t.component(k, j, i, l)) * x[i] * x[k];
            }
            b[j][l] = b[l][j] = s;
        }
    return b;
}

namespace {

struct PatternCheck {
    const VoigtMatrix& v;
    double tol_abs;

    bool zeros_orthotropic() const {
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b)
                if (std::fabs(v.m[a][b]) > tol_abs) return false;
        return std::fabs(v.m[3][4]) <= tol_abs && std::fabs(v.m[3][5]) <= tol_abs &&
               std::fabs(v.m[4][5]) <= tol_abs;
    }

    bool equal(double a, double b) const { return std::fabs(a - b) <= tol_abs; }

    bool group_equal(std::initializer_list<double> xs) const {
        double lo = *xs.begin(), hi = lo;
        for (double x : xs) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return hi - lo <= tol_abs;
    }
};

}  // namespace

SymmetryClass detect_class(const ElasticityTensor& t, double tol) {
    require(tol > 0.0, "detect_class: tol must be positive");
    const VoigtMatrix v = to_voigt(t);
    const double tol_abs = tol * std::max(t.scale(), 1e-300);
    const PatternCheck pc{v, tol_abs};

    if (!pc.zeros_orthotropic()) return SymmetryClass::general();

    const bool cubic_like = pc.group_equal({v.m[0][0], v.m[1][1], v.m[2][2]}) &&
                            pc.group_equal({v.m[3][3], v.m[4][4], v.m[5][5]}) &&
                            pc.group_equal({v.m[0][1], v.m[0][2], v.m[1][2]});
    if (cubic_like) {
        const double diag = mean({v.m[0][0], v.m[1][1], v.m[2][2]});
        const double shear = mean({v.m[3][3], v.m[4][4], v.m[5][5]});
        const double off = mean({v.m[0][1], v.m[0][2], v.m[1][2]});
        if (pc.equal(off, diag - 2.0 * shear))
            return SymmetryClass::isotropic(diag - 4.0 * shear / 3.0, shear);
        return SymmetryClass::cubic(diag, shear, off);
    }

    const bool tetra_like = pc.equal(v.m[0][0], v.m[1][1]) && pc.equal(v.m[3][3], v.m[4][4]) &&
                            pc.equal(v.m[0][2], v.m[1][2]);
    if (tetra_like) {
        const double a1 = mean({v.m[0][0], v.m[1][1]});
        const double a3 = mean({v.m[3][3], v.m[4][4]});
        const double a5 = mean({v.m[0][2], v.m[1][2]});
        if (pc.equal(v.m[0][1], a1 - 2.0 * v.m[5][5]))
            return SymmetryClass::transverse(a1, v.m[2][2], a3, v.m[5][5], a5);
        return SymmetryClass::tetragonal(a1, v.m[2][2], a3, v.m[5][5], a5, v.m[0][1]);
    }

    return SymmetryClass::orthotropic({v.m[0][0], v.m[1][1], v.m[2][2], v.m[3][3], v.m[4][4],
                                       v.m[5][5], v.m[1][2], v.m[0][2], v.m[0][1]});
}

SymmetryClass engineering_to_transverse(const EngineeringConstants& ec) {
    const double gamma_den = 1.0 - ec.nu_p * ec.nu_p - 2.0 * ec.nu_tp * ec.nu_pt -
                             2.0 * ec.nu_p * ec.nu_pt * ec.nu_tp;
    const double scale = std::max({1.0, std::fabs(ec.nu_p), std::fabs(ec.nu_tp),
                                   std::fabs(ec.nu_pt)});
    if (std::fabs(gamma_den) < 1e-12 * scale)
        throw std::domain_error("engineering_to_transverse: gamma denominator vanishes");
    if (std::fabs(1.0 + ec.nu_p) < 1e-12 * scale)
        throw std::domain_error("engineering_to_transverse: in-plane shear denominator vanishes");
    const double gamma = 1.0 / gamma_den;
    const double a1 = ec.ep * (1.0 - ec.nu_pt * ec.nu_tp) * gamma;
    const double a2 = ec.et * (1.0 - ec.nu_p * ec.nu_p) * gamma;
    const double a3 = ec.mu_t;
    const double a4 = ec.ep / (2.0 * (1.0 + ec.nu_p));
    const double a5 = ec.ep * (ec.nu_tp + ec.nu_p * ec.nu_tp) * gamma;
    return SymmetryClass::transverse(a1, a2, a3, a4, a5);
}

ElasticityTensor rotate(const ElasticityTensor& t, const Mat3& q) {
    ElasticityTensor out;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            static constexpr int first[6] = {0, 1, 2, 1, 0, 0};
            static constexpr int second[6] = {0, 1, 2, 2, 2, 1};
            const int i = first[a], j = second[a], k = first[b], l = second[b];
            double s = 0.0;
            for (int p = 0; p < 3; ++p)
                for (int qq = 0; qq < 3; ++qq)
                    for (int r = 0; r < 3; ++r)
                        for (int ss = 0; ss < 3; ++ss)
                            s += q[i][p] * q[j][qq] * q[k][r] * q[l][ss] *
                                 t.component(p, qq, r, ss);
            out.set_voigt(a, b, s);
        }
    return out;
}

}  // namespace elast
