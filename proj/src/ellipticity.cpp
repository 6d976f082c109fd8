#include "elast/ellipticity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elast {

const char* ellipticity_name(Ellipticity e) {
    switch (e) {
        case Ellipticity::elliptic: return "elliptic";
        case Ellipticity::not_elliptic: return "not_elliptic";
        case Ellipticity::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

const char* check_mode_name(CheckMode m) {
    switch (m) {
        case CheckMode::necessary_only: return "necessary-only";
        case CheckMode::sufficient: return "sufficient";
        case CheckMode::exact: return "exact";
        case CheckMode::numeric: return "numeric";
    }
    return "exact";
}

const Condition* EllipticityVerdict::find(const std::string& label) const {
    for (const Condition& c : fired)
        if (c.label == label) return &c;
    return nullptr;
}

namespace {

void require_tag(const SymmetryClass& sc, Symmetry tag, const char* who) {
    if (sc.tag != tag) throw std::invalid_argument(std::string(who) + ": wrong class tag");
    sc.validate();
}

Condition positive(const std::string& label, double value) { return {label, value}; }

/// |c| < bound, margin bound - |c|.
Condition abs_below(const std::string& label, double c, double bound) {
    return {label, bound - std::fabs(c)};
}

/// Disjunction of two margins; the winning branch is recorded in the label.
Condition either(const std::string& base, const std::string& b1, double m1,
                 const std::string& b2, double m2) {
    if (m1 >= m2) return {base + "." + b1, m1};
    return {base + "." + b2, m2};
}

bool all_hold(const std::vector<Condition>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Condition& c) { return c.satisfied(); });
}

}  // namespace

EllipticityVerdict check_isotropic(const SymmetryClass& sc) {
    require_tag(sc, Symmetry::isotropic, "check_isotropic");
    const double G = sc.shear();
    const double lambda = sc.lame_lambda();
    EllipticityVerdict v;
    v.mode = CheckMode::exact;
    v.fired.push_back(positive("isotropic.mu", G));
    v.fired.push_back(positive("isotropic.lambda+2mu", lambda + 2.0 * G));
    v.status = all_hold(v.fired) ? Ellipticity::elliptic : Ellipticity::not_elliptic;
    return v;
}

EllipticityVerdict check_cubic(const SymmetryClass& sc) {
    require_tag(sc, Symmetry::cubic, "check_cubic");
    const double b1 = sc.params[0], b2 = sc.params[1], b3 = sc.params[2];
    EllipticityVerdict v;
    v.mode = CheckMode::exact;

    // exact layer: the two-constant bound on c12 + c66
    std::vector<Condition> exact = {
        positive("cubic.exact.c11", b1),
        positive("cubic.exact.c66", b2),
        abs_below("cubic.exact.|c12+c66|<c11+c66", b3 + b2, b1 + b2),
    };
    v.status = all_hold(exact) ? Ellipticity::elliptic : Ellipticity::not_elliptic;
    v.fired = exact;

    // necessary layer: the first five eigenvalue margins
    v.fired.push_back(positive("cubic.necessary.theta1", b1));
    v.fired.push_back(positive("cubic.necessary.theta2", b2));
    v.fired.push_back(positive("cubic.necessary.theta3", 0.5 * (b1 - b3)));
    v.fired.push_back(positive("cubic.necessary.theta4", 0.5 * (b1 + 2.0 * b2 + b3)));
    v.fired.push_back(positive("cubic.necessary.theta5", (b1 + 4.0 * b2 + 2.0 * b3) / 3.0));

    // sufficient layer adds the bulk-type bound; theta6's own sign is
    // recorded for transparency when its denominator allows it
    v.fired.push_back(positive("cubic.sufficient.c11+2c12", b1 + 2.0 * b3));
    const double den6 = 3.0 * b1 + 2.0 * b2 + 5.0 * b3;
    if (std::fabs(den6) >= 1e-12 * sc.scale())
        v.fired.push_back(positive("cubic.theta6",
                                   (b1 * b1 + 2.0 * b1 * b2 + b1 * b3 - 2.0 * b3 * b3) / den6));
    return v;
}

EllipticityVerdict check_transverse(const SymmetryClass& sc) {
    require_tag(sc, Symmetry::transverse_isotropic, "check_transverse");
    const double a1 = sc.params[0], a2 = sc.params[1], a3 = sc.params[2], a4 = sc.params[3],
                 a5 = sc.params[4];
    const double root12 = std::sqrt(std::max(a1 * a2, 0.0));
    const double T = 2.0 * a3 + a5;

    EllipticityVerdict v;
    v.mode = CheckMode::exact;
    v.fired.push_back(positive("transverse.c11", a1));
    v.fired.push_back(positive("transverse.c33", a2));
    v.fired.push_back(positive("transverse.c55", a3));
    v.fired.push_back(positive("transverse.c11-c12", 2.0 * a4));
    v.fired.push_back(abs_below("transverse.|c13|<sqrt(c11*c33)", a5, root12));
    v.fired.push_back(either("transverse.axial-shear", "|2c55+c13|<sqrt(c11*c33)",
                             root12 - std::fabs(T), "2c55+c13>(c11+c33)/2",
                             T - 0.5 * (a1 + a2)));
    v.status = all_hold(v.fired) ? Ellipticity::elliptic : Ellipticity::not_elliptic;
    // derived cross-reference bound, not part of the decision
    v.fired.push_back(abs_below("transverse.derived.|c13+c55|<c55+sqrt(c11*c33)", a5 + a3,
                                a3 + root12));
    return v;
}

EllipticityVerdict check_tetragonal(const SymmetryClass& sc) {
    require_tag(sc, Symmetry::tetragonal, "check_tetragonal");
    const double a1 = sc.params[0], a2 = sc.params[1], a3 = sc.params[2], a4 = sc.params[3],
                 a5 = sc.params[4], a6 = sc.params[5];
    const double zeta = 0.5 * (a6 + 2.0 * a4 + a1);  // theta7
    const double T = 2.0 * a3 + a5;
    const double root12 = std::sqrt(std::max(a1 * a2, 0.0));
    const double root_z2 = std::sqrt(std::max(zeta * a2, 0.0));

    EllipticityVerdict v;
    v.mode = CheckMode::exact;
    v.fired.push_back(positive("tetragonal.c11", a1));
    v.fired.push_back(positive("tetragonal.c33", a2));
    v.fired.push_back(positive("tetragonal.c55", a3));
    v.fired.push_back(positive("tetragonal.c66", a4));
    v.fired.push_back(positive("tetragonal.c12+2c66+c11", 2.0 * zeta));
    v.fired.push_back(positive("tetragonal.c11-c12", a1 - a6));
    v.fired.push_back(abs_below("tetragonal.|c13|<sqrt(c11*c33)", a5, root12));
    v.fired.push_back(abs_below("tetragonal.|c13|<sqrt(zeta*c33)", a5, root_z2));
    v.fired.push_back(either("tetragonal.axial-shear-a", "|2c55+c13|<sqrt(c11*c33)",
                             root12 - std::fabs(T), "2c55+c13>(c11+c33)/2",
                             T - 0.5 * (a1 + a2)));
    v.fired.push_back(either("tetragonal.axial-shear-b", "|2c55+c13|<sqrt(zeta*c33)",
                             root_z2 - std::fabs(T), "2c55+c13>(zeta+c33)/2",
                             T - 0.5 * (zeta + a2)));
    v.status = all_hold(v.fired) ? Ellipticity::elliptic : Ellipticity::not_elliptic;

    // combined-branch translations of the axial-shear disjunction pair
    const double both_roots = std::min(root12, root_z2);
    v.fired.push_back(abs_below("tetragonal.combo.|2c55+c13|<min-roots", T, both_roots));
    v.fired.push_back(positive("tetragonal.combo.2c55+c13>(c33+max(c11,zeta))/2",
                               T - 0.5 * (a2 + std::max(a1, zeta))));
    v.fired.push_back(positive("tetragonal.combo.(zeta+c33)/2<2c55+c13<sqrt(c11*c33)",
                               std::min(T - 0.5 * (zeta + a2), root12 - T)));
    v.fired.push_back(positive("tetragonal.combo.(c11+c33)/2<2c55+c13<sqrt(zeta*c33)",
                               std::min(T - 0.5 * (a1 + a2), root_z2 - T)));

    // derived two-sided bound on c13 and the shear-coupling square bound
    v.fired.push_back(positive("tetragonal.derived.c13>-2c55-sqrt(c11*c33)",
                               a5 + 2.0 * a3 + root12));
    v.fired.push_back(positive("tetragonal.derived.c13<sqrt(c11*c33)", root12 - a5));
    const double lhs = std::fabs(a3 + a5) - a3;
    v.fired.push_back(positive("tetragonal.derived.(|c55+c13|-c55)^2<c33*min(c11,zeta)",
                               a2 * std::min(a1, zeta) - lhs * lhs));
    return v;
}

EllipticityVerdict check_orthotropic_sufficient(const SymmetryClass& sc) {
    require_tag(sc, Symmetry::orthotropic, "check_orthotropic_sufficient");
    const auto& d = sc.params;
    const double d1 = d[0], d2 = d[1], d3 = d[2], d4 = d[3], d5 = d[4], d6 = d[5], d7 = d[6],
                 d8 = d[7], d9 = d[8];
    const double r12 = std::sqrt(std::max(d1 * d2, 0.0));
    const double r23 = std::sqrt(std::max(d2 * d3, 0.0));
    const double r13 = std::sqrt(std::max(d1 * d3, 0.0));

    EllipticityVerdict v;
    v.mode = CheckMode::sufficient;

    std::vector<Condition> sufficient;
    static const char* diag_names[6] = {"c11", "c22", "c33", "c44", "c55", "c66"};
    for (int i = 0; i < 6; ++i)
        sufficient.push_back(positive(std::string("ortho.sufficient.") + diag_names[i], d[i]));
    sufficient.push_back(abs_below("ortho.sufficient.|c12|<sqrt(c11*c22)", d9, r12));
    sufficient.push_back(positive("ortho.sufficient.c12+2c66>max(c11,c22)",
                                  d9 + 2.0 * d6 - std::max(d1, d2)));
    sufficient.push_back(
        positive("ortho.sufficient.sqrt(c22*c33)>max(|c23|,|c23+2c44|)",
                 r23 - std::max(std::fabs(d7), std::fabs(d7 + 2.0 * d4))));
    sufficient.push_back(
        positive("ortho.sufficient.sqrt(c11*c33)>max(|c13|,|c13+2c55|)",
                 r13 - std::max(std::fabs(d8), std::fabs(d8 + 2.0 * d5))));

    std::vector<Condition> necessary;
    for (int i = 0; i < 6; ++i)
        necessary.push_back(positive(std::string("ortho.necessary.") + diag_names[i], d[i]));
    necessary.push_back(abs_below("ortho.necessary.|c12|<sqrt(c11*c22)", d9, r12));
    necessary.push_back(abs_below("ortho.necessary.|c23|<sqrt(c22*c33)", d7, r23));
    necessary.push_back(abs_below("ortho.necessary.|c13|<sqrt(c11*c33)", d8, r13));
    necessary.push_back(either("ortho.necessary.plane23", "|c23+2c44|<sqrt(c22*c33)",
                               r23 - std::fabs(d7 + 2.0 * d4),
                               "c23+2c44>(c22+c33)/2", d7 + 2.0 * d4 - 0.5 * (d2 + d3)));
    necessary.push_back(either("ortho.necessary.plane13", "|c13+2c55|<sqrt(c11*c33)",
                               r13 - std::fabs(d8 + 2.0 * d5),
                               "c13+2c55>(c11+c33)/2", d8 + 2.0 * d5 - 0.5 * (d1 + d3)));
    necessary.push_back(either("ortho.necessary.plane12", "|c12+2c66|<sqrt(c11*c22)",
                               r12 - std::fabs(d9 + 2.0 * d6),
                               "c12+2c66>(c11+c22)/2", d9 + 2.0 * d6 - 0.5 * (d1 + d2)));

    if (all_hold(sufficient))
        v.status = Ellipticity::elliptic;
    else if (!all_hold(necessary))
        v.status = Ellipticity::not_elliptic;
    else
        v.status = Ellipticity::inconclusive;

    v.fired = std::move(sufficient);
    v.fired.insert(v.fired.end(), necessary.begin(), necessary.end());
    return v;
}

EllipticityVerdict check(const SymmetryClass& sc) {
    switch (sc.tag) {
        case Symmetry::isotropic: return check_isotropic(sc);
        case Symmetry::cubic: return check_cubic(sc);
        case Symmetry::transverse_isotropic: return check_transverse(sc);
        case Symmetry::tetragonal: return check_tetragonal(sc);
        case Symmetry::orthotropic: return check_orthotropic_sufficient(sc);
        case Symmetry::general:
            throw std::invalid_argument("check: general class needs the numeric path");
    }
    throw std::invalid_argument("check: bad tag");
}

EllipticityVerdict check_tensor(const ElasticityTensor& t, const SymmetryClass& sc,
                                const SolverConfig& cfg) {
    if (sc.tag == Symmetry::general) return strong_ellipticity_numeric(t, cfg);
    return check(sc);
}

PDVerdict positive_definite(const ElasticityTensor& t) {
    const MandelMatrix m = to_mandel(t);
    const SymmetricEigenResult e = symmetric_eigen(m.m);
    PDVerdict v;
    for (int i = 0; i < 6; ++i) v.spectrum[i] = e.eigenvalues[i];
    v.min_eigenvalue = v.spectrum[0];
    v.positive_definite = v.min_eigenvalue > 0.0;
    return v;
}

NumericMinimum numeric_minimum(const ElasticityTensor& t, const SolverConfig& cfg) {
    cfg.validate();
    NumericMinimum nm;
    const OracleResult grid = oracle_min_f(t, cfg);
    nm.grid_min = grid.min_value;
    nm.grid_x = grid.argmin_x;
    nm.grid_y = grid.argmin_y;
    const MEigenpair refined = alternate(t, grid.argmin_x, grid.argmin_y, Branch::smallest, cfg);
    nm.refined_min = std::min(refined.theta, grid.min_value);
    nm.refined_x = refined.x;
    nm.refined_y = refined.y;
    nm.band = 10.0 * cfg.tol * std::max(t.scale(), 1e-300);
    if (nm.refined_min > nm.band)
        nm.status = Ellipticity::elliptic;
    else if (nm.refined_min < -nm.band)
        nm.status = Ellipticity::not_elliptic;
    else
        nm.status = Ellipticity::inconclusive;
    return nm;
}

EllipticityVerdict strong_ellipticity_numeric(const ElasticityTensor& t,
                                              const SolverConfig& cfg) {
    const NumericMinimum nm = numeric_minimum(t, cfg);
    EllipticityVerdict v;
    v.mode = CheckMode::numeric;
    v.status = nm.status;
    v.fired.push_back({"numeric.grid_min", nm.grid_min});
    v.fired.push_back({"numeric.refined_min", nm.refined_min});
    v.fired.push_back({"numeric.band", nm.band});
    return v;
}

}  // namespace elast
