#pragma once

#include <array>
#include <string>
#include <vector>

#include "elast/solver.hpp"
#include "elast/tensor.hpp"

namespace elast {

enum class Ellipticity { elliptic, not_elliptic, inconclusive };
enum class CheckMode { necessary_only, sufficient, exact, numeric };

const char* ellipticity_name(Ellipticity e);
const char* check_mode_name(CheckMode m);

/// One evaluated inequality. The margin is the signed slack: positive means
/// satisfied, and every inequality is strict, so a zero margin counts as a
/// violation. Disjunctions report the most favorable branch, named in the
/// label.
struct Condition {
    std::string label;
    double margin;

    bool satisfied() const { return margin > 0.0; }
};

struct EllipticityVerdict {
    Ellipticity status = Ellipticity::inconclusive;
    CheckMode mode = CheckMode::exact;
    std::vector<Condition> fired;

    const Condition* find(const std::string& label) const;
};

EllipticityVerdict check_isotropic(const SymmetryClass& sc);
EllipticityVerdict check_cubic(const SymmetryClass& sc);
EllipticityVerdict check_transverse(const SymmetryClass& sc);
EllipticityVerdict check_tetragonal(const SymmetryClass& sc);
EllipticityVerdict check_orthotropic_sufficient(const SymmetryClass& sc);

/// Dispatch on the class tag; general tensors go through the numeric check.
EllipticityVerdict check(const SymmetryClass& sc);
EllipticityVerdict check_tensor(const ElasticityTensor& t, const SymmetryClass& sc,
                                const SolverConfig& cfg);

struct PDVerdict {
    bool positive_definite = false;
    double min_eigenvalue = 0.0;
    std::array<double, 6> spectrum{};  // ascending
};

/// Positive definiteness via the 6x6 matrix-form eigenvalues.
PDVerdict positive_definite(const ElasticityTensor& t);

/// Grid scan of f over the sphere product, refined by a smallest-branch
/// alternation from the best cell. Elliptic / not-elliptic outside the
/// indeterminacy band of 10 * cfg.tol * max|component|.
EllipticityVerdict strong_ellipticity_numeric(const ElasticityTensor& t,
                                              const SolverConfig& cfg);

struct NumericMinimum {
    double grid_min = 0.0;
    double refined_min = 0.0;
    Vec3 grid_x{}, grid_y{};
    Vec3 refined_x{}, refined_y{};
    double band = 0.0;
    Ellipticity status = Ellipticity::inconclusive;
};

/// The full numeric-minimum record behind strong_ellipticity_numeric.
NumericMinimum numeric_minimum(const ElasticityTensor& t, const SolverConfig& cfg);

}  // namespace elast
