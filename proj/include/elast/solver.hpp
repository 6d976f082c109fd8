#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elast/tensor.hpp"

namespace elast {

enum class Branch { smallest, middle, largest };

const char* branch_name(Branch b);

struct SolverConfig {
    int max_iter = 500;
    double tol = 1e-12;        // relative residual target
    int n_starts = 200;
    std::uint64_t seed = 1;
    int grid_n = 64;           // oracle resolution per spherical angle
    double dedup_tol = 1e-9;   // relative, for merging equal eigenvalues

    void validate() const;  // throws std::invalid_argument
};

struct MEigenpair {
    double theta = 0.0;
    Vec3 x{};
    Vec3 y{};
    double residual = 0.0;
    int iterations = 0;
    Branch branch = Branch::smallest;
    bool converged = false;
    int multiplicity = 1;  // distinct eigenvector families merged under one theta
};

struct ZEigenpair {
    double eta = 0.0;
    Vec3 x{};
    double residual = 0.0;
    int iterations = 0;
    Branch branch = Branch::smallest;
    bool converged = false;
    int multiplicity = 1;
};

/// max(|A(y)x - theta x|_inf, |B(x)y - theta y|_inf) / max(1, |theta|).
double residual(const ElasticityTensor& t, double theta, const Vec3& x, const Vec3& y);

/// Alternating eigenvector iteration: x <- branch eigenvector of A(y),
/// y <- branch eigenvector of B(x), signs aligned with the previous iterate.
/// Stops at cfg.tol or cfg.max_iter; the returned pair always carries its
/// true residual, and `converged` tells whether the target was met.
MEigenpair alternate(const ElasticityTensor& t, const Vec3& x0, const Vec3& y0, Branch branch,
                     const SolverConfig& cfg);

/// Newton correction of the stationarity system A(y)x = l x, B(x)y = m y,
/// |x| = |y| = 1, started from (x0, y0). Converges to saddle-type pairs that
/// the alternating map repels. The returned `branch` reports the rank theta
/// holds in the spectrum of A(y).
MEigenpair newton_eigenpair(const ElasticityTensor& t, const Vec3& x0, const Vec3& y0,
                            const SolverConfig& cfg);

/// Deterministic multistart spectrum: cfg.n_starts seeded sphere starts, each
/// driven through the three alternation branches plus a Newton correction,
/// converged pairs deduplicated on theta (keeping the smallest residual) and
/// sorted ascending.
std::vector<MEigenpair> m_spectrum(const ElasticityTensor& t, const SolverConfig& cfg);

/// Same machinery restricted to x = y (the rank-one eigenproblem). Every
/// returned pair satisfies the two-vector equations with y = x.
std::vector<ZEigenpair> z_spectrum(const ElasticityTensor& t, const SolverConfig& cfg);

struct OracleResult {
    double min_value = 0.0;
    Vec3 argmin_x{};
    Vec3 argmin_y{};
};

/// Brute-force minimum of f over the product of two spherical grids with
/// cfg.grid_n^2 points each (half-spheres; f is even in each argument).
OracleResult oracle_min_f(const ElasticityTensor& t, const SolverConfig& cfg);

}  // namespace elast
