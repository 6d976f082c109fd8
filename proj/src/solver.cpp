#include "elast/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "elast/rng.hpp"

namespace elast {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::smallest: return "smallest";
        case Branch::middle: return "middle";
        case Branch::largest: return "largest";
    }
    return "smallest";
}

void SolverConfig::validate() const {
    if (max_iter <= 0 || tol <= 0.0 || n_starts <= 0 || dedup_tol <= 0.0)
        throw std::invalid_argument("solver config values must be positive");
    if (grid_n < 16) throw std::invalid_argument("grid_n must be at least 16");
}

double residual(const ElasticityTensor& t, double theta, const Vec3& x, const Vec3& y) {
    const Vec3 ax = mat_vec(a_matrix(t, y), x);
    const Vec3 by = mat_vec(b_matrix(t, x), y);
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        r = std::max(r, std::fabs(ax[i] - theta * x[i]));
        r = std::max(r, std::fabs(by[i] - theta * y[i]));
    }
    return r / std::max(1.0, std::fabs(theta));
}

namespace {

/// Eigenvector of the given rank, sign-aligned with `prev`. Zero overlap
/// resolves to first-nonzero-component-positive so ties cannot oscillate.
Vec3 branch_vector(const Mat3& m, Branch branch, const Vec3& prev) {
    const Eigen3 e = eigen3(m);
    Vec3 v = e.vectors[static_cast<int>(branch)];
    const double d = dot(v, prev);
    if (std::fabs(d) > 1e-14) {
        if (d < 0.0) v = scaled(v, -1.0);
    } else {
        for (int i = 0; i < 3; ++i) {
            if (std::fabs(v[i]) > 1e-14) {
                if (v[i] < 0.0) v = scaled(v, -1.0);
                break;
            }
        }
    }
    return v;
}

Branch classify_rank(const Mat3& a, double theta) {
    const Eigen3 e = eigen3(a);
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (std::fabs(e.values[k] - theta) < std::fabs(e.values[best] - theta)) best = k;
    return static_cast<Branch>(best);
}

void check_finite(double v) {
    if (!std::isfinite(v)) throw std::runtime_error("solver: contraction produced NaN/Inf");
}

}  // namespace

MEigenpair alternate(const ElasticityTensor& t, const Vec3& x0, const Vec3& y0, Branch branch,
                     const SolverConfig& cfg) {
    cfg.validate();
    MEigenpair p;
    p.branch = branch;
    p.x = normalized(x0);
    p.y = normalized(y0);
    p.theta = f_quadform(t, p.x, p.y);
    check_finite(p.theta);
    p.residual = residual(t, p.theta, p.x, p.y);
    for (int it = 0; it < cfg.max_iter && p.residual >= cfg.tol; ++it) {
        p.x = branch_vector(a_matrix(t, p.y), branch, p.x);
        p.y = branch_vector(b_matrix(t, p.x), branch, p.y);
        p.theta = f_quadform(t, p.x, p.y);
        check_finite(p.theta);
        p.residual = residual(t, p.theta, p.x, p.y);
        p.iterations = it + 1;
    }
    p.converged = p.residual < cfg.tol;
    return p;
}

namespace {

/// Derivative of (A(y)x)_i with respect to y_m: two slot contractions.
Mat3 d_axy_dy(const ElasticityTensor& t, const Vec3& x, const Vec3& y) {
    Mat3 g{};
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 3; ++m) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) s += t.component(i, m, k, l) * x[k] * y[l];
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) s += t.component(i, j, k, m) * y[j] * x[k];
            g[i][m] = s;
        }
    return g;
}

/// Derivative of (B(x)y)_l with respect to x_m.
Mat3 d_bxy_dx(const ElasticityTensor& t, const Vec3& x, const Vec3& y) {
    Mat3 g{};
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) s += t.component(m, j, k, l) * y[j] * x[k];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += t.component(i, j, m, l) * x[i] * y[j];
            g[l][m] = s;
        }
    return g;
}

double stationarity_norm(const ElasticityTensor& t, const Vec3& x, const Vec3& y, double lam,
                         double mu) {
    const Vec3 ax = mat_vec(a_matrix(t, y), x);
    const Vec3 by = mat_vec(b_matrix(t, x), y);
    double n2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double fx = ax[i] - lam * x[i];
        const double fy = by[i] - mu * y[i];
        n2 += fx * fx + fy * fy;
    }
    const double cx = 0.5 * (dot(x, x) - 1.0);
    const double cy = 0.5 * (dot(y, y) - 1.0);
    return std::sqrt(n2 + cx * cx + cy * cy);
}

}  // namespace

MEigenpair newton_eigenpair(const ElasticityTensor& t, const Vec3& x0, const Vec3& y0,
                            const SolverConfig& cfg) {
    cfg.validate();
    MEigenpair p;
    Vec3 x = normalized(x0), y = normalized(y0);
    double lam = f_quadform(t, x, y);
    double mu = lam;
    check_finite(lam);

    const int max_newton = 80;
    for (int it = 0; it < max_newton; ++it) {
        const Mat3 A = a_matrix(t, y);
        const Mat3 B = b_matrix(t, x);
        const Vec3 ax = mat_vec(A, x);
        const Vec3 by = mat_vec(B, y);
        const double theta = f_quadform(t, x, y);
        const double res = residual(t, theta, x, y);
        p.iterations = it;
        if (res < cfg.tol && std::fabs(lam - mu) < 1e-9 * std::max(1.0, std::fabs(theta))) {
            p.theta = theta;
            p.x = normalized(x);
            p.y = normalized(y);
            p.residual = residual(t, p.theta, p.x, p.y);
            p.converged = p.residual < cfg.tol;
            p.branch = classify_rank(A, theta);
            return p;
        }

        std::vector<double> J(64, 0.0), rhs(8, 0.0);
        const Mat3 gx = d_axy_dy(t, x, y);
        const Mat3 gy = d_bxy_dx(t, x, y);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                J[i * 8 + j] = A[i][j] - (i == j ? lam : 0.0);
                J[i * 8 + 3 + j] = gx[i][j];
                J[(3 + i) * 8 + j] = gy[i][j];
                J[(3 + i) * 8 + 3 + j] = B[i][j] - (i == j ? mu : 0.0);
            }
            J[i * 8 + 6] = -x[i];
            J[(3 + i) * 8 + 7] = -y[i];
            J[6 * 8 + i] = x[i];
            J[7 * 8 + 3 + i] = y[i];
            rhs[i] = -(ax[i] - lam * x[i]);
            rhs[3 + i] = -(by[i] - mu * y[i]);
        }
        rhs[6] = -0.5 * (dot(x, x) - 1.0);
        rhs[7] = -0.5 * (dot(y, y) - 1.0);

        if (!solve_dense(J, rhs, 8)) break;

        const double n0 = stationarity_norm(t, x, y, lam, mu);
        double step = 1.0;
        Vec3 xn, yn;
        double ln = lam, mn = mu;
        for (int back = 0; back < 30; ++back) {
            for (int i = 0; i < 3; ++i) {
                xn[i] = x[i] + step * rhs[i];
                yn[i] = y[i] + step * rhs[3 + i];
            }
            ln = lam + step * rhs[6];
            mn = mu + step * rhs[7];
            if (stationarity_norm(t, xn, yn, ln, mn) < (1.0 - 0.25 * step) * n0 || step < 1e-4)
                break;
            step *= 0.5;
        }
        x = xn;
        y = yn;
        lam = ln;
        mu = mn;
        if (norm(x) < 1e-8 || norm(y) < 1e-8) break;
    }

    p.x = normalized(x);
    p.y = normalized(y);
    p.theta = f_quadform(t, p.x, p.y);
    p.residual = residual(t, p.theta, p.x, p.y);
    p.converged = p.residual < cfg.tol &&
                  std::fabs(lam - mu) < 1e-9 * std::max(1.0, std::fabs(p.theta));
    p.branch = classify_rank(a_matrix(t, p.y), p.theta);
    return p;
}

namespace {

bool same_theta(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

bool same_direction(const Vec3& a, const Vec3& b) {
    return std::min(norm({a[0] - b[0], a[1] - b[1], a[2] - b[2]}),
                    norm({a[0] + b[0], a[1] + b[1], a[2] + b[2]})) < 1e-6;
}

void merge_pair(std::vector<MEigenpair>& groups, const MEigenpair& p, double dedup_tol) {
    for (MEigenpair& g : groups) {
        if (same_theta(g.theta, p.theta, dedup_tol)) {
            const bool fresh = !same_direction(g.x, p.x) || !same_direction(g.y, p.y);
            if (fresh) g.multiplicity += 1;
            if (p.residual < g.residual) {
                const int mult = g.multiplicity;
                g = p;
                g.multiplicity = mult;
            }
            return;
        }
    }
    groups.push_back(p);
}

}  // namespace

std::vector<MEigenpair> m_spectrum(const ElasticityTensor& t, const SolverConfig& cfg) {
    cfg.validate();
    const CounterRng rng(cfg.seed);
    std::vector<MEigenpair> groups;
    for (int s = 0; s < cfg.n_starts; ++s) {
        const Vec3 x0 = rng.unit_vec3(2 * s);
        const Vec3 y0 = rng.unit_vec3(2 * s + 1);
        for (Branch br : {Branch::smallest, Branch::middle, Branch::largest}) {
            const MEigenpair p = alternate(t, x0, y0, br, cfg);
            if (p.converged) merge_pair(groups, p, cfg.dedup_tol);
        }
        // The alternating map repels saddle-type pairs whose coupling exceeds
        // the local spectral gap; a Newton correction from the raw start
        // reaches those as well.
        const MEigenpair q = newton_eigenpair(t, x0, y0, cfg);
        if (q.converged) merge_pair(groups, q, cfg.dedup_tol);
    }
    std::sort(groups.begin(), groups.end(),
              [](const MEigenpair& a, const MEigenpair& b) { return a.theta < b.theta; });
    return groups;
}

namespace {

Vec3 z_branch_step(const ElasticityTensor& t, const Vec3& x, Branch branch) {
    return branch_vector(a_matrix(t, x), branch, x);
}

ZEigenpair to_z(const MEigenpair& p) {
    ZEigenpair z;
    z.eta = p.theta;
    z.x = p.x;
    z.residual = p.residual;
    z.iterations = p.iterations;
    z.branch = p.branch;
    z.converged = p.converged;
    z.multiplicity = p.multiplicity;
    return z;
}

}  // namespace

std::vector<ZEigenpair> z_spectrum(const ElasticityTensor& t, const SolverConfig& cfg) {
    cfg.validate();
    const CounterRng rng(cfg.seed ^ 0x5A5A5A5A5A5A5A5AULL);
    std::vector<MEigenpair> groups;
    for (int s = 0; s < cfg.n_starts; ++s) {
        Vec3 x0 = rng.unit_vec3(s);
        for (Branch br : {Branch::smallest, Branch::middle, Branch::largest}) {
            MEigenpair p;
            p.branch = br;
            Vec3 x = x0;
            double eta = f_quadform(t, x, x);
            double res = residual(t, eta, x, x);
            int it = 0;
            for (; it < cfg.max_iter && res >= cfg.tol; ++it) {
                x = z_branch_step(t, x, br);
                eta = f_quadform(t, x, x);
                check_finite(eta);
                res = residual(t, eta, x, x);
            }
            p.theta = eta;
            p.x = p.y = x;
            p.residual = res;
            p.iterations = it;
            p.converged = res < cfg.tol;
            if (p.converged) merge_pair(groups, p, cfg.dedup_tol);
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const MEigenpair& a, const MEigenpair& b) { return a.theta < b.theta; });
    std::vector<ZEigenpair> out;
    out.reserve(groups.size());
    for (const MEigenpair& g : groups) out.push_back(to_z(g));
    return out;
}

OracleResult oracle_min_f(const ElasticityTensor& t, const SolverConfig& cfg) {
    cfg.validate();
    const int n = cfg.grid_n;
    const double pi = 3.14159265358979323846;
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double incl = pi * (i + 0.5) / n;
        const double si = std::sin(incl), ci = std::cos(incl);
        for (int j = 0; j < n; ++j) {
            const double az = pi * j / n;  // half turn; f is even in each vector
            pts.push_back({si * std::cos(az), si * std::sin(az), ci});
        }
    }
    OracleResult best;
    best.min_value = std::numeric_limits<double>::infinity();
    for (const Vec3& y : pts) {
        const Mat3 A = a_matrix(t, y);
        for (const Vec3& x : pts) {
            const double v = quad_form(A, x);
            if (v < best.min_value) {
                best.min_value = v;
                best.argmin_x = x;
                best.argmin_y = y;
            }
        }
    }
    return best;
}

}  // namespace elast
