// wigner.cpp — Fock-basis Wigner evaluation via the scaled Laguerre ladder
//
// W(x,p) = (1/2pi) sum_k sum_m w_k Re[rho_{m,m+k} e^{+ik theta}] G_{m,k}(s),
// s = x^2 + p^2, theta = atan2(p, x), w_0 = 1, w_{k>0} = 2, and
// G_{m,k}(s) = (-1)^m sqrt(m!/(m+k)!) s^{k/2} L_m^{(k)}(s) e^{-s/2}.
// Every G is bounded by 1 (it is a displaced-Fock overlap), so the upward
// recurrence in m is safe at any cutoff in play here.

#include "recoil/wigner.hpp"

#include <cmath>

#include "recoil/errors.hpp"
#include "recoil/kernels.hpp"
#include "recoil/parallel.hpp"

namespace recoil {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void wigner_fill(const MatrixC& rho, const std::vector<double>& xs,
                 const std::vector<double>& ps, MatrixR& values, int threads) {
    const int dim = static_cast<int>(rho.rows());
    const int nx = static_cast<int>(xs.size());
    const int np = static_cast<int>(ps.size());

    // per-diagonal data
    std::vector<std::vector<double>> dre(dim), dim_(dim);
    std::vector<char> active(dim, 0);
    for (int k = 0; k < dim; ++k) {
        dre[k].resize(dim - k);
        dim_[k].resize(dim - k);
        double amax = 0.0;
        for (int m = 0; m + k < dim; ++m) {
            const Complex v = rho(m, m + k);
            dre[k][m] = v.real();
            dim_[k][m] = v.imag();
            amax = std::max(amax, std::abs(v));
        }
        active[k] = amax > 1e-16 ? 1 : 0;
    }
    // recurrence coefficients r1, r2 per k
    std::vector<std::vector<double>> r1(dim), r2(dim);
    for (int k = 0; k < dim; ++k) {
        const int mlen = dim - k;
        r1[k].resize(mlen);
        r2[k].resize(mlen);
        for (int m = 0; m < mlen; ++m) {
            const double den = std::sqrt(double(m + 1) * double(m + k + 1));
            r1[k][m] = 1.0 / den;
            r2[k][m] = std::sqrt(double(m) * double(m + k)) / den;
        }
    }

    const auto& be = kernels::active();
    parallel_for(np, threads, [&](int ip) {
        const double p = ps[ip];
        std::vector<double> s(nx), g0(nx), ck(nx), sk(nx), c1(nx), s1(nx), accA(nx),
            accB(nx), row(nx, 0.0);
        for (int i = 0; i < nx; ++i) {
            s[i] = xs[i] * xs[i] + p * p;
            g0[i] = std::exp(-0.5 * s[i]);
            const double r = std::sqrt(s[i]);
            c1[i] = r > 0 ? xs[i] / r : 1.0;
            s1[i] = r > 0 ? p / r : 0.0;
            ck[i] = 1.0;
            sk[i] = 0.0;
        }
        for (int k = 0; k < dim; ++k) {
            if (k > 0) {
                // g0 <- g0 * sqrt(s/k); phase advance by theta
                const double inv = 1.0 / std::sqrt(double(k));
                for (int i = 0; i < nx; ++i) {
                    g0[i] *= std::sqrt(s[i]) * inv;
                    const double c = ck[i] * c1[i] - sk[i] * s1[i];
                    const double sn = sk[i] * c1[i] + ck[i] * s1[i];
                    ck[i] = c;
                    sk[i] = sn;
                }
            }
            if (!active[k]) continue;
            std::fill(accA.begin(), accA.end(), 0.0);
            std::fill(accB.begin(), accB.end(), 0.0);
            be.wigner_diag(nx, dim - k, k, s.data(), g0.data(), r1[k].data(),
                           r2[k].data(), dre[k].data(), dim_[k].data(), accA.data(),
                           accB.data());
            if (k == 0) {
                for (int i = 0; i < nx; ++i) row[i] += accA[i];
            } else {
                for (int i = 0; i < nx; ++i)
                    row[i] += 2.0 * (ck[i] * accA[i] - sk[i] * accB[i]);
            }
        }
        for (int i = 0; i < nx; ++i) values(i, ip) = row[i] / kTwoPi;
    });
}

double boundary_max_abs(const MatrixR& v) {
    double m = 0.0;
    const auto nx = v.rows(), np = v.cols();
    for (Eigen::Index i = 0; i < nx; ++i) {
        m = std::max(m, std::abs(v(i, 0)));
        m = std::max(m, std::abs(v(i, np - 1)));
    }
    for (Eigen::Index j = 0; j < np; ++j) {
        m = std::max(m, std::abs(v(0, j)));
        m = std::max(m, std::abs(v(nx - 1, j)));
    }
    return m;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return v;
}

}  // namespace

WignerGrid wigner(const DensityMatrix& rho_m, const WignerGridSpec& spec,
                  bool auto_widen, int threads) {
    if (rho_m.space.n_subsystems() != 1)
        throw InvalidArgument("wigner: expected a single-mode reduced state");
    if (spec.nx < 2 || spec.np < 2 || spec.x_max <= spec.x_min || spec.p_max <= spec.p_min)
        throw InvalidArgument("wigner: malformed grid spec");

    WignerGridSpec sp = spec;
    WignerGrid grid;
    for (int attempt = 0;; ++attempt) {
        grid.x = linspace(sp.x_min, sp.x_max, sp.nx);
        grid.p = linspace(sp.p_min, sp.p_max, sp.np);
        grid.values.resize(sp.nx, sp.np);
        wigner_fill(rho_m.mat, grid.x, grid.p, grid.values, threads);
        grid.boundary_max = boundary_max_abs(grid.values);
        if (!auto_widen || grid.boundary_max <= 1e-4 || attempt >= 4) break;
        // widen by 1.4x, scaling point counts to keep the cell size
        auto grow = [](double lo, double hi) {
            const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo) * 1.4;
            return std::pair<double, double>(c - h, c + h);
        };
        auto [xl, xh] = grow(sp.x_min, sp.x_max);
        auto [pl, ph] = grow(sp.p_min, sp.p_max);
        sp.x_min = xl; sp.x_max = xh;
        sp.p_min = pl; sp.p_max = ph;
        sp.nx = 2 * int(std::lround(0.7 * sp.nx)) + 1;
        sp.np = 2 * int(std::lround(0.7 * sp.np)) + 1;
        grid.extent_widened = true;
    }
    return grid;
}

double integrated_negativity(const WignerGrid& grid) {
    const double cell = grid.dx() * grid.dp();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < grid.values.rows(); ++i)
        for (Eigen::Index j = 0; j < grid.values.cols(); ++j) {
            const double w = grid.values(i, j);
            if (w < 0.0) acc += w;
        }
    return acc * cell;
}

double grid_mass(const WignerGrid& grid) {
    return grid.values.sum() * grid.dx() * grid.dp();
}

}  // namespace recoil
