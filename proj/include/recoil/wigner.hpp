// wigner.hpp — Wigner functions on phase-space grids and integrated negativity
//
// Conventions: quadratures x = v + v^dag, p = -i(v - v^dag), alpha = (x+ip)/2,
// W normalized so the grid Riemann sum of W dx dp is 1. Vacuum peaks at
// W(0,0) = 1/(2 pi).

#pragma once

#include <vector>

#include "recoil/density.hpp"

namespace recoil {

struct WignerGridSpec {
    double x_min = -8.0, x_max = 8.0;
    int nx = 201;
    double p_min = -8.0, p_max = 8.0;
    int np = 201;

    static WignerGridSpec square(double half_extent, int n = 201) {
        return {-half_extent, half_extent, n, -half_extent, half_extent, n};
    }
    // Default extent for a state kicked by eta: peaks sit at |p| = 2 eta.
    static WignerGridSpec for_eta(double eta, int n = 201) {
        return square(std::max(8.0, 2.0 * eta + 4.0), n);
    }
};

struct WignerGrid {
    std::vector<double> x;  // size nx
    std::vector<double> p;  // size np
    MatrixR values;         // nx rows, np cols
    bool extent_widened = false;
    double boundary_max = 0.0;  // max |W| on the outermost frame
    double dx() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
    double dp() const { return p.size() > 1 ? p[1] - p[0] : 0.0; }
};

// Evaluate W for a single-mode state. When auto_widen is set and boundary
// values exceed 1e-4 the extent is grown (up to 4 doublings of 1.4x) and the
// grid recomputed; the widened flag records that this happened.
WignerGrid wigner(const DensityMatrix& rho_m, const WignerGridSpec& spec = {},
                  bool auto_widen = true, int threads = 1);

// Riemann sum of W over the cells where W < 0. Always <= 0.
double integrated_negativity(const WignerGrid& grid);

// Riemann sum of W over the full grid (should be ~1 for a well-contained state).
double grid_mass(const WignerGrid& grid);

}  // namespace recoil
