// density.hpp — density matrices, validation, partial trace

#pragma once

#include <vector>

#include "recoil/matrix.hpp"
#include "recoil/operators.hpp"
#include "recoil/space.hpp"

namespace recoil {

struct DensityMatrix {
    SpaceDescriptor space;
    MatrixC mat;
};

struct DensityCheck {
    double trace_dev = 0.0;  // |tr - 1|
    double herm_dev = 0.0;   // max |rho - rho^dag|
    double min_eig = 0.0;
    bool ok(double herm_tol = 1e-10, double trace_tol = 1e-8, double eig_tol = 1e-8) const {
        return herm_dev <= herm_tol && trace_dev <= trace_tol && min_eig >= -eig_tol;
    }
};

DensityCheck check_density(const DensityMatrix& rho);
// Throws InvalidArgument when the invariants fail.
void require_valid(const DensityMatrix& rho, double herm_tol = 1e-10,
                   double trace_tol = 1e-8, double eig_tol = 1e-8);

// Reduced state on the kept slots (original slot order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// |psi><psi| on the given space.
DensityMatrix pure_density(const SpaceDescriptor& space, const VectorC& psi);

// Reduced density matrix of a pure state on the kept slots, contracted
// directly from the state vector.
DensityMatrix partial_trace_pure(const SpaceDescriptor& space, const VectorC& psi,
                                 const std::vector<int>& keep);

inline double expectation_real(const DensityMatrix& rho, const Operator& op) {
    return (op.mat * rho.mat).trace().real();
}

// tr(rho * diag(d)) for a diagonal observable.
inline double expectation_diag(const MatrixC& rho, const Eigen::VectorXd& d) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) acc += d(i) * rho(i, i).real();
    return acc;
}

}  // namespace recoil
