// detail/lindblad_rhs.hpp — shared RHS workspace for the integrators

#pragma once

#include "recoil/kernels.hpp"
#include "recoil/model.hpp"

namespace recoil::detail_lindblad {

struct RhsWork {
    MatrixC ksum;  // sum L^dag L
    explicit RhsWork(const Model& m) {
        const int d = m.space.total_dim();
        ksum = MatrixC::Zero(d, d);
        for (const auto& l : m.jumps) ksum += kernels::matmul_cn(l.mat, l.mat);
    }
};

// out = -i[H,rho] + sum L rho L^dag - (1/2){ksum, rho}, with every term
// evaluated in explicitly Hermitian form (valid for Hermitian rho, which RK
// stage combinations preserve). x, z are caller scratch of matching size.
void rhs_into(const Model& model, const RhsWork& wk, const MatrixC& rho, MatrixC& out,
              MatrixC& x, MatrixC& z);

}  // namespace recoil::detail_lindblad
