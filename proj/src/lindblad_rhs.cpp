// lindblad_rhs.cpp

#include "recoil/detail/lindblad_rhs.hpp"

#include "recoil/errors.hpp"
#include "recoil/lindblad.hpp"

namespace recoil {

namespace detail_lindblad {

void rhs_into(const Model& model, const RhsWork& wk, const MatrixC& rho, MatrixC& out,
              MatrixC& x, MatrixC& z) {
    using kernels::Op;
    const Complex one(1.0), zero(0.0);
    // -i[H, rho]: X = H rho, out = -i(X - X^dag)
    kernels::gemm(Op::N, Op::N, one, model.hamiltonian.mat, rho, zero, x);
    out = Complex(0.0, -1.0) * (x - x.adjoint().eval());
    // -(1/2){K, rho}
    kernels::gemm(Op::N, Op::N, one, wk.ksum, rho, zero, x);
    out.noalias() -= 0.5 * (x + x.adjoint().eval());
    // + sum L rho L^dag, symmetrized
    for (const auto& l : model.jumps) {
        kernels::gemm(Op::N, Op::N, one, l.mat, rho, zero, x);
        kernels::gemm(Op::N, Op::C, one, x, l.mat, zero, z);
        out.noalias() += 0.5 * (z + z.adjoint().eval());
    }
}

}  // namespace detail_lindblad

MatrixC lindblad_rhs(const Model& model, const MatrixC& rho) {
    const int d = model.space.total_dim();
    if (rho.rows() != d || rho.cols() != d)
        throw InvalidArgument("lindblad_rhs: state dimension does not match model space");
    detail_lindblad::RhsWork wk(model);
    MatrixC out(d, d), x(d, d), z(d, d);
    detail_lindblad::rhs_into(model, wk, rho, out, x, z);
    return out;
}

MatrixC lindblad_rhs(const Model& model, const DensityMatrix& rho) {
    if (!(rho.space == model.space))
        throw InvalidArgument("lindblad_rhs: state space does not match model space");
    return lindblad_rhs(model, rho.mat);
}

double default_max_time(const ModelParams& p) {
    double scale = 1.0;  // 1/omega_m
    if (p.gamma > 0) scale = std::max(scale, 1.0 / p.gamma);
    if (p.kappa > 0) scale = std::max(scale, 1.0 / p.kappa);
    return 50.0 * scale;
}

}  // namespace recoil
