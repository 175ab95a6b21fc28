// observables.cpp

#include "recoil/observables.hpp"

#include <cmath>

#include "recoil/errors.hpp"

namespace recoil {

double purity(const DensityMatrix& rho) { return rho.mat.squaredNorm(); }

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<MatrixC> es(rho.mat, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        if (l >= 1e-12) s -= l * std::log(l);
    }
    return s;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.space != sigma.space)
        throw InvalidArgument("trace_distance: states live on different spaces");
    Eigen::SelfAdjointEigenSolver<MatrixC> es(rho.mat - sigma.mat, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

std::vector<double> number_distribution(const DensityMatrix& rho_m) {
    std::vector<double> p(rho_m.mat.rows());
    for (Eigen::Index n = 0; n < rho_m.mat.rows(); ++n) p[n] = rho_m.mat(n, n).real();
    return p;
}

double off_diagonal_mass(const DensityMatrix& rho_m) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rho_m.mat.rows(); ++i)
        for (Eigen::Index j = i + 1; j < rho_m.mat.cols(); ++j)
            acc += std::abs(rho_m.mat(i, j));
    return acc / rho_m.mat.trace().real();
}

DensityMatrix thermal_state(double nbar, int cutoff) {
    if (nbar < 0) throw InvalidArgument("thermal_state: nbar must be >= 0");
    if (cutoff < 1) throw InvalidArgument("thermal_state: cutoff must be >= 1");
    const SpaceDescriptor sp = motional_space(cutoff);
    MatrixC m = MatrixC::Zero(cutoff + 1, cutoff + 1);
    if (nbar == 0.0) {
        m(0, 0) = 1.0;
        return {sp, std::move(m)};
    }
    const double r = nbar / (nbar + 1.0);
    const double captured = 1.0 - std::pow(r, cutoff + 1);
    if (captured < 0.999)
        throw CutoffTooSmall("thermal_state: cutoff " + std::to_string(cutoff) +
                             " captures only " + std::to_string(captured) +
                             " of the weight at nbar=" + std::to_string(nbar));
    double norm = 0.0;
    for (int n = 0; n <= cutoff; ++n) norm += std::pow(r, n);
    for (int n = 0; n <= cutoff; ++n) m(n, n) = std::pow(r, n) / norm;
    return {sp, std::move(m)};
}

DensityMatrix rotate_motional(const DensityMatrix& rho_m, double theta) {
    if (rho_m.space.n_subsystems() != 1)
        throw InvalidArgument("rotate_motional: expected a single-mode state");
    MatrixC out = rho_m.mat;
    for (Eigen::Index m = 0; m < out.rows(); ++m)
        for (Eigen::Index n = 0; n < out.cols(); ++n)
            out(m, n) *= std::exp(Complex(0.0, -theta * double(m - n)));
    return {rho_m.space, std::move(out)};
}

DensityMatrix fock_density(int n, int cutoff) {
    if (n < 0 || n > cutoff) throw InvalidArgument("fock_density: n out of range");
    MatrixC m = MatrixC::Zero(cutoff + 1, cutoff + 1);
    m(n, n) = 1.0;
    return {motional_space(cutoff), std::move(m)};
}

VectorC coherent_amplitudes(Complex alpha, int cutoff) {
    VectorC c(cutoff + 1);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= cutoff; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
    return c;
}

}  // namespace recoil
