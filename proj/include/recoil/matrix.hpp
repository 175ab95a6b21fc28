// matrix.hpp — dense complex matrix aliases and small helpers

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace recoil {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using MatrixR = Eigen::MatrixXd;

inline MatrixC dagger(const MatrixC& a) { return a.adjoint(); }

inline double max_abs(const MatrixC& a) { return a.cwiseAbs().maxCoeff(); }

inline double frobenius(const MatrixC& a) { return a.norm(); }

// Hermiticity defect, max |A - A^dag| entry.
inline double herm_deviation(const MatrixC& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

// U f(lambda) U^dag for Hermitian input. Exact up to floating point; used for
// operator exponentials and trig of Hermitian generators.
template <class F>
MatrixC hermitian_function(const MatrixC& a, F&& f) {
    Eigen::SelfAdjointEigenSolver<MatrixC> es(a);
    const auto& w = es.eigenvalues();
    VectorC fw(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) fw(i) = f(w(i));
    return es.eigenvectors() * fw.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace recoil
