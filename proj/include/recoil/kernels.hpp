// kernels.hpp — data-parallel inner loops: scalar reference and AVX2 variants
// selected at runtime. Column-major complex<double> throughout, matching the
// Eigen default so matrices can be handed over without copies.

#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "recoil/matrix.hpp"

namespace recoil::kernels {

enum class Op : std::uint8_t { N, C };  // as-is | conjugate transpose

// C = alpha * op(A) * op(B) + beta * C, with C m x n and the contraction
// length k. Leading dimensions are in elements.
using GemmFn = void (*)(Op opa, Op opb, int m, int n, int k, Complex alpha,
                        const Complex* a, int lda, const Complex* b, int ldb,
                        Complex beta, Complex* c, int ldc);

// y = alpha * op(A) * x + beta * y
using GemvFn = void (*)(Op opa, int m, int n, Complex alpha, const Complex* a,
                        int lda, const Complex* x, Complex beta, Complex* y);

// y = a * x + b * y over n complex elements
using AxpbyFn = void (*)(int n, Complex a, const Complex* x, Complex b, Complex* y);

// One k-diagonal of the Wigner kernel over a row of phase-space points.
// For every point p:  accA[p] += sum_m dre[m] * G_m(s[p])
//                     accB[p] += sum_m dim[m] * G_m(s[p])
// where G_m is the scaled Laguerre ladder started at g0[p] with
//   G_1 = (s - (k+1)) * G_0 * r1[0]
//   G_{m+1} = (s - (2m+k+1)) * G_m * r1[m] - r2[m] * G_{m-1}
// and r1[m] = 1/sqrt((m+1)(m+k+1)), r2[m] = sqrt(m(m+k))*r1[m] are supplied
// by the caller (they depend only on k).
using WignerDiagFn = void (*)(int npts, int mlen, int k, const double* s,
                              const double* g0, const double* r1, const double* r2,
                              const double* dre, const double* dim, double* accA,
                              double* accB);

struct Backend {
    const char* name;
    GemmFn gemm;
    GemvFn gemv;
    AxpbyFn axpby;
    WignerDiagFn wigner_diag;
};

// Active backend: AVX2+FMA when the CPU and build support it, else scalar.
// RECOIL_KERNELS=scalar|avx2 overrides at startup.
const Backend& active();
// Force a backend by name; returns false (and leaves the active backend
// unchanged) if it is not available on this machine.
bool set_backend(const std::string& name);
const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when unavailable

// --- convenience wrappers over Eigen matrices ---

inline void gemm(Op opa, Op opb, Complex alpha, const MatrixC& a, const MatrixC& b,
                 Complex beta, MatrixC& c) {
    const int m = static_cast<int>(opa == Op::N ? a.rows() : a.cols());
    const int k = static_cast<int>(opa == Op::N ? a.cols() : a.rows());
    const int n = static_cast<int>(opb == Op::N ? b.cols() : b.rows());
    active().gemm(opa, opb, m, n, k, alpha, a.data(), static_cast<int>(a.rows()),
                  b.data(), static_cast<int>(b.rows()), beta, c.data(),
                  static_cast<int>(c.rows()));
}

inline MatrixC matmul(const MatrixC& a, const MatrixC& b) {
    MatrixC c(a.rows(), b.cols());
    gemm(Op::N, Op::N, Complex(1.0), a, b, Complex(0.0), c);
    return c;
}

inline MatrixC matmul_nc(const MatrixC& a, const MatrixC& b) {  // A * B^dag
    MatrixC c(a.rows(), b.rows());
    gemm(Op::N, Op::C, Complex(1.0), a, b, Complex(0.0), c);
    return c;
}

inline MatrixC matmul_cn(const MatrixC& a, const MatrixC& b) {  // A^dag * B
    MatrixC c(a.cols(), b.cols());
    gemm(Op::C, Op::N, Complex(1.0), a, b, Complex(0.0), c);
    return c;
}

inline void axpby(Complex a, const VectorC& x, Complex b, VectorC& y) {
    active().axpby(static_cast<int>(x.size()), a, x.data(), b, y.data());
}

inline void axpby(Complex a, const MatrixC& x, Complex b, MatrixC& y) {
    active().axpby(static_cast<int>(x.size()), a, x.data(), b, y.data());
}

}  // namespace recoil::kernels
