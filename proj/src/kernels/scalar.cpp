// kernels/scalar.cpp — portable reference kernels. These define the semantics
// the SIMD variants are equivalence-tested against.

#include "recoil/kernels.hpp"

namespace recoil::kernels {

namespace {

inline Complex fetch(Op op, const Complex* a, int lda, int row, int col) {
    return op == Op::N ? a[row + std::size_t(lda) * col]
                       : std::conj(a[col + std::size_t(lda) * row]);
}

void gemm_scalar(Op opa, Op opb, int m, int n, int k, Complex alpha, const Complex* a,
                 int lda, const Complex* b, int ldb, Complex beta, Complex* c, int ldc) {
    for (int j = 0; j < n; ++j) {
        Complex* cj = c + std::size_t(ldc) * j;
        if (beta == Complex(0.0))
            for (int i = 0; i < m; ++i) cj[i] = Complex(0.0);
        else if (beta != Complex(1.0))
            for (int i = 0; i < m; ++i) cj[i] *= beta;
        for (int l = 0; l < k; ++l) {
            const Complex blj = alpha * fetch(opb, b, ldb, l, j);
            if (blj == Complex(0.0)) continue;
            if (opa == Op::N) {
                const Complex* al = a + std::size_t(lda) * l;
                for (int i = 0; i < m; ++i) cj[i] += al[i] * blj;
            } else {
                const Complex* ar = a + std::size_t(lda) * 0;
                (void)ar;
                for (int i = 0; i < m; ++i)
                    cj[i] += std::conj(a[l + std::size_t(lda) * i]) * blj;
            }
        }
    }
}

void gemv_scalar(Op opa, int m, int n, Complex alpha, const Complex* a, int lda,
                 const Complex* x, Complex beta, Complex* y) {
    const int ylen = opa == Op::N ? m : n;
    if (beta == Complex(0.0))
        for (int i = 0; i < ylen; ++i) y[i] = Complex(0.0);
    else if (beta != Complex(1.0))
        for (int i = 0; i < ylen; ++i) y[i] *= beta;
    if (opa == Op::N) {
        for (int j = 0; j < n; ++j) {
            const Complex s = alpha * x[j];
            if (s == Complex(0.0)) continue;
            const Complex* aj = a + std::size_t(lda) * j;
            for (int i = 0; i < m; ++i) y[i] += aj[i] * s;
        }
    } else {
        for (int j = 0; j < n; ++j) {
            const Complex* aj = a + std::size_t(lda) * j;
            Complex acc(0.0);
            for (int i = 0; i < m; ++i) acc += std::conj(aj[i]) * x[i];
            y[j] += alpha * acc;
        }
    }
}

void axpby_scalar(int n, Complex a, const Complex* x, Complex b, Complex* y) {
    if (b == Complex(0.0)) {
        for (int i = 0; i < n; ++i) y[i] = a * x[i];
    } else if (b == Complex(1.0)) {
        for (int i = 0; i < n; ++i) y[i] += a * x[i];
    } else {
        for (int i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
    }
}

void wigner_diag_scalar(int npts, int mlen, int k, const double* s, const double* g0,
                        const double* r1, const double* r2, const double* dre,
                        const double* dim, double* accA, double* accB) {
    for (int p = 0; p < npts; ++p) {
        double gp = 0.0;       // G_{m-1}
        double gc = g0[p];     // G_m
        const double sp = s[p];
        double A = 0.0, B = 0.0;
        for (int m = 0; m < mlen; ++m) {
            A += dre[m] * gc;
            B += dim[m] * gc;
            const double gn = (sp - double(2 * m + k + 1)) * gc * r1[m] - r2[m] * gp;
            gp = gc;
            gc = gn;
        }
        accA[p] += A;
        accB[p] += B;
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar", gemm_scalar, gemv_scalar, axpby_scalar,
                           wigner_diag_scalar};
    return b;
}

}  // namespace recoil::kernels
