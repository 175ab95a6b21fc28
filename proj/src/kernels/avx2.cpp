// kernels/avx2.cpp — AVX2+FMA variants. This translation unit is the only one
// built with -mavx2 -mfma; the dispatcher keeps it off CPUs that lack them.

#include "recoil/kernels.hpp"

#if defined(RECOIL_HAVE_AVX2_TU)

#include <immintrin.h>

#include <vector>

namespace recoil::kernels {

namespace {

constexpr int MR = 4;
constexpr int NR = 4;
constexpr int KC = 240;
constexpr int MC = 96;

// Packed panel layouts, split real/imag:
//   A panel: per l, MR reals then MR imags (16 doubles per l when MR=4)
//   B panel: per l, NR interleaved (re,im) pairs for broadcast access

inline Complex fetch(Op op, const Complex* a, int lda, int row, int col) {
    return op == Op::N ? a[row + std::size_t(lda) * col]
                       : std::conj(a[col + std::size_t(lda) * row]);
}

void pack_a(Op opa, const Complex* a, int lda, int i0, int mr_act, int l0, int kc,
            double* pa) {
    for (int l = 0; l < kc; ++l) {
        for (int i = 0; i < MR; ++i) {
            Complex v = i < mr_act ? fetch(opa, a, lda, i0 + i, l0 + l) : Complex(0.0);
            pa[i] = v.real();
            pa[MR + i] = v.imag();
        }
        pa += 2 * MR;
    }
}

void pack_b(Op opb, const Complex* b, int ldb, int l0, int kc, int j0, int nr_act,
            double* pb) {
    for (int l = 0; l < kc; ++l) {
        for (int j = 0; j < NR; ++j) {
            Complex v = j < nr_act ? fetch(opb, b, ldb, l0 + l, j0 + j) : Complex(0.0);
            pb[2 * j] = v.real();
            pb[2 * j + 1] = v.imag();
        }
        pb += 2 * NR;
    }
}

// 4x4 complex tile: C_tile = op(A)op(B) over kc, accumulated in registers.
void micro_4x4(int kc, const double* pa, const double* pb, Complex* tile) {
    __m256d cr0 = _mm256_setzero_pd(), cr1 = cr0, cr2 = cr0, cr3 = cr0;
    __m256d ci0 = cr0, ci1 = cr0, ci2 = cr0, ci3 = cr0;
    for (int l = 0; l < kc; ++l) {
        const __m256d ar = _mm256_load_pd(pa);
        const __m256d ai = _mm256_load_pd(pa + MR);
        pa += 2 * MR;
#define RECOIL_MM_COL(j, CR, CI)                             \
        {                                                    \
            const __m256d br = _mm256_broadcast_sd(pb + 2 * (j));     \
            const __m256d bi = _mm256_broadcast_sd(pb + 2 * (j) + 1); \
            CR = _mm256_fmadd_pd(ar, br, CR);                \
            CR = _mm256_fnmadd_pd(ai, bi, CR);               \
            CI = _mm256_fmadd_pd(ar, bi, CI);                \
            CI = _mm256_fmadd_pd(ai, br, CI);                \
        }
        RECOIL_MM_COL(0, cr0, ci0)
        RECOIL_MM_COL(1, cr1, ci1)
        RECOIL_MM_COL(2, cr2, ci2)
        RECOIL_MM_COL(3, cr3, ci3)
#undef RECOIL_MM_COL
        pb += 2 * NR;
    }
    alignas(32) double re[MR], im[MR];
    const __m256d crs[NR] = {cr0, cr1, cr2, cr3};
    const __m256d cis[NR] = {ci0, ci1, ci2, ci3};
    for (int j = 0; j < NR; ++j) {
        _mm256_store_pd(re, crs[j]);
        _mm256_store_pd(im, cis[j]);
        for (int i = 0; i < MR; ++i) tile[i + MR * j] = Complex(re[i], im[i]);
    }
}

void gemm_avx2(Op opa, Op opb, int m, int n, int k, Complex alpha, const Complex* a,
               int lda, const Complex* b, int ldb, Complex beta, Complex* c, int ldc) {
    if (m == 0 || n == 0) return;
    if (k == 0 || alpha == Complex(0.0)) {
        for (int j = 0; j < n; ++j) {
            Complex* cj = c + std::size_t(ldc) * j;
            if (beta == Complex(0.0))
                for (int i = 0; i < m; ++i) cj[i] = Complex(0.0);
            else if (beta != Complex(1.0))
                for (int i = 0; i < m; ++i) cj[i] *= beta;
        }
        return;
    }
    thread_local std::vector<double> abuf, bbuf;
    abuf.resize(std::size_t(2 * MR) * KC * ((MC + MR - 1) / MR));
    bbuf.resize(std::size_t(2 * NR) * KC * ((n + NR - 1) / NR));
    Complex tile[MR * NR];

    for (int l0 = 0; l0 < k; l0 += KC) {
        const int kc = std::min(KC, k - l0);
        const Complex beta_eff = l0 == 0 ? beta : Complex(1.0);
        // pack all of B for this k-slab
        for (int j0 = 0, pj = 0; j0 < n; j0 += NR, ++pj)
            pack_b(opb, b, ldb, l0, kc, j0, std::min(NR, n - j0),
                   bbuf.data() + std::size_t(2 * NR) * kc * pj);
        for (int i0blk = 0; i0blk < m; i0blk += MC) {
            const int mc = std::min(MC, m - i0blk);
            for (int i0 = i0blk, pi = 0; i0 < i0blk + mc; i0 += MR, ++pi)
                pack_a(opa, a, lda, i0, std::min(MR, i0blk + mc - i0), l0, kc,
                       abuf.data() + std::size_t(2 * MR) * kc * pi);
            for (int j0 = 0, pj = 0; j0 < n; j0 += NR, ++pj) {
                const int nr_act = std::min(NR, n - j0);
                const double* pb = bbuf.data() + std::size_t(2 * NR) * kc * pj;
                for (int i0 = i0blk, pi = 0; i0 < i0blk + mc; i0 += MR, ++pi) {
                    const int mr_act = std::min(MR, i0blk + mc - i0);
                    micro_4x4(kc, abuf.data() + std::size_t(2 * MR) * kc * pi, pb, tile);
                    for (int j = 0; j < nr_act; ++j) {
                        Complex* cj = c + i0 + std::size_t(ldc) * (j0 + j);
                        for (int i = 0; i < mr_act; ++i) {
                            const Complex v = alpha * tile[i + MR * j];
                            cj[i] = beta_eff == Complex(0.0)
                                        ? v
                                        : (beta_eff == Complex(1.0) ? cj[i] + v
                                                                    : beta_eff * cj[i] + v);
                        }
                    }
                }
            }
        }
    }
}

// y += s * column, complex s broadcast; relies on interleaved (re,im) layout.
inline void axpy_col(int m, Complex s, const Complex* x, Complex* y) {
    const __m256d vsr = _mm256_set1_pd(s.real());
    const __m256d vsi = _mm256_set1_pd(s.imag());
    int i = 0;
    for (; i + 2 <= m; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vw = _mm256_permute_pd(vx, 0b0101);
        const __m256d pr = _mm256_fmaddsub_pd(vx, vsr, _mm256_mul_pd(vw, vsi));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), _mm256_add_pd(vy, pr));
    }
    for (; i < m; ++i) y[i] += s * x[i];
}

void gemv_avx2(Op opa, int m, int n, Complex alpha, const Complex* a, int lda,
               const Complex* x, Complex beta, Complex* y) {
    if (opa == Op::C) {  // column dots; scalar is fine here
        scalar_backend().gemv(opa, m, n, alpha, a, lda, x, beta, y);
        return;
    }
    if (beta == Complex(0.0))
        for (int i = 0; i < m; ++i) y[i] = Complex(0.0);
    else if (beta != Complex(1.0))
        for (int i = 0; i < m; ++i) y[i] *= beta;
    for (int j = 0; j < n; ++j) {
        const Complex s = alpha * x[j];
        if (s == Complex(0.0)) continue;
        axpy_col(m, s, a + std::size_t(lda) * j, y);
    }
}

void axpby_avx2(int n, Complex a, const Complex* x, Complex b, Complex* y) {
    const __m256d var = _mm256_set1_pd(a.real());
    const __m256d vai = _mm256_set1_pd(a.imag());
    int i = 0;
    if (b == Complex(1.0)) {
        for (; i + 2 <= n; i += 2) {
            const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
            const __m256d vw = _mm256_permute_pd(vx, 0b0101);
            const __m256d pr = _mm256_fmaddsub_pd(vx, var, _mm256_mul_pd(vw, vai));
            const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
            _mm256_storeu_pd(reinterpret_cast<double*>(y + i), _mm256_add_pd(vy, pr));
        }
    } else if (b == Complex(0.0)) {
        for (; i + 2 <= n; i += 2) {
            const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
            const __m256d vw = _mm256_permute_pd(vx, 0b0101);
            const __m256d pr = _mm256_fmaddsub_pd(vx, var, _mm256_mul_pd(vw, vai));
            _mm256_storeu_pd(reinterpret_cast<double*>(y + i), pr);
        }
    } else {
        const __m256d vbr = _mm256_set1_pd(b.real());
        const __m256d vbi = _mm256_set1_pd(b.imag());
        for (; i + 2 <= n; i += 2) {
            const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
            const __m256d vxw = _mm256_permute_pd(vx, 0b0101);
            const __m256d ax = _mm256_fmaddsub_pd(vx, var, _mm256_mul_pd(vxw, vai));
            const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
            const __m256d vyw = _mm256_permute_pd(vy, 0b0101);
            const __m256d by = _mm256_fmaddsub_pd(vy, vbr, _mm256_mul_pd(vyw, vbi));
            _mm256_storeu_pd(reinterpret_cast<double*>(y + i), _mm256_add_pd(ax, by));
        }
    }
    for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void wigner_diag_avx2(int npts, int mlen, int k, const double* s, const double* g0,
                      const double* r1, const double* r2, const double* dre,
                      const double* dim, double* accA, double* accB) {
    int p = 0;
    for (; p + 4 <= npts; p += 4) {
        __m256d gp = _mm256_setzero_pd();
        __m256d gc = _mm256_loadu_pd(g0 + p);
        const __m256d sp = _mm256_loadu_pd(s + p);
        __m256d va = _mm256_setzero_pd();
        __m256d vb = _mm256_setzero_pd();
        for (int m = 0; m < mlen; ++m) {
            va = _mm256_fmadd_pd(_mm256_set1_pd(dre[m]), gc, va);
            vb = _mm256_fmadd_pd(_mm256_set1_pd(dim[m]), gc, vb);
            const __m256d t = _mm256_sub_pd(sp, _mm256_set1_pd(double(2 * m + k + 1)));
            const __m256d gn = _mm256_fnmadd_pd(
                _mm256_set1_pd(r2[m]), gp,
                _mm256_mul_pd(_mm256_mul_pd(t, gc), _mm256_set1_pd(r1[m])));
            gp = gc;
            gc = gn;
        }
        _mm256_storeu_pd(accA + p, _mm256_add_pd(_mm256_loadu_pd(accA + p), va));
        _mm256_storeu_pd(accB + p, _mm256_add_pd(_mm256_loadu_pd(accB + p), vb));
    }
    if (p < npts)
        scalar_backend().wigner_diag(npts - p, mlen, k, s + p, g0 + p, r1, r2, dre, dim,
                                     accA + p, accB + p);
}

}  // namespace

const Backend* avx2_backend() {
    if (!(__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))) return nullptr;
    static const Backend b{"avx2", gemm_avx2, gemv_avx2, axpby_avx2, wigner_diag_avx2};
    return &b;
}

}  // namespace recoil::kernels

#else  // !RECOIL_HAVE_AVX2_TU

namespace recoil::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace recoil::kernels

#endif
