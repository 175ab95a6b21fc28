// detail/dopri5.hpp — embedded Dormand-Prince 5(4) stepper with PI step
// control, shared by the density-matrix and state-vector integrators.
// StateT is any Eigen dense object with contiguous complex<double> storage.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "recoil/errors.hpp"
#include "recoil/kernels.hpp"
#include "recoil/matrix.hpp"

namespace recoil::detail {

struct StepControl {
    double rtol = 1e-8;
    double atol = 1e-12;
    double dt_init = 1e-4;
    double dt_max = 1e6;
    long max_steps = 50'000'000;
};

// Dormand-Prince coefficients.
struct Dp5 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                            e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                            e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;
};

template <class StateT>
double error_norm(const StateT& err, const StateT& y0, const StateT& y1, double atol,
                  double rtol) {
    const Complex* e = err.data();
    const Complex* a = y0.data();
    const Complex* b = y1.data();
    const std::size_t n = err.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = atol + rtol * std::max(std::abs(a[i]), std::abs(b[i]));
        const double q = std::abs(e[i]) / sc;
        acc += q * q;
    }
    return std::sqrt(acc / double(n));
}

// Integrates y through [t0, t1]. on_step(t, y, dt_done) runs after every
// accepted step and may return false to stop early. Rhs: void(const StateT&,
// StateT&). Returns the reached time.
template <class StateT, class Rhs, class OnStep>
double integrate(Rhs&& rhs, StateT& y, double t0, double t1, const StepControl& ctl,
                 OnStep&& on_step) {
    using K = kernels::Op;
    (void)sizeof(K);
    if (!(t1 > t0)) return t0;
    StateT k1 = y, k2 = y, k3 = y, k4 = y, k5 = y, k6 = y, k7 = y, ytmp = y, ynew = y,
           err = y;
    const Complex one(1.0);
    auto lc = [](StateT& dst, const StateT& base) { dst = base; };

    rhs(y, k1);
    double t = t0;
    double dt = std::min({ctl.dt_init, ctl.dt_max, t1 - t0});
    double err_prev = 1.0;
    bool k1_fresh = true;
    for (long step = 0; step < ctl.max_steps; ++step) {
        if (t >= t1) return t;
        dt = std::min(dt, t1 - t);
        if (!k1_fresh) rhs(y, k1), k1_fresh = true;

        // stage 2
        lc(ytmp, y);
        kernels::axpby(Complex(Dp5::a21 * dt), k1, one, ytmp);
        rhs(ytmp, k2);
        // stage 3
        lc(ytmp, y);
        kernels::axpby(Complex(Dp5::a31 * dt), k1, one, ytmp);
        kernels::axpby(Complex(Dp5::a32 * dt), k2, one, ytmp);
        rhs(ytmp, k3);
        // stage 4
        lc(ytmp, y);
        kernels::axpby(Complex(Dp5::a41 * dt), k1, one, ytmp);
        kernels::axpby(Complex(Dp5::a42 * dt), k2, one, ytmp);
        kernels::axpby(Complex(Dp5::a43 * dt), k3, one, ytmp);
        rhs(ytmp, k4);
        // stage 5
        lc(ytmp, y);
        kernels::axpby(Complex(Dp5::a51 * dt), k1, one, ytmp);
        kernels::axpby(Complex(Dp5::a52 * dt), k2, one, ytmp);
        kernels::axpby(Complex(Dp5::a53 * dt), k3, one, ytmp);
        kernels::axpby(Complex(Dp5::a54 * dt), k4, one, ytmp);
        rhs(ytmp, k5);
        // stage 6
        lc(ytmp, y);
        kernels::axpby(Complex(Dp5::a61 * dt), k1, one, ytmp);
        kernels::axpby(Complex(Dp5::a62 * dt), k2, one, ytmp);
        kernels::axpby(Complex(Dp5::a63 * dt), k3, one, ytmp);
        kernels::axpby(Complex(Dp5::a64 * dt), k4, one, ytmp);
        kernels::axpby(Complex(Dp5::a65 * dt), k5, one, ytmp);
        rhs(ytmp, k6);
        // 5th order solution
        lc(ynew, y);
        kernels::axpby(Complex(Dp5::b1 * dt), k1, one, ynew);
        kernels::axpby(Complex(Dp5::b3 * dt), k3, one, ynew);
        kernels::axpby(Complex(Dp5::b4 * dt), k4, one, ynew);
        kernels::axpby(Complex(Dp5::b5 * dt), k5, one, ynew);
        kernels::axpby(Complex(Dp5::b6 * dt), k6, one, ynew);
        rhs(ynew, k7);  // FSAL
        // embedded error
        kernels::axpby(Complex(Dp5::e1 * dt), k1, Complex(0.0), err);
        kernels::axpby(Complex(Dp5::e3 * dt), k3, one, err);
        kernels::axpby(Complex(Dp5::e4 * dt), k4, one, err);
        kernels::axpby(Complex(Dp5::e5 * dt), k5, one, err);
        kernels::axpby(Complex(Dp5::e6 * dt), k6, one, err);
        kernels::axpby(Complex(Dp5::e7 * dt), k7, one, err);

        const double en = error_norm(err, y, ynew, ctl.atol, ctl.rtol);
        if (en <= 1.0) {
            t += dt;
            std::swap(y, ynew);
            std::swap(k1, k7);  // FSAL reuse
            k1_fresh = true;
            double fac = 0.9 * std::pow(std::max(en, 1e-10), -0.7 / 5.0) *
                         std::pow(err_prev, 0.4 / 5.0);
            err_prev = std::max(en, 1e-10);
            dt = std::min(dt * std::clamp(fac, 0.2, 5.0), ctl.dt_max);
            if (!on_step(t, y, dt)) return t;
        } else {
            dt *= std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.9);
            k1_fresh = true;  // k1 still matches y
            if (dt < 1e-14 * std::max(1.0, std::abs(t)))
                throw IntegrationFailure("step size underflow", t, 0.0, 0.0);
        }
    }
    throw IntegrationFailure("max step count exceeded", t, 0.0, 0.0);
}

}  // namespace recoil::detail
