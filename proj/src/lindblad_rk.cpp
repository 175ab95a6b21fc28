// lindblad_rk.cpp — adaptive Runge-Kutta propagation of the master equation

#include <algorithm>
#include <cmath>

#include "recoil/detail/dopri5.hpp"
#include "recoil/detail/evolve_impl.hpp"
#include "recoil/detail/lindblad_rhs.hpp"
#include "recoil/errors.hpp"
#include "recoil/kernels.hpp"
#include "recoil/lindblad.hpp"

namespace recoil {

namespace {

Eigen::VectorXd diag_real(const MatrixC& m) {
    Eigen::VectorXd d(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) d(i) = m(i, i).real();
    return d;
}

struct StopObservables {
    Eigen::VectorXd excited;  // diagonal of P_e (zero when no emitter)
    Eigen::VectorXd cavity;   // diagonal of total cavity number
    bool has_emitter = false;
    bool has_cavity = false;
};

StopObservables stop_observables(const Model& model) {
    StopObservables so;
    const int d = model.space.total_dim();
    so.excited = Eigen::VectorXd::Zero(d);
    so.cavity = Eigen::VectorXd::Zero(d);
    if (model.space.has_emitter()) {
        so.has_emitter = true;
        so.excited = diag_real(excited_projector(model.space).mat);
    }
    for (int slot : model.space.cavity_slots()) {
        so.has_cavity = true;
        so.cavity += diag_real(number_op(model.space, slot).mat);
    }
    return so;
}

void record_point(EvolutionRecord& rec, const Model& model, const StopObservables& so,
                  double t, const MatrixC& rho, bool store, bool with_eig) {
    rec.times.push_back(t);
    rec.excited_population.push_back(expectation_diag(rho, so.excited));
    rec.cavity_population.push_back(expectation_diag(rho, so.cavity));
    rec.purity_series.push_back(rho.squaredNorm());
    SnapshotDiag d;
    d.t = t;
    d.trace_dev = std::abs(rho.trace() - Complex(1.0));
    d.herm_dev = herm_deviation(rho);
    if (with_eig) {
        Eigen::SelfAdjointEigenSolver<MatrixC> es(rho, Eigen::EigenvaluesOnly);
        d.min_eig = es.eigenvalues().minCoeff();
    }
    rec.diagnostics.push_back(d);
    if (store) rec.states.push_back({model.space, rho});
}

}  // namespace

EvolutionRecord evolve_rk(const Model& model, const DensityMatrix& rho0, double t_final,
                          const EvolveOptions& opts,
                          const std::function<bool(double, const MatrixC&)>& stop_cb) {
    const int d = model.space.total_dim();
    if (!(rho0.space == model.space))
        throw InvalidArgument("evolve: initial state space does not match model");
    detail_lindblad::RhsWork wk(model);
    const StopObservables so = stop_observables(model);

    EvolutionRecord rec;
    rec.solver_used = Solver::rk;
    MatrixC rho = rho0.mat;
    MatrixC xs(d, d), zs(d, d);
    auto rhs = [&](const MatrixC& y, MatrixC& out) {
        detail_lindblad::rhs_into(model, wk, y, out, xs, zs);
    };

    detail::StepControl ctl;
    ctl.rtol = opts.rtol;
    ctl.atol = opts.atol;
    ctl.dt_init = std::min(1e-3, t_final * 1e-3);

    // invariant drift monitor; 10x the configured tolerances is a hard fail
    const double trace_bar = 10.0 * std::max(opts.rtol, 1e-9);
    long steps = 0;
    bool stopped = false;
    auto monitor = [&](double t, const MatrixC& y, double) {
        ++steps;
        const double tr_dev = std::abs(y.trace() - Complex(1.0));
        const double h_dev = herm_deviation(y);
        if (tr_dev > trace_bar || h_dev > 10.0 * 1e-8)
            throw IntegrationFailure("invariant drift beyond 10x tolerance", t, tr_dev,
                                     h_dev);
        if (stop_cb && stop_cb(t, y)) {
            stopped = true;
            return false;
        }
        return true;
    };

    record_point(rec, model, so, 0.0, rho, opts.store_states, true);

    std::vector<double> samples = opts.sample_times;
    std::sort(samples.begin(), samples.end());
    samples.erase(std::remove_if(samples.begin(), samples.end(),
                                 [&](double s) { return s <= 0.0 || s > t_final; }),
                  samples.end());
    samples.push_back(t_final);

    double t = 0.0;
    for (double target : samples) {
        if (stopped) break;
        if (target <= t) continue;
        t = detail::integrate(rhs, rho, t, target, ctl, monitor);
        record_point(rec, model, so, t, rho, opts.store_states, true);
        if (stopped) break;
    }
    rec.rk_steps = steps;
    rec.stop_reason = stopped ? StopReason::criterion_met : StopReason::reached_t_final;
    return rec;
}

EvolutionRecord evolve(const Model& model, const DensityMatrix& rho0, double t_final,
                       const EvolveOptions& opts) {
    if (t_final <= 0.0) throw InvalidArgument("evolve: t_final must be > 0");
    if (opts.solver == Solver::rk)
        return evolve_rk(model, rho0, t_final, opts, nullptr);
    if (opts.solver == Solver::cascade) return evolve_cascade(model, rho0, t_final, opts);
    // automatic: exact cascade when the structure admits it
    if (build_cascade(model, rho0.mat))
        return evolve_cascade(model, rho0, t_final, opts);
    return evolve_rk(model, rho0, t_final, opts, nullptr);
}

}  // namespace recoil
