// model.cpp

#include "recoil/model.hpp"

#include <cmath>

#include "recoil/errors.hpp"
#include "recoil/kernels.hpp"
#include "recoil/observables.hpp"

namespace recoil {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw InvalidArgument(std::string(name) + " must be > 0");
}

void require_nonneg(double v, const char* name) {
    if (!(v >= 0.0)) throw InvalidArgument(std::string(name) + " must be >= 0");
}

Operator scaled(Complex c, Operator op) {
    op.mat *= c;
    return op;
}

Operator product(const Operator& a, const Operator& b) {
    return {a.space, kernels::matmul(a.mat, b.mat)};
}

}  // namespace

Model waveguide_model(const ModelParams& p, int motional_cutoff) {
    require_positive(p.gamma, "gamma");
    require_nonneg(p.eta, "eta");
    const SpaceDescriptor sp = make_space(true, motional_cutoff);
    const Operator sm = sigma_minus(sp);
    const double amp = std::sqrt(p.gamma / 2.0);
    Model m;
    m.space = sp;
    m.hamiltonian = number_op(sp, sp.motional_slot());
    m.jumps = {scaled(amp, product(sm, recoil(sp, p.eta, +1))),
               scaled(amp, product(sm, recoil(sp, p.eta, -1)))};
    m.channel_labels = {"left", "right"};
    return m;
}

Model mirror_model(const ModelParams& p, int motional_cutoff) {
    require_positive(p.gamma, "gamma");
    require_nonneg(p.eta, "eta");
    const SpaceDescriptor sp = make_space(true, motional_cutoff);
    const Operator sm = sigma_minus(sp);
    const Operator cosop = motional_function(sp, p.eta, -p.phi,
                                             [](double u) { return std::cos(u); });
    const Operator sinop = motional_function(sp, -2.0 * p.eta, 2.0 * p.phi,
                                             [](double u) { return std::sin(u); });
    Model m;
    m.space = sp;
    m.hamiltonian = number_op(sp, sp.motional_slot());
    m.hamiltonian.mat += 0.5 * p.gamma * product(excited_projector(sp), sinop).mat;
    m.jumps = {scaled(std::sqrt(2.0 * p.gamma), product(sm, cosop))};
    m.channel_labels = {"left"};
    return m;
}

Model toroid_model(const ModelParams& p, int motional_cutoff, int cavity_cutoff) {
    require_positive(p.kappa, "kappa");
    require_positive(p.g, "g");
    require_nonneg(p.eta, "eta");
    const SpaceDescriptor sp = make_space(true, motional_cutoff, {cavity_cutoff, cavity_cutoff});
    const int slot_m = sp.motional_slot();
    const auto cavs = sp.cavity_slots();
    const Operator sm = sigma_minus(sp);
    const Operator a1 = annihilation(sp, cavs[0]);
    const Operator a2 = annihilation(sp, cavs[1]);

    Model m;
    m.space = sp;
    // Detuning sign fixed so that positive delta pumps phonons: the emitter
    // sits delta above the resonator in the rotating frame, and emission into
    // the resonator is sideband-resonant at n -> n + delta.
    m.hamiltonian = scaled(0.5 * p.delta, sigma_z(sp));
    m.hamiltonian.mat += number_op(sp, slot_m).mat;
    MatrixC coupling =
        kernels::matmul(product(sm, recoil(sp, p.eta, +1)).mat, a1.mat.adjoint()) +
        kernels::matmul(product(sm, recoil(sp, p.eta, -1)).mat, a2.mat.adjoint());
    m.hamiltonian.mat += p.g * (coupling + coupling.adjoint());
    m.jumps = {scaled(std::sqrt(p.kappa), a1), scaled(std::sqrt(p.kappa), a2)};
    m.channel_labels = {"left", "right"};
    return m;
}

Model beamsplitter_mixed_model(const ModelParams& p, int motional_cutoff) {
    require_positive(p.gamma, "gamma");
    require_nonneg(p.eta, "eta");
    const SpaceDescriptor sp = make_space(true, motional_cutoff);
    const Operator sm = sigma_minus(sp);
    const Operator cosop = motional_function(sp, p.eta, 0.0,
                                             [](double u) { return std::cos(u); });
    const Operator sinop = motional_function(sp, p.eta, 0.0,
                                             [](double u) { return std::sin(u); });
    const double amp = std::sqrt(p.gamma);
    Model m;
    m.space = sp;
    m.hamiltonian = number_op(sp, sp.motional_slot());
    m.jumps = {scaled(amp, product(sm, cosop)),
               scaled(Complex(0.0, amp), product(sm, sinop))};
    m.channel_labels = {"plus", "minus"};
    return m;
}

DensityMatrix initial_state(const Model& model, double nbar) {
    const SpaceDescriptor& sp = model.space;
    const int slot_m = sp.motional_slot();
    const DensityMatrix rho_m = nbar > 0.0 ? thermal_state(nbar, sp.dims[slot_m] - 1)
                                           : fock_density(0, sp.dims[slot_m] - 1);
    MatrixC out = MatrixC::Ones(1, 1);
    for (int s = 0; s < sp.n_subsystems(); ++s) {
        MatrixC blk;
        if (sp.labels[s] == "emitter") {
            blk = MatrixC::Zero(2, 2);
            blk(1, 1) = 1.0;
        } else if (s == slot_m) {
            blk = rho_m.mat;
        } else {
            blk = MatrixC::Zero(sp.dims[s], sp.dims[s]);
            blk(0, 0) = 1.0;
        }
        MatrixC next(out.rows() * blk.rows(), out.cols() * blk.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j)
                next.block(i * blk.rows(), j * blk.cols(), blk.rows(), blk.cols()) =
                    out(i, j) * blk;
        out = std::move(next);
    }
    return {sp, std::move(out)};
}

VectorC initial_ket(const Model& model, int motional_n) {
    const SpaceDescriptor& sp = model.space;
    const int slot_m = sp.motional_slot();
    if (motional_n < 0 || motional_n >= sp.dims[slot_m])
        throw InvalidArgument("initial_ket: motional index out of range");
    std::vector<int> idx(sp.n_subsystems(), 0);
    idx[sp.slot("emitter")] = 1;
    idx[slot_m] = motional_n;
    std::size_t flat = 0;
    for (int s = 0; s < sp.n_subsystems(); ++s) flat = flat * sp.dims[s] + idx[s];
    VectorC psi = VectorC::Zero(sp.total_dim());
    psi(flat) = 1.0;
    return psi;
}

}  // namespace recoil
