// model.hpp — (Hamiltonian, jump operators) assemblies for the three
// architectures plus the beamsplitter-mixed detection variant

#pragma once

#include <string>
#include <vector>

#include "recoil/density.hpp"
#include "recoil/operators.hpp"

namespace recoil {

// All rates in units of the trap frequency (omega_m = 1); eta and nbar are
// dimensionless, phi in radians.
struct ModelParams {
    double gamma = 0.0;  // optical decay rate
    double eta = 0.0;    // Lamb-Dicke parameter
    double phi = 0.0;    // mirror propagation phase
    double g = 0.0;      // emitter-resonator coupling
    double delta = 0.0;  // emitter-resonator detuning
    double kappa = 0.0;  // resonator-waveguide rate
    double nbar = 0.0;   // initial thermal occupation
};

struct Model {
    SpaceDescriptor space;
    Operator hamiltonian;
    std::vector<Operator> jumps;
    std::vector<std::string> channel_labels;
};

// Bidirectional waveguide: L_{l,r} = sqrt(G/2) sigma_- exp(+-i eta x),
// H = v^dag v.
Model waveguide_model(const ModelParams& p, int motional_cutoff);

// Emitter at distance phi in front of a perfect mirror:
// L = sqrt(2G) sigma_- cos(eta x - phi), plus the reflected-field shift
// (G/2)|e><e| sin(2 phi - 2 eta x) in H.
Model mirror_model(const ModelParams& p, int motional_cutoff);

// Emitter coupled to the two circulating resonator modes, which leak to the
// waveguide: H = (D/2)(|e><e|-|g><g|) + v^dag v
//              + g[sigma_-(a1^dag e^{i eta x} + a2^dag e^{-i eta x}) + h.c.],
// jumps sqrt(kappa) a1, sqrt(kappa) a2.
Model toroid_model(const ModelParams& p, int motional_cutoff, int cavity_cutoff);

// Waveguide channels mixed on a symmetric 50/50 beamsplitter:
// L_+ = sqrt(G) sigma_- cos(eta x), L_- = i sqrt(G) sigma_- sin(eta x).
// Unconditional dynamics identical to waveguide_model.
Model beamsplitter_mixed_model(const ModelParams& p, int motional_cutoff);

// |e><e| (x) rho_m (x) vacuum, with rho_m the motional ground state for
// nbar = 0 and the truncated thermal state otherwise.
DensityMatrix initial_state(const Model& model, double nbar = 0.0);

// Excited-emitter pure state |e> (x) |n_m> (x) vac for trajectory sampling.
VectorC initial_ket(const Model& model, int motional_n = 0);

}  // namespace recoil
