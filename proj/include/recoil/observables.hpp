// observables.hpp — diagnostics of reduced motional states

#pragma once

#include <vector>

#include "recoil/density.hpp"

namespace recoil {

// tr(rho^2); for Hermitian rho this is the squared Frobenius norm.
double purity(const DensityMatrix& rho);

// -sum lambda ln lambda, eigenvalues below 1e-12 contribute zero.
double von_neumann_entropy(const DensityMatrix& rho);

// (1/2) tr |rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Diagonal of a single-mode state in the Fock basis.
std::vector<double> number_distribution(const DensityMatrix& rho_m);

// Sum of |rho_mn| over unique off-diagonal pairs (m < n), divided by the
// trace. Zero iff the state is Fock-diagonal.
double off_diagonal_mass(const DensityMatrix& rho_m);

// Truncated Boltzmann state with mean occupation nbar. Throws CutoffTooSmall
// when the truncation captures less than 0.999 of the untruncated weight.
DensityMatrix thermal_state(double nbar, int cutoff);

// Free motional rotation exp(-i theta n) rho exp(+i theta n).
DensityMatrix rotate_motional(const DensityMatrix& rho_m, double theta);

// |n><n| on a single-mode space.
DensityMatrix fock_density(int n, int cutoff);

// Fock-basis amplitudes of the coherent state |alpha> (truncated, unnormalized
// tail dropped). Exposed for oracle tests.
VectorC coherent_amplitudes(Complex alpha, int cutoff);

}  // namespace recoil
