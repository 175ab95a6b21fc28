// operators.hpp — elementary operators on truncated tensor-product spaces

#pragma once

#include "recoil/matrix.hpp"
#include "recoil/space.hpp"

namespace recoil {

struct Operator {
    SpaceDescriptor space;
    MatrixC mat;
};

// identity ⊗ ... ⊗ local ⊗ ... ⊗ identity in the fixed subsystem ordering.
Operator embed(const MatrixC& local, const SpaceDescriptor& space, int slot);

Operator identity_op(const SpaceDescriptor& space);

// Fock lowering (sqrt(n) ladder) on a bosonic slot.
Operator annihilation(const SpaceDescriptor& space, int slot);

// Number operator on a bosonic slot.
Operator number_op(const SpaceDescriptor& space, int slot);

// |g><e| on the emitter slot.
Operator sigma_minus(const SpaceDescriptor& space);

// |e><e| projector on the emitter slot.
Operator excited_projector(const SpaceDescriptor& space);

// |e><e| - |g><g| on the emitter slot.
Operator sigma_z(const SpaceDescriptor& space);

// Dimensionless position v + v^dag on the motional slot.
Operator position(const SpaceDescriptor& space);

// exp(sign * i * eta * x) on the motional slot, built by exponentiating the
// truncated position operator so it stays exactly unitary in the truncation.
Operator recoil(const SpaceDescriptor& space, double eta, int sign);

// f(a*x + b) on the motional slot for real a, b and real-to-complex f; used
// for cos(eta x - phi), sin(2 phi - 2 eta x) and the like.
template <class F>
Operator motional_function(const SpaceDescriptor& space, double a, double b, F&& f);

// Local (slot-sized) matrices, exposed for oracle-style tests.
MatrixC local_annihilation(int dim);
MatrixC local_position(int dim);

// --- implementation of the template ---
namespace detail {
Operator embed_motional(const SpaceDescriptor& space, const MatrixC& local);
}

template <class F>
Operator motional_function(const SpaceDescriptor& space, double a, double b, F&& f) {
    const int slot = space.motional_slot();
    const MatrixC x = local_position(space.dims.at(slot));
    MatrixC gen = a * x + b * MatrixC::Identity(x.rows(), x.cols());
    return detail::embed_motional(space, hermitian_function(gen, std::forward<F>(f)));
}

}  // namespace recoil
