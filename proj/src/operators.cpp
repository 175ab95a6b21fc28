// operators.cpp

#include "recoil/operators.hpp"

#include "recoil/errors.hpp"

namespace recoil {

MatrixC local_annihilation(int dim) {
    MatrixC a = MatrixC::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

MatrixC local_position(int dim) {
    MatrixC a = local_annihilation(dim);
    return a + a.adjoint().eval();
}

Operator embed(const MatrixC& local, const SpaceDescriptor& space, int slot) {
    if (slot < 0 || slot >= space.n_subsystems())
        throw InvalidArgument("embed: slot " + std::to_string(slot) + " out of range");
    const int d_slot = space.dims[slot];
    if (local.rows() != d_slot || local.cols() != d_slot)
        throw InvalidArgument("embed: local matrix is " + std::to_string(local.rows()) +
                              "x" + std::to_string(local.cols()) + " but slot dim is " +
                              std::to_string(d_slot));
    int left = 1, right = 1;
    for (int s = 0; s < slot; ++s) left *= space.dims[s];
    for (int s = slot + 1; s < space.n_subsystems(); ++s) right *= space.dims[s];
    const int d = space.total_dim();
    MatrixC out = MatrixC::Zero(d, d);
    for (int l = 0; l < left; ++l)
        for (int i = 0; i < d_slot; ++i)
            for (int j = 0; j < d_slot; ++j) {
                const Complex v = local(i, j);
                if (v == Complex(0.0, 0.0)) continue;
                const int row0 = (l * d_slot + i) * right;
                const int col0 = (l * d_slot + j) * right;
                for (int r = 0; r < right; ++r) out(row0 + r, col0 + r) = v;
            }
    return {space, std::move(out)};
}

namespace detail {
Operator embed_motional(const SpaceDescriptor& space, const MatrixC& local) {
    const int slot = space.motional_slot();
    if (slot < 0) throw InvalidArgument("space has no motional slot");
    return embed(local, space, slot);
}
}  // namespace detail

Operator identity_op(const SpaceDescriptor& space) {
    const int d = space.total_dim();
    return {space, MatrixC::Identity(d, d)};
}

Operator annihilation(const SpaceDescriptor& space, int slot) {
    if (slot < 0 || slot >= space.n_subsystems())
        throw InvalidArgument("annihilation: slot out of range");
    if (space.dims[slot] < 2)
        throw InvalidArgument("annihilation: slot " + std::to_string(slot) +
                              " is not bosonic (dim < 2)");
    return embed(local_annihilation(space.dims[slot]), space, slot);
}

Operator number_op(const SpaceDescriptor& space, int slot) {
    const int d_slot = space.dims.at(slot);
    MatrixC n = MatrixC::Zero(d_slot, d_slot);
    for (int i = 0; i < d_slot; ++i) n(i, i) = double(i);
    return embed(n, space, slot);
}

Operator sigma_minus(const SpaceDescriptor& space) {
    const int slot = space.slot("emitter");
    if (slot < 0) throw InvalidArgument("space has no emitter slot");
    MatrixC sm = MatrixC::Zero(2, 2);
    sm(0, 1) = 1.0;  // basis order (g, e)
    return embed(sm, space, slot);
}

Operator excited_projector(const SpaceDescriptor& space) {
    const int slot = space.slot("emitter");
    if (slot < 0) throw InvalidArgument("space has no emitter slot");
    MatrixC pe = MatrixC::Zero(2, 2);
    pe(1, 1) = 1.0;
    return embed(pe, space, slot);
}

Operator sigma_z(const SpaceDescriptor& space) {
    const int slot = space.slot("emitter");
    if (slot < 0) throw InvalidArgument("space has no emitter slot");
    MatrixC sz = MatrixC::Zero(2, 2);
    sz(0, 0) = -1.0;
    sz(1, 1) = 1.0;
    return embed(sz, space, slot);
}

Operator position(const SpaceDescriptor& space) {
    const int slot = space.motional_slot();
    if (slot < 0) throw InvalidArgument("space has no motional slot");
    return embed(local_position(space.dims[slot]), space, slot);
}

Operator recoil(const SpaceDescriptor& space, double eta, int sign) {
    if (eta < 0) throw InvalidArgument("recoil: eta must be >= 0");
    if (sign != 1 && sign != -1) throw InvalidArgument("recoil: sign must be +1 or -1");
    const double s = double(sign);
    return motional_function(space, 1.0, 0.0,
                             [eta, s](double x) { return std::exp(Complex(0.0, s * eta * x)); });
}

}  // namespace recoil
