// density.cpp

#include "recoil/density.hpp"

#include <algorithm>

#include "recoil/errors.hpp"

namespace recoil {

DensityCheck check_density(const DensityMatrix& rho) {
    DensityCheck c;
    c.trace_dev = std::abs(rho.mat.trace() - Complex(1.0));
    c.herm_dev = herm_deviation(rho.mat);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(0.5 * (rho.mat + rho.mat.adjoint()),
                                              Eigen::EigenvaluesOnly);
    c.min_eig = es.eigenvalues().minCoeff();
    return c;
}

void require_valid(const DensityMatrix& rho, double herm_tol, double trace_tol,
                   double eig_tol) {
    if (rho.mat.rows() != rho.mat.cols() || rho.mat.rows() != rho.space.total_dim())
        throw InvalidArgument("density matrix dimension does not match its space");
    const DensityCheck c = check_density(rho);
    if (!c.ok(herm_tol, trace_tol, eig_tol))
        throw InvalidArgument("density matrix invariants violated: |tr-1|=" +
                              std::to_string(c.trace_dev) + ", herm=" +
                              std::to_string(c.herm_dev) + ", min_eig=" +
                              std::to_string(c.min_eig));
}

namespace {

struct TraceIndexer {
    std::vector<std::size_t> kept_offsets;    // flattened kept-index -> base offset
    std::vector<std::size_t> traced_offsets;  // flattened traced-index -> offset
    SpaceDescriptor reduced;
};

TraceIndexer build_indexer(const SpaceDescriptor& space, const std::vector<int>& keep) {
    const int n = space.n_subsystems();
    std::vector<int> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    if (keep_sorted.empty()) throw InvalidArgument("partial_trace: keep set is empty");
    if (std::adjacent_find(keep_sorted.begin(), keep_sorted.end()) != keep_sorted.end())
        throw InvalidArgument("partial_trace: duplicate slot in keep set");
    for (int s : keep_sorted)
        if (s < 0 || s >= n) throw InvalidArgument("partial_trace: slot out of range");

    std::vector<std::size_t> stride(n, 1);
    for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * space.dims[s + 1];

    std::vector<int> traced;
    for (int s = 0; s < n; ++s)
        if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), s))
            traced.push_back(s);

    auto offsets = [&](const std::vector<int>& slots) {
        std::size_t count = 1;
        for (int s : slots) count *= space.dims[s];
        std::vector<std::size_t> out(count, 0);
        for (std::size_t flat = 0; flat < count; ++flat) {
            std::size_t rem = flat, off = 0;
            for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
                const std::size_t d = space.dims[*it];
                off += (rem % d) * stride[*it];
                rem /= d;
            }
            out[flat] = off;
        }
        return out;
    };

    TraceIndexer ix;
    ix.kept_offsets = offsets(keep_sorted);
    ix.traced_offsets = offsets(traced);
    for (int s : keep_sorted) {
        ix.reduced.dims.push_back(space.dims[s]);
        ix.reduced.labels.push_back(space.labels[s]);
    }
    return ix;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const TraceIndexer ix = build_indexer(rho.space, keep);
    const std::size_t dk = ix.kept_offsets.size();
    MatrixC out = MatrixC::Zero(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            Complex acc(0.0);
            for (const std::size_t t : ix.traced_offsets)
                acc += rho.mat(ix.kept_offsets[i] + t, ix.kept_offsets[j] + t);
            out(i, j) = acc;
        }
    return {ix.reduced, std::move(out)};
}

DensityMatrix pure_density(const SpaceDescriptor& space, const VectorC& psi) {
    if (psi.size() != space.total_dim())
        throw InvalidArgument("pure_density: vector length does not match space");
    return {space, psi * psi.adjoint()};
}

DensityMatrix partial_trace_pure(const SpaceDescriptor& space, const VectorC& psi,
                                 const std::vector<int>& keep) {
    const TraceIndexer ix = build_indexer(space, keep);
    const std::size_t dk = ix.kept_offsets.size();
    MatrixC out = MatrixC::Zero(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Complex acc(0.0);
            for (const std::size_t t : ix.traced_offsets)
                acc += psi(ix.kept_offsets[i] + t) * std::conj(psi(ix.kept_offsets[j] + t));
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
    return {ix.reduced, std::move(out)};
}

}  // namespace recoil
