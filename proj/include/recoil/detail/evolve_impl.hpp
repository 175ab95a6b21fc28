// detail/evolve_impl.hpp — internal entry points shared by the solver files

#pragma once

#include <functional>

#include "recoil/lindblad.hpp"

namespace recoil {

EvolutionRecord evolve_rk(const Model& model, const DensityMatrix& rho0, double t_final,
                          const EvolveOptions& opts,
                          const std::function<bool(double, const MatrixC&)>& stop_cb);

EvolutionRecord evolve_cascade(const Model& model, const DensityMatrix& rho0,
                               double t_final, const EvolveOptions& opts);

}  // namespace recoil
