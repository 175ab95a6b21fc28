// lindblad.hpp — master-equation propagation, long-time limit detection,
// and the exact solver for one-pass decay cascades

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "recoil/density.hpp"
#include "recoil/model.hpp"

namespace recoil {

// dissipator + commutator action: -i[H,rho] + sum_i L rho L^dag
//   - (1/2){L^dag L, rho}. Input must be Hermitian (density-matrix context);
// the evaluation is arranged so the result is Hermitian and traceless to
// machine precision.
MatrixC lindblad_rhs(const Model& model, const MatrixC& rho);
MatrixC lindblad_rhs(const Model& model, const DensityMatrix& rho);

enum class Solver { rk, cascade, automatic };

enum class StopReason { reached_t_final, criterion_met, max_time };

struct EvolveOptions {
    double rtol = 1e-8;
    double atol = 1e-12;
    Solver solver = Solver::rk;
    // When non-empty, states are recorded exactly at these times (plus t_final).
    std::vector<double> sample_times;
    bool store_states = false;
    int threads = 1;
};

struct SnapshotDiag {
    double t = 0.0;
    double trace_dev = 0.0;
    double herm_dev = 0.0;
    double min_eig = 0.0;
};

struct EvolutionRecord {
    std::vector<double> times;
    std::vector<DensityMatrix> states;      // filled when store_states
    std::vector<double> excited_population; // tr(rho P_e), when emitter present
    std::vector<double> cavity_population;  // total cavity occupation
    std::vector<double> purity_series;      // full-state purity
    std::vector<SnapshotDiag> diagnostics;  // per recorded time
    StopReason stop_reason = StopReason::reached_t_final;
    Solver solver_used = Solver::rk;
    long rk_steps = 0;
};

EvolutionRecord evolve(const Model& model, const DensityMatrix& rho0, double t_final,
                       const EvolveOptions& opts = {});

struct StopCriteria {
    double eps_stop = 1e-6;
    double max_time = 0.0;  // 0 -> default 50 * max(1/Gamma, 1/kappa, 1/omega_m)
};

double default_max_time(const ModelParams& p);

struct LongTimeResult {
    DensityMatrix state;
    double t_star = 0.0;
    double excited_residual = 0.0;
    double cavity_residual = 0.0;
    double ground_weight = 0.0;
    Solver solver_used = Solver::rk;
};

// First t* with <P_e> < eps and (when cavities exist) total cavity occupation
// < eps. Throws NotConverged when max_time passes first.
LongTimeResult long_time_state(const Model& model, const DensityMatrix& rho0,
                               const StopCriteria& stop,
                               const EvolveOptions& opts = {.solver = Solver::automatic});

// ---- exact solver for one-pass decay cascades ----
//
// Applies when, on the subspace reachable from rho0, the Hamiltonian (and
// sum L^dag L) are block diagonal between the initial block and the rest,
// jumps map the initial block strictly into the rest, and jumps annihilate
// the rest. All architectures here have that structure (a single excitation
// and sigma_-^2 = 0). rho_11 then evolves under the non-Hermitian effective
// Hamiltonian alone and the ground block integral has closed form.
class CascadeSolution {
  public:
    MatrixC state_at(double t) const;                 // on the full model space
    double excited_population(double t) const;        // tr(rho P_e)
    double cavity_population(double t) const;
    double block1_trace(double t) const;
    int reachable_dim() const { return static_cast<int>(reach_.size()); }
    int block1_dim() const { return static_cast<int>(r1_.size()); }

  private:
    friend std::optional<CascadeSolution> build_cascade(const Model&, const MatrixC&);
    SpaceDescriptor space_;
    int full_dim_ = 0;
    std::vector<int> reach_, r1_, r0_;  // global reachables; block-local indices
    VectorC lam_;                       // H_eff eigenvalues
    MatrixC w_, winv_, cmat_;           // eigvecs, inverse, transformed rho11(0)
    Eigen::VectorXd w0_;                // H_00 eigenvalues
    MatrixC u0_;
    std::vector<MatrixC> lw_;           // per jump: U0^dag L_{01} W
    MatrixC r00_0_;                     // rho00(0) in the H_00 eigenbasis
    MatrixC r10_0_;                     // Winv rho10(0) U0 (cross block)
    bool has_cross_ = false;
    MatrixC pdiag_e_, pdiag_c_;         // tr-weights for the two stop observables
    MatrixC gram_;                      // W^dag W
    Eigen::VectorXd de_r0_, dc_r0_;     // stop observables restricted to block 0
    double de_r0_max_ = 0.0, dc_r0_max_ = 0.0;
};

std::optional<CascadeSolution> build_cascade(const Model& model, const MatrixC& rho0);

}  // namespace recoil
