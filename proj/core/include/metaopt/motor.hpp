#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "metaopt/problems.hpp"
#include "metaopt/rk45.hpp"
#include "metaopt/search_space.hpp"

namespace metaopt {

// The five identified parameters.  Stator and rotor leakage inductances are
// linearly dependent in the current equations, so they are optimized as the
// single combined variable Lll = Lsl + Lrl and split 50/50 internally; any
// fixed split consistent across reference and candidate yields the same
// fitness landscape.
struct MotorParams {
    double Rs = 9.203;    // stator resistance, ohm
    double Rr = 6.61;     // rotor resistance, ohm
    double Lll = 0.09718; // combined leakage Lsl + Lrl, H
    double Lm = 1.6816;   // mutual inductance, H
    double J = 0.00077;   // moment of inertia, kg m^2

    double Lsl() const { return 0.5 * Lll; }
    double Lrl() const { return 0.5 * Lll; }
    // Ld = Lsl*Lrl + Lm*(Lsl + Lrl), equal to Ls*Lr - Lm^2.
    double Ld() const { return Lsl() * Lrl() + Lm * (Lsl() + Lrl()); }

    std::array<double, 5> as_array() const { return {Rs, Rr, Lll, Lm, J}; }
    static MotorParams from_array(std::span<const double> v);
    void validate() const;
};

// Identification search box (initialization ranges with a hard lower clamp).
SearchSpace motor_search_space();
MotorParams true_motor_params();

// Flux-linkage state: stator/rotor flux d-q components and electrical rotor
// speed.
struct MotorState {
    double psi_sd = 0.0;
    double psi_sq = 0.0;
    double psi_rd = 0.0;
    double psi_rq = 0.0;
    double omega_r = 0.0;
};

struct SupplyWaveform {
    double v_peak = 311.0; // phase voltage amplitude, V
    double freq_hz = 50.0;
    // Balanced three-phase: v1 at phase 0, v2 at -120 degrees, v3 at +120.
    std::array<double, 3> at(double t) const;
};

// Park projection onto the stator d-q frame (theta = 0):
//   v_sd = (2 v1 - v2 - v3) / 3,  v_sq = (v2 - v3) / sqrt(3)
std::array<double, 2> park_forward(double v1, double v2, double v3);

// Inverse projection with zero-sequence component fixed at 0:
//   i1 = i_sd,  i2 = -i_sd/2 + sqrt(3)/2 i_sq,  i3 = -i_sd/2 - sqrt(3)/2 i_sq
std::array<double, 3> park_inverse(double i_sd, double i_sq);

// Stator current recovered from the flux state:
//   i_s = ((Lrl + Lm) psi_s - Lm psi_r) / Ld
std::array<double, 2> stator_currents(const MotorState& s, const MotorParams& p);

// Flux-linkage model derivatives (pole pairs fixed at 1, load torque and
// friction zero).
MotorState flux_derivatives(const MotorState& s, const MotorParams& p, double v_sd, double v_sq);

// Alternative state-space model over [i_sd, i_sq, lambda_rd, lambda_rq,
// omega_m] with eta, sigma, gamma, mu coefficients; its torque term is
// (3/2J)(Lm/Lr)(lambda_rd i_sq - lambda_rq i_sd), which matches the flux
// model exactly for pole pairs = 1.
std::array<double, 5> statespace_derivatives(const std::array<double, 5>& x,
                                             const MotorParams& p, double v_sd, double v_sq);

struct CurrentSample {
    double t;
    double i1, i2, i3;
};

enum class MotorModel { FluxLinkage, StateSpace };

// Startup simulation from standstill (zero state): integrates the chosen
// model over [0, T] and samples the three-phase currents at samples+1
// equally spaced times including both endpoints.
std::vector<CurrentSample> simulate_startup(const MotorParams& params,
                                            const SupplyWaveform& supply, double duration,
                                            std::size_t samples,
                                            const Rk45Options& options = {1e-7, 1e-9},
                                            MotorModel model = MotorModel::FluxLinkage);

// Sum-of-absolute-errors identification fitness: sum over the sample grid of
// |i1 - i1^| + |i2 - i2^| + |i3 - i3^| times dt (dt = T / samples).  A failed
// candidate integration scores a large finite penalty (10x the fitness of
// identically-zero currents) instead of aborting the optimizer run.
struct IdentProblem {
    std::vector<CurrentSample> reference;
    SupplyWaveform supply;
    double duration;
    std::size_t samples;
    // Candidate integrations run at the reference tolerances so the fitness
    // of the true parameters is exactly zero.
    Rk45Options candidate_options{1e-7, 1e-9};
    double failure_penalty = 0.0;

    static IdentProblem make(const MotorParams& true_params, const SupplyWaveform& supply,
                             double duration, std::size_t samples);

    double fitness(const MotorParams& candidate) const;
    ScalarObjective objective() const;
};

// Reference-current dataset I/O: header row `t,i1,i2,i3`, 17-significant-
// digit decimals, LF line endings.
void write_current_csv(std::ostream& os, std::span<const CurrentSample> samples);
std::vector<CurrentSample> read_current_csv(std::istream& is);

} // namespace metaopt
