#pragma once

#include "rodeo/gates.hpp"
#include "rodeo/ising.hpp"
#include "rodeo/state.hpp"

// Single-shot Rodeo circuit and its closed-form single-time observables.
//
// The circuit on the joint register |ancilla> ⊗ |system> is
//   QFT_d on ancilla -> controlled evolution C(e^{-iHt}) -> phase shift
//   P_d(E d t / 2) on ancilla -> inverse QFT_d on ancilla,
// after which the amplitude of |n> ⊗ |x> is
//   (c_x / d) * sum_{l=0}^{d-1} e^{-i (w_x t + 2 pi n / d) l},   w_x = E_x - E.
//
// The ancilla measurement signal is the clock-operator expectation
//   h = <Z_d ⊗ 1> = sum_x |c_x|^2 K_d(w_x, t)
// with the two-frequency Rodeo kernel
//   K_d(w, t) = ((d-1)/d) e^{-i w t} + (1/d) e^{+i (d-1) w t}.
namespace rodeo {

struct RodeoRun {
    RegisterLayout layout;
    DiagonalHamiltonian hamiltonian;
    StateVector input_state;  // system register only, normalized
    double trial_energy = 0.0;
    double time = 0.0;
};

struct MeasurementDistribution {
    std::vector<double> probs;  // indexed by ancilla level n
};

// Validates dimensions, finiteness and input normalization; throws
// std::invalid_argument on violation.
void validate(const RodeoRun& run);

// Full state-vector pass through the circuit. The controlled evolution is
// applied as a phase map over joint indices, never as a dense matrix.
// Throws NumericError if the output norm drifts beyond kNormDriftGuard.
StateVector run_circuit(const RodeoRun& run);

// sum_{l=0}^{d-1} e^{-i theta l} in closed Dirichlet form, with the removable
// singularity at theta = 2 pi k evaluated by series limit (value d at the
// aligned point).
Complex dirichlet_sum(int d, double theta);

// <n| ⊗ <psi| applied to the circuit output, in closed form:
// A(n) = (1/d) sum_x |c_x|^2 * dirichlet_sum(d, w_x t + 2 pi n / d).
Complex projection_amplitude(const RodeoRun& run, int n);

// Ancilla measurement probabilities from the circuit output marginals.
MeasurementDistribution measurement_distribution(const RodeoRun& run);

// P_d(n) for an eigenstate input as a function of delta = w t d / 2.
// This is the Dirichlet-kernel level curve |dirichlet_sum|^2 / d^2.
double eigenstate_level_probability(int d, int n, double delta);

// Two-frequency interferometric kernel K_d(w, t); K_d(w, 0) = 1 for all d,
// and K_2 is exactly real (cos(w t)).
Complex rodeo_kernel(int d, double omega, double time);

// <Z_d ⊗ 1> evaluated from the circuit output as sum_n P(n) e^{i 2 pi n / d}.
Complex expectation_value(const RodeoRun& run);

// Same observable from the closed form sum_x |c_x|^2 K_d(w_x, t).
Complex expectation_value_kernel(const RodeoRun& run);

// Loschmidt amplitude L(t) = sum_x |c_x|^2 e^{-i (E_x - E) t}.
Complex loschmidt_amplitude(const StateVector& psi, const DiagonalHamiltonian& h,
                            double trial_energy, double time);

// h reconstructed from a Loschmidt amplitude:
//   h = ((d-1)/d) L + (1/d) conj(L)^{d-1}.
// Coincides with the expectation value only for eigenstate inputs; for a
// general state it is a distinct diagnostic quantity.
Complex h_from_loschmidt(int d, Complex loschmidt);

// Raised when a state-vector pass loses normalization beyond the guard.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rodeo
