#pragma once

#include "rodeo/ising.hpp"
#include "rodeo/state.hpp"

// Qudit gate constructors. omega = exp(i*2*pi/d) throughout; hbar = 1.
namespace rodeo {

// d-dimensional quantum Fourier transform: entry (l, n) = omega^{l*n} / sqrt(d).
// For d = 2 this is the Hadamard gate.
UnitaryOperator qft(int d);

// Conjugate transpose of qft(d): entry (n, l) = omega^{-n*l} / sqrt(d).
UnitaryOperator qft_inverse(int d);

// Ancilla phase correction: diagonal entry n = exp(i * 2 * phi * n / d).
// phase_shift(d, 0) is the identity.
DiagonalOperator phase_shift(int d, double phi);

// Trial phase for energy E and evolution time t: phi = E * d * t / 2. With
// this choice the phase shift contributes exp(+i*E*t*n) per ancilla level,
// cancelling the controlled evolution exactly at resonance.
double trial_phase(double energy, int d, double time);

// Shift operator X_d |l> = |(l+1) mod d>.
UnitaryOperator shift_op(int d);

// Clock operator Z_d |n> = exp(i*2*pi*n/d) |n>. Conjugating the shift with
// the Fourier transform gives the clock: Z_d = qft(d) * X_d * qft_inverse(d).
DiagonalOperator clock_op(int d);

// Time evolution of a computational-basis-diagonal Hamiltonian:
// diagonal entry x = exp(-i * E_x * t).
DiagonalOperator evolution_operator(const DiagonalHamiltonian& h, double time);

// Block-diagonal controlled power: |n> ⊗ |x>  ->  |n> ⊗ U^n |x>, for ancilla
// dimension d. Dense constructor, intended for oracle checks; circuit
// execution applies the equivalent phase map directly.
UnitaryOperator controlled_power(const UnitaryOperator& u, int d);
UnitaryOperator controlled_power(const DiagonalOperator& u, int d);

}  // namespace rodeo
