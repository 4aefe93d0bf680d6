#pragma once

#include <vector>

#include "rodeo/tolerances.hpp"

// One-dimensional Lenz-Ising chains with periodic boundary conditions,
// diagonal in the computational basis. Site 0 is the most significant
// radix-d' digit of the basis index; energies are in units of J*S^2.
namespace rodeo {

enum class Spin { half, one };

struct DiagonalHamiltonian {
    int local_dim = 2;   // d'
    int n_sites = 1;     // N
    double coupling = 1.0;
    std::vector<double> energies;  // E_x for x = 0 .. d'^N - 1

    long long dim() const { return static_cast<long long>(energies.size()); }
};

struct SpectrumSummary {
    std::vector<double> energies;         // distinct levels, ascending
    std::vector<long long> degeneracies;  // Omega(E) per level
};

// Per-level S^z eigenvalues: spin-half -> {+1, -1}, spin-one -> {+1, 0, -1}.
std::vector<double> local_sz(Spin spin);

int local_dim(Spin spin);

// E_x = -J * sum_i m(x, i) * m(x, (i+1) mod N) over the periodic chain.
// Requires N >= 2 and d'^N within the enumeration bound.
DiagonalHamiltonian ising_diagonal(Spin spin, int n_sites, double coupling);

// Exact degeneracy count by enumeration; levels matched at 1e-9 absolute.
SpectrumSummary spectrum_summary(const DiagonalHamiltonian& h);

// Per-site m values of basis index x (site 0 = most significant digit).
std::vector<double> decode_config(long long x, Spin spin, int n_sites);

// Inverse of decode_config; m values must be exact level values.
long long encode_config(const std::vector<double>& site_values, Spin spin);

}  // namespace rodeo
