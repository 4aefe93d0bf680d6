#pragma once

// Central numerical tolerances. Structural identities (gate algebra, tensor
// bookkeeping) are held to 1e-12; anything that went through a time evolution
// or a full circuit pass is held to 1e-10.
namespace rodeo {

inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kEvolvedTol = 1e-10;

// Norm drift beyond this aborts a run instead of producing silent garbage.
inline constexpr double kNormDriftGuard = 1e-8;

// Ising energies are small integers times J; grouping levels at 1e-9 absolute
// survives float accumulation for any chain length we allow.
inline constexpr double kLevelMatchTol = 1e-9;

// Switch the Dirichlet ratio to its series limit when the denominator sine
// drops below this (removable singularity at aligned phases).
inline constexpr double kDirichletGuard = 1e-8;

// Smallest density-of-states value considered distinguishable from zero.
inline constexpr double kEntropyFloor = 1e-12;

// Largest system dimension d'^N we are willing to enumerate.
inline constexpr long long kMaxSystemDim = 1LL << 20;

}  // namespace rodeo
