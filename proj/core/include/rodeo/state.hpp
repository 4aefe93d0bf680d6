#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rodeo/tolerances.hpp"

// Dense complex linear algebra for an ancilla qudit coupled to a register of
// N system qudits. States are plain amplitude vectors; the ancilla occupies
// the slowest-varying index, so the joint basis index is n * d'^N + x for
// ancilla level n and system index x. All values are immutable after
// construction and every operation is a pure function.
namespace rodeo {

using Complex = std::complex<double>;

struct RegisterLayout {
    int ancilla_dim = 2;       // d  >= 2
    int system_local_dim = 2;  // d' >= 2
    int n_sites = 1;           // N  >= 1

    long long system_dim() const;  // d'^N
    long long joint_dim() const;   // d * d'^N
};

struct StateVector {
    std::vector<Complex> amplitudes;

    StateVector() = default;
    explicit StateVector(std::vector<Complex> amps);

    long long dim() const { return static_cast<long long>(amplitudes.size()); }
    double norm() const;
    bool is_normalized(double tol = kEvolvedTol) const;
};

// Dense square matrix, row-major. entry(r, c) = entries[r * dim + c].
struct UnitaryOperator {
    long long dim = 0;
    std::vector<Complex> entries;

    UnitaryOperator() = default;
    UnitaryOperator(long long d, std::vector<Complex> e);

    Complex at(long long r, long long c) const { return entries[r * dim + c]; }
    Complex& at(long long r, long long c) { return entries[r * dim + c]; }
};

struct DiagonalOperator {
    std::vector<Complex> diagonal;

    DiagonalOperator() = default;
    explicit DiagonalOperator(std::vector<Complex> diag);

    long long dim() const { return static_cast<long long>(diagonal.size()); }
};

enum class Subsystem { ancilla, system };

// |index> in a dim-dimensional space. Throws std::invalid_argument when the
// index is out of range.
StateVector make_basis_state(long long dim, long long index);

// Kronecker product with a-major (lexicographic) ordering.
StateVector tensor(const StateVector& a, const StateVector& b);

// <a|b>, conjugate-linear in the first argument. Dimensions must match.
Complex inner_product(const StateVector& a, const StateVector& b);

// Applies op to one factor of the joint register without materializing the
// Kronecker product. op.dim must equal the targeted subsystem dimension and
// state.dim must equal layout.joint_dim().
StateVector apply_on_subsystem(const UnitaryOperator& op, Subsystem target,
                               const StateVector& state,
                               const RegisterLayout& layout);
StateVector apply_on_subsystem(const DiagonalOperator& op, Subsystem target,
                               const StateVector& state,
                               const RegisterLayout& layout);

// Dense helpers, used mostly by gate constructors and oracle checks.
UnitaryOperator identity_operator(long long dim);
UnitaryOperator matmul(const UnitaryOperator& a, const UnitaryOperator& b);
UnitaryOperator dagger(const UnitaryOperator& a);
StateVector apply_dense(const UnitaryOperator& op, const StateVector& state);
UnitaryOperator to_dense(const DiagonalOperator& op);

// max |(U^dagger U - 1)_{ij}|; zero for an exactly unitary matrix.
double unitarity_defect(const UnitaryOperator& op);

}  // namespace rodeo
