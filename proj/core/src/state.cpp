#include "rodeo/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rodeo {

namespace {

void require_finite(const std::vector<Complex>& values, const char* what) {
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument(std::string(what) +
                                        ": non-finite amplitude");
        }
    }
}

}  // namespace

long long RegisterLayout::system_dim() const {
    if (ancilla_dim < 2 || system_local_dim < 2 || n_sites < 1) {
        throw std::invalid_argument("RegisterLayout: need d >= 2, d' >= 2, N >= 1");
    }
    long long dim = 1;
    for (int i = 0; i < n_sites; ++i) {
        dim *= system_local_dim;
        if (dim > kMaxSystemDim) {
            throw std::invalid_argument("RegisterLayout: system dimension overflow");
        }
    }
    return dim;
}

long long RegisterLayout::joint_dim() const {
    return static_cast<long long>(ancilla_dim) * system_dim();
}

StateVector::StateVector(std::vector<Complex> amps)
    : amplitudes(std::move(amps)) {
    require_finite(amplitudes, "StateVector");
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

UnitaryOperator::UnitaryOperator(long long d, std::vector<Complex> e)
    : dim(d), entries(std::move(e)) {
    if (dim < 1 || static_cast<long long>(entries.size()) != dim * dim) {
        throw std::invalid_argument("UnitaryOperator: entry count mismatch");
    }
    require_finite(entries, "UnitaryOperator");
}

DiagonalOperator::DiagonalOperator(std::vector<Complex> diag)
    : diagonal(std::move(diag)) {
    require_finite(diagonal, "DiagonalOperator");
}

StateVector make_basis_state(long long dim, long long index) {
    if (dim < 1) throw std::invalid_argument("make_basis_state: dim < 1");
    if (index < 0 || index >= dim) {
        throw std::invalid_argument("make_basis_state: index out of range");
    }
    std::vector<Complex> amps(dim, Complex(0.0, 0.0));
    amps[index] = Complex(1.0, 0.0);
    return StateVector(std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Complex> amps;
    amps.reserve(a.amplitudes.size() * b.amplitudes.size());
    for (const Complex& x : a.amplitudes) {
        for (const Complex& y : b.amplitudes) {
            amps.push_back(x * y);
        }
    }
    return StateVector(std::move(amps));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex sum(0.0, 0.0);
    for (long long i = 0; i < a.dim(); ++i) {
        sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return sum;
}

StateVector apply_on_subsystem(const UnitaryOperator& op, Subsystem target,
                               const StateVector& state,
                               const RegisterLayout& layout) {
    const long long sys = layout.system_dim();
    const long long d = layout.ancilla_dim;
    if (state.dim() != layout.joint_dim()) {
        throw std::invalid_argument("apply_on_subsystem: state/layout mismatch");
    }
    const long long want = (target == Subsystem::ancilla) ? d : sys;
    if (op.dim != want) {
        throw std::invalid_argument("apply_on_subsystem: operator dimension mismatch");
    }

    std::vector<Complex> out(state.amplitudes.size(), Complex(0.0, 0.0));
    if (target == Subsystem::ancilla) {
        // out[l*sys + x] = sum_n op(l, n) * in[n*sys + x]
        for (long long l = 0; l < d; ++l) {
            for (long long n = 0; n < d; ++n) {
                const Complex w = op.at(l, n);
                if (w == Complex(0.0, 0.0)) continue;
                const Complex* src = state.amplitudes.data() + n * sys;
                Complex* dst = out.data() + l * sys;
                for (long long x = 0; x < sys; ++x) dst[x] += w * src[x];
            }
        }
    } else {
        // out[n*sys + i] = sum_j op(i, j) * in[n*sys + j]
        for (long long n = 0; n < d; ++n) {
            const Complex* src = state.amplitudes.data() + n * sys;
            Complex* dst = out.data() + n * sys;
            for (long long i = 0; i < sys; ++i) {
                Complex acc(0.0, 0.0);
                const Complex* row = op.entries.data() + i * sys;
                for (long long j = 0; j < sys; ++j) acc += row[j] * src[j];
                dst[i] = acc;
            }
        }
    }
    return StateVector(std::move(out));
}

StateVector apply_on_subsystem(const DiagonalOperator& op, Subsystem target,
                               const StateVector& state,
                               const RegisterLayout& layout) {
    const long long sys = layout.system_dim();
    const long long d = layout.ancilla_dim;
    if (state.dim() != layout.joint_dim()) {
        throw std::invalid_argument("apply_on_subsystem: state/layout mismatch");
    }
    const long long want = (target == Subsystem::ancilla) ? d : sys;
    if (op.dim() != want) {
        throw std::invalid_argument("apply_on_subsystem: operator dimension mismatch");
    }

    std::vector<Complex> out(state.amplitudes);
    if (target == Subsystem::ancilla) {
        for (long long n = 0; n < d; ++n) {
            const Complex w = op.diagonal[n];
            Complex* dst = out.data() + n * sys;
            for (long long x = 0; x < sys; ++x) dst[x] *= w;
        }
    } else {
        for (long long n = 0; n < d; ++n) {
            Complex* dst = out.data() + n * sys;
            for (long long x = 0; x < sys; ++x) dst[x] *= op.diagonal[x];
        }
    }
    return StateVector(std::move(out));
}

UnitaryOperator identity_operator(long long dim) {
    std::vector<Complex> e(dim * dim, Complex(0.0, 0.0));
    for (long long i = 0; i < dim; ++i) e[i * dim + i] = Complex(1.0, 0.0);
    return UnitaryOperator(dim, std::move(e));
}

UnitaryOperator matmul(const UnitaryOperator& a, const UnitaryOperator& b) {
    if (a.dim != b.dim) throw std::invalid_argument("matmul: dimension mismatch");
    const long long d = a.dim;
    std::vector<Complex> e(d * d, Complex(0.0, 0.0));
    for (long long i = 0; i < d; ++i) {
        for (long long k = 0; k < d; ++k) {
            const Complex w = a.at(i, k);
            if (w == Complex(0.0, 0.0)) continue;
            for (long long j = 0; j < d; ++j) e[i * d + j] += w * b.at(k, j);
        }
    }
    return UnitaryOperator(d, std::move(e));
}

UnitaryOperator dagger(const UnitaryOperator& a) {
    std::vector<Complex> e(a.dim * a.dim);
    for (long long i = 0; i < a.dim; ++i) {
        for (long long j = 0; j < a.dim; ++j) {
            e[i * a.dim + j] = std::conj(a.at(j, i));
        }
    }
    return UnitaryOperator(a.dim, std::move(e));
}

StateVector apply_dense(const UnitaryOperator& op, const StateVector& state) {
    if (op.dim != state.dim()) {
        throw std::invalid_argument("apply_dense: dimension mismatch");
    }
    std::vector<Complex> out(op.dim, Complex(0.0, 0.0));
    for (long long i = 0; i < op.dim; ++i) {
        Complex acc(0.0, 0.0);
        const Complex* row = op.entries.data() + i * op.dim;
        for (long long j = 0; j < op.dim; ++j) acc += row[j] * state.amplitudes[j];
        out[i] = acc;
    }
    return StateVector(std::move(out));
}

UnitaryOperator to_dense(const DiagonalOperator& op) {
    const long long d = op.dim();
    std::vector<Complex> e(d * d, Complex(0.0, 0.0));
    for (long long i = 0; i < d; ++i) e[i * d + i] = op.diagonal[i];
    return UnitaryOperator(d, std::move(e));
}

double unitarity_defect(const UnitaryOperator& op) {
    const UnitaryOperator gram = matmul(dagger(op), op);
    double worst = 0.0;
    for (long long i = 0; i < op.dim; ++i) {
        for (long long j = 0; j < op.dim; ++j) {
            const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            worst = std::max(worst, std::abs(gram.at(i, j) - want));
        }
    }
    return worst;
}

}  // namespace rodeo
