#include "rodeo/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rodeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

void validate(const RodeoRun& run) {
    const long long sys = run.layout.system_dim();
    if (run.hamiltonian.dim() != sys) {
        throw std::invalid_argument("RodeoRun: Hamiltonian/layout dimension mismatch");
    }
    if (run.input_state.dim() != sys) {
        throw std::invalid_argument("RodeoRun: input state/layout dimension mismatch");
    }
    if (!run.input_state.is_normalized(1e-9)) {
        throw std::invalid_argument("RodeoRun: input state is not normalized");
    }
    if (!std::isfinite(run.trial_energy) || !std::isfinite(run.time)) {
        throw std::invalid_argument("RodeoRun: non-finite trial energy or time");
    }
}

StateVector run_circuit(const RodeoRun& run) {
    validate(run);
    const int d = run.layout.ancilla_dim;
    const long long sys = run.layout.system_dim();

    StateVector joint = tensor(make_basis_state(d, 0), run.input_state);
    joint = apply_on_subsystem(qft(d), Subsystem::ancilla, joint, run.layout);

    // Controlled evolution: |n> ⊗ |x> picks up e^{-i E_x t n}.
    const double t = run.time;
    for (int n = 1; n < d; ++n) {
        Complex* block = joint.amplitudes.data() + static_cast<long long>(n) * sys;
        for (long long x = 0; x < sys; ++x) {
            block[x] *= std::polar(1.0, -run.hamiltonian.energies[x] * t * n);
        }
    }

    const double phi = trial_phase(run.trial_energy, d, t);
    joint = apply_on_subsystem(phase_shift(d, phi), Subsystem::ancilla, joint,
                               run.layout);
    joint = apply_on_subsystem(qft_inverse(d), Subsystem::ancilla, joint,
                               run.layout);

    if (std::abs(joint.norm() - 1.0) > kNormDriftGuard) {
        throw NumericError("run_circuit: norm drift beyond guard");
    }
    return joint;
}

Complex dirichlet_sum(int d, double theta) {
    if (d < 2) throw std::invalid_argument("dirichlet_sum: need d >= 2");
    // The sum is 2-pi periodic in theta; reduce first so the phase factor and
    // the ratio are both evaluated at small arguments.
    const double delta = theta - kTwoPi * std::round(theta / kTwoPi);
    const double half = 0.5 * delta;
    const double denom = std::sin(half);

    double ratio;
    if (std::abs(denom) < kDirichletGuard) {
        // Removable singularity: sin(d u)/sin(u) -> d (1 - (d^2-1) u^2 / 6 ...)
        // with u = delta/2; the quadratic term keeps the branch continuous.
        ratio = d * (1.0 - (static_cast<double>(d) * d - 1.0) * delta * delta / 24.0);
    } else {
        ratio = std::sin(d * half) / denom;
    }
    return std::polar(ratio, -(d - 1.0) * half);
}

Complex projection_amplitude(const RodeoRun& run, int n) {
    validate(run);
    const int d = run.layout.ancilla_dim;
    if (n < 0 || n >= d) {
        throw std::invalid_argument("projection_amplitude: level out of range");
    }
    const double t = run.time;
    const double offset = kTwoPi * n / d;

    Complex acc(0.0, 0.0);
    for (long long x = 0; x < run.input_state.dim(); ++x) {
        const double weight = std::norm(run.input_state.amplitudes[x]);
        if (weight == 0.0) continue;
        const double omega = run.hamiltonian.energies[x] - run.trial_energy;
        acc += weight * dirichlet_sum(d, omega * t + offset);
    }
    return acc / static_cast<double>(d);
}

MeasurementDistribution measurement_distribution(const RodeoRun& run) {
    const StateVector out = run_circuit(run);
    const int d = run.layout.ancilla_dim;
    const long long sys = run.layout.system_dim();

    MeasurementDistribution dist;
    dist.probs.resize(d, 0.0);
    for (int n = 0; n < d; ++n) {
        const Complex* block = out.amplitudes.data() + static_cast<long long>(n) * sys;
        double p = 0.0;
        for (long long x = 0; x < sys; ++x) p += std::norm(block[x]);
        dist.probs[n] = p;
    }
    return dist;
}

double eigenstate_level_probability(int d, int n, double delta) {
    if (d < 2) throw std::invalid_argument("eigenstate_level_probability: need d >= 2");
    if (n < 0 || n >= d) {
        throw std::invalid_argument("eigenstate_level_probability: level out of range");
    }
    // delta = w t d / 2, so the Dirichlet argument is 2*(delta + pi n)/d.
    const double theta = 2.0 * (delta + kPi * n) / d;
    return std::norm(dirichlet_sum(d, theta)) / (static_cast<double>(d) * d);
}

Complex rodeo_kernel(int d, double omega, double time) {
    if (d < 2) throw std::invalid_argument("rodeo_kernel: need d >= 2");
    const Complex low = std::polar(1.0, -omega * time);            // e^{-i w t}
    const Complex high = std::polar(1.0, (d - 1.0) * omega * time);  // e^{+i w' t}
    // Written as low + (high - low)/d so that K(0, t) == 1 exactly and the
    // d = 2 imaginary part cancels bitwise.
    return low + (high - low) / static_cast<double>(d);
}

Complex expectation_value(const RodeoRun& run) {
    const MeasurementDistribution dist = measurement_distribution(run);
    const int d = run.layout.ancilla_dim;
    Complex acc(0.0, 0.0);
    for (int n = 0; n < d; ++n) {
        acc += dist.probs[n] * std::polar(1.0, kTwoPi * n / d);
    }
    return acc;
}

Complex expectation_value_kernel(const RodeoRun& run) {
    validate(run);
    const int d = run.layout.ancilla_dim;
    Complex acc(0.0, 0.0);
    for (long long x = 0; x < run.input_state.dim(); ++x) {
        const double weight = std::norm(run.input_state.amplitudes[x]);
        if (weight == 0.0) continue;
        const double omega = run.hamiltonian.energies[x] - run.trial_energy;
        acc += weight * rodeo_kernel(d, omega, run.time);
    }
    return acc;
}

Complex loschmidt_amplitude(const StateVector& psi, const DiagonalHamiltonian& h,
                            double trial_energy, double time) {
    if (psi.dim() != h.dim()) {
        throw std::invalid_argument("loschmidt_amplitude: dimension mismatch");
    }
    Complex acc(0.0, 0.0);
    for (long long x = 0; x < psi.dim(); ++x) {
        const double weight = std::norm(psi.amplitudes[x]);
        if (weight == 0.0) continue;
        acc += weight * std::polar(1.0, -(h.energies[x] - trial_energy) * time);
    }
    return acc;
}

Complex h_from_loschmidt(int d, Complex loschmidt) {
    if (d < 2) throw std::invalid_argument("h_from_loschmidt: need d >= 2");
    const double dd = static_cast<double>(d);
    return (dd - 1.0) / dd * loschmidt +
           std::pow(std::conj(loschmidt), dd - 1.0) / dd;
}

}  // namespace rodeo
