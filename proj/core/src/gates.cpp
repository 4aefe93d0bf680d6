#include "rodeo/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rodeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_qudit_dim(int d, const char* what) {
    if (d < 2) throw std::invalid_argument(std::string(what) + ": need d >= 2");
}

}  // namespace

UnitaryOperator qft(int d) {
    require_qudit_dim(d, "qft");
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> e(static_cast<size_t>(d) * d);
    for (int l = 0; l < d; ++l) {
        for (int n = 0; n < d; ++n) {
            // Reduce l*n mod d before forming the angle to keep phases exact.
            const int k = (l * n) % d;
            e[static_cast<size_t>(l) * d + n] =
                scale * std::polar(1.0, kTwoPi * k / d);
        }
    }
    return UnitaryOperator(d, std::move(e));
}

UnitaryOperator qft_inverse(int d) {
    require_qudit_dim(d, "qft_inverse");
    return dagger(qft(d));
}

DiagonalOperator phase_shift(int d, double phi) {
    require_qudit_dim(d, "phase_shift");
    std::vector<Complex> diag(d);
    for (int n = 0; n < d; ++n) {
        diag[n] = std::polar(1.0, 2.0 * phi * n / d);
    }
    return DiagonalOperator(std::move(diag));
}

double trial_phase(double energy, int d, double time) {
    return energy * d * time / 2.0;
}

UnitaryOperator shift_op(int d) {
    require_qudit_dim(d, "shift_op");
    std::vector<Complex> e(static_cast<size_t>(d) * d, Complex(0.0, 0.0));
    for (int l = 0; l < d; ++l) {
        e[static_cast<size_t>((l + 1) % d) * d + l] = Complex(1.0, 0.0);
    }
    return UnitaryOperator(d, std::move(e));
}

DiagonalOperator clock_op(int d) {
    require_qudit_dim(d, "clock_op");
    std::vector<Complex> diag(d);
    for (int n = 0; n < d; ++n) {
        diag[n] = std::polar(1.0, kTwoPi * n / d);
    }
    return DiagonalOperator(std::move(diag));
}

DiagonalOperator evolution_operator(const DiagonalHamiltonian& h, double time) {
    if (!std::isfinite(time)) {
        throw std::invalid_argument("evolution_operator: non-finite time");
    }
    std::vector<Complex> diag(h.dim());
    for (long long x = 0; x < h.dim(); ++x) {
        diag[x] = std::polar(1.0, -h.energies[x] * time);
    }
    return DiagonalOperator(std::move(diag));
}

UnitaryOperator controlled_power(const UnitaryOperator& u, int d) {
    require_qudit_dim(d, "controlled_power");
    const long long sys = u.dim;
    const long long dim = d * sys;
    std::vector<Complex> e(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));

    UnitaryOperator power = identity_operator(sys);  // U^0
    for (int n = 0; n < d; ++n) {
        for (long long r = 0; r < sys; ++r) {
            for (long long c = 0; c < sys; ++c) {
                e[static_cast<size_t>(n * sys + r) * dim + (n * sys + c)] =
                    power.at(r, c);
            }
        }
        if (n + 1 < d) power = matmul(power, u);
    }
    return UnitaryOperator(dim, std::move(e));
}

UnitaryOperator controlled_power(const DiagonalOperator& u, int d) {
    return controlled_power(to_dense(u), d);
}

}  // namespace rodeo
