#include "rodeo/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rodeo {

std::vector<double> local_sz(Spin spin) {
    switch (spin) {
        case Spin::half: return {1.0, -1.0};
        case Spin::one: return {1.0, 0.0, -1.0};
    }
    throw std::invalid_argument("local_sz: unknown spin");
}

int local_dim(Spin spin) { return spin == Spin::half ? 2 : 3; }

DiagonalHamiltonian ising_diagonal(Spin spin, int n_sites, double coupling) {
    if (n_sites < 2) {
        throw std::invalid_argument("ising_diagonal: periodic chain needs N >= 2");
    }
    const std::vector<double> sz = local_sz(spin);
    const int dprime = static_cast<int>(sz.size());

    long long dim = 1;
    for (int i = 0; i < n_sites; ++i) {
        dim *= dprime;
        if (dim > kMaxSystemDim) {
            throw std::invalid_argument("ising_diagonal: d'^N exceeds enumeration bound");
        }
    }

    DiagonalHamiltonian h;
    h.local_dim = dprime;
    h.n_sites = n_sites;
    h.coupling = coupling;
    h.energies.resize(dim);

    std::vector<int> digits(n_sites);
    for (long long x = 0; x < dim; ++x) {
        long long rest = x;
        for (int site = n_sites - 1; site >= 0; --site) {
            digits[site] = static_cast<int>(rest % dprime);
            rest /= dprime;
        }
        double bond_sum = 0.0;
        for (int site = 0; site < n_sites; ++site) {
            const int next = (site + 1) % n_sites;
            bond_sum += sz[digits[site]] * sz[digits[next]];
        }
        h.energies[x] = -coupling * bond_sum;
    }
    return h;
}

SpectrumSummary spectrum_summary(const DiagonalHamiltonian& h) {
    std::vector<double> sorted = h.energies;
    std::sort(sorted.begin(), sorted.end());

    SpectrumSummary summary;
    for (double e : sorted) {
        if (!summary.energies.empty() &&
            std::abs(e - summary.energies.back()) <= kLevelMatchTol) {
            ++summary.degeneracies.back();
        } else {
            summary.energies.push_back(e);
            summary.degeneracies.push_back(1);
        }
    }
    return summary;
}

std::vector<double> decode_config(long long x, Spin spin, int n_sites) {
    const std::vector<double> sz = local_sz(spin);
    const int dprime = static_cast<int>(sz.size());
    std::vector<double> values(n_sites);
    long long rest = x;
    for (int site = n_sites - 1; site >= 0; --site) {
        values[site] = sz[rest % dprime];
        rest /= dprime;
    }
    if (rest != 0) {
        throw std::invalid_argument("decode_config: index out of range");
    }
    return values;
}

long long encode_config(const std::vector<double>& site_values, Spin spin) {
    const std::vector<double> sz = local_sz(spin);
    long long x = 0;
    for (double m : site_values) {
        const auto it = std::find(sz.begin(), sz.end(), m);
        if (it == sz.end()) {
            throw std::invalid_argument("encode_config: value is not a level of this spin");
        }
        x = x * static_cast<long long>(sz.size()) + (it - sz.begin());
    }
    return x;
}

}  // namespace rodeo
