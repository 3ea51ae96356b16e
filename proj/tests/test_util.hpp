// Shared helpers for the test suites: a self-contained deterministic RNG
// (identical streams on every platform) and small generators.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hankel/numeric.hpp"

namespace test_util {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gaussian() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
    }

    std::vector<double> vector(int n, double lo = -1.0, double hi = 1.0) {
        std::vector<double> x(n);
        for (double& c : x) c = uniform(lo, hi);
        return x;
    }

    std::vector<double> gaussian_vector(int n) {
        std::vector<double> x(n);
        for (double& c : x) c = gaussian();
        return x;
    }

    hankel::SymMatrix sym_matrix(int n, double scale = 1.0) {
        hankel::SymMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s.set(i, j, scale * uniform(-1.0, 1.0));
        return s;
    }

private:
    std::uint64_t state_;
};

inline double norm2(const std::vector<double>& x) {
    double sum = 0.0;
    for (double c : x) sum += c * c;
    return std::sqrt(sum);
}

// Degree-ascending coefficients of prod (t - roots[i]).
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<double> coeffs{1.0};
    for (double r : roots) {
        std::vector<double> next(coeffs.size() + 1, 0.0);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace test_util
