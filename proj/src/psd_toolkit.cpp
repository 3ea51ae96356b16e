#include "hankel/psd_toolkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;  // strictly inside (0,1)
}

// Deterministic unit Gaussian direction for (seed, counter); independent of
// call order so parallel evaluation cannot change the sample set.
std::vector<double> unit_direction(std::uint64_t seed, std::uint64_t counter, int n) {
    const std::uint64_t base = splitmix64(seed + 0x9E3779B97F4A7C15ull * (counter + 1));
    std::vector<double> x(n);
    for (int j = 0; j < n; j += 2) {
        const double u1 = uniform01(splitmix64(base + 2 * j));
        const double u2 = uniform01(splitmix64(base + 2 * j + 1));
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::acos(-1.0) * u2;
        x[j] = radius * std::cos(angle);
        if (j + 1 < n) x[j + 1] = radius * std::sin(angle);
    }
    double norm = 0.0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
        x.assign(n, 0.0);
        x[0] = 1.0;
        return x;
    }
    for (double& c : x) c /= norm;
    return x;
}

double binomial(int n, int k) {
    double value = 1.0;
    for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
    return value;
}

std::vector<double> derivative(std::span<const double> coeffs) {
    std::vector<double> d;
    for (size_t k = 1; k < coeffs.size(); ++k) d.push_back(static_cast<double>(k) * coeffs[k]);
    return d;
}

}  // namespace

std::string to_string(PsdStatus status) {
    switch (status) {
        case PsdStatus::pass: return "PASS";
        case PsdStatus::fail_necessary: return "FAIL_NECESSARY";
        case PsdStatus::fail_witness: return "FAIL_WITNESS";
    }
    return "UNKNOWN";
}

PhiPolynomial phi_coefficients(const GeneratingVector& gv) {
    PhiPolynomial phi;
    phi.coefficients.resize(gv.v.size());
    for (size_t k = 0; k < gv.v.size(); ++k)
        phi.coefficients[k] =
            static_cast<double>(alpha_count(gv.order, gv.dim, static_cast<int>(k))) * gv.v[k];
    return phi;
}

PsdVerdict necessary_condition(const GeneratingVector& gv) {
    double scale = 0.0;
    for (double c : phi_coefficients(gv).coefficients) scale = std::max(scale, std::fabs(c));
    return necessary_condition(gv, 1e-9 * (1.0 + scale));
}

PsdVerdict necessary_condition(const GeneratingVector& gv, double tol) {
    if (gv.order % 2 != 0) throw InvalidInput("necessary_condition: order must be even");

    std::vector<double> phi = phi_coefficients(gv).coefficients;
    while (!phi.empty() && phi.back() == 0.0) phi.pop_back();

    const auto moment_curve = [&](double t) {
        std::vector<double> x(gv.dim);
        double power = 1.0;
        for (int i = 0; i < gv.dim; ++i) {
            x[i] = power;
            power *= t;
        }
        return x;
    };
    const auto fail_at = [&](double t, double value) {
        return PsdVerdict{PsdStatus::fail_necessary, value, t, moment_curve(t)};
    };

    if (phi.empty()) return {PsdStatus::pass, 0.0, std::nullopt, std::nullopt};
    const int degree = static_cast<int>(phi.size()) - 1;
    if (degree == 0) {
        if (phi[0] >= -tol) return {PsdStatus::pass, phi[0], std::nullopt, std::nullopt};
        return fail_at(0.0, phi[0]);
    }

    double cauchy = 0.0;
    for (int i = 0; i < degree; ++i) cauchy = std::max(cauchy, std::fabs(phi[i] / phi[degree]));
    const double far = 1.0 + cauchy;

    if (degree % 2 == 1 || phi[degree] < 0.0) {
        // Unbounded below: walk outward on the side where phi heads to -inf.
        double t = degree % 2 == 1 ? (phi[degree] > 0.0 ? -far : far) : far;
        double value = polynomial_eval(phi, t);
        if (degree % 2 == 0) {  // negative even leading: either side works, pick lower
            const double other = polynomial_eval(phi, -t);
            if (other < value) {
                t = -t;
                value = other;
            }
        }
        for (int guard = 0; guard < 200 && value > -2.0 * tol - 1e-300; ++guard) {
            t *= 2.0;
            value = polynomial_eval(phi, t);
        }
        return fail_at(t, value);
    }

    // Even degree with positive leading coefficient: the global minimum sits
    // at a critical point; probe those plus guard points.
    std::vector<double> candidates = real_roots(derivative(phi));
    double reach = 1.0;
    for (double t : candidates) reach = std::max(reach, std::fabs(t));
    candidates.push_back(0.0);
    candidates.push_back(1.0 + reach);
    candidates.push_back(-(1.0 + reach));

    double min_value = polynomial_eval(phi, candidates[0]);
    double min_t = candidates[0];
    for (double t : candidates) {
        const double value = polynomial_eval(phi, t);
        if (value < min_value) {
            min_value = value;
            min_t = t;
        }
    }
    if (min_value >= -tol) return {PsdStatus::pass, min_value, std::nullopt, std::nullopt};
    return fail_at(min_t, min_value);
}

PsdVerdict falsify_psd(const GeneratingVector& gv, int samples, std::uint64_t seed) {
    double norm = 0.0;
    for (double x : gv.v) norm += x * x;
    return falsify_psd(gv, samples, seed, 1e-9 * std::sqrt(norm));
}

PsdVerdict falsify_psd(const GeneratingVector& gv, int samples, std::uint64_t seed, double tol) {
    if (gv.order % 2 != 0) throw InvalidInput("falsify_psd: order must be even");
    if (samples < 1) throw InvalidInput("falsify_psd: need at least one sample");
    const int n = gv.dim;

    double min_value = std::numeric_limits<double>::infinity();
    std::vector<double> min_x;
    const auto probe = [&](const std::vector<double>& x) {
        const double value = hankel_eval(gv, x);
        if (value < min_value) {
            min_value = value;
            min_x = x;
        }
    };

    for (int i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        probe(e);
        e[i] = -1.0;
        probe(e);
    }

    // Moment-curve directions: exactly the family the necessary condition
    // inspects, normalized onto the unit sphere.
    for (int j = 0; j <= 100; ++j) {
        const double t = -5.0 + 0.1 * j;
        std::vector<double> x(n);
        double power = 1.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = power;
            norm += power * power;
            power *= t;
        }
        norm = std::sqrt(norm);
        for (double& c : x) c /= norm;
        probe(x);
    }

    for (int i = 0; i < samples; ++i) probe(unit_direction(seed, static_cast<std::uint64_t>(i), n));

    if (min_value < -tol)
        return {PsdStatus::fail_witness, min_value, std::nullopt, std::move(min_x)};
    return {PsdStatus::pass, min_value, std::nullopt, std::nullopt};
}

GeneratingVector sos_family_n2(int k) {
    if (k < 2) throw InvalidInput("sos_family_n2: k must be >= 2");
    const int m = 2 * k;
    std::vector<double> v(m + 1, 0.0);
    v[0] = v[m] = 1.0;
    v[2] = v[m - 2] = -1.0 / binomial(m, 2);
    return GeneratingVector(m, 2, std::move(v));
}

double sos_witness_n2(int k, std::span<const double> x) {
    if (k < 2) throw InvalidInput("sos_witness_n2: k must be >= 2");
    if (x.size() != 2) throw InvalidInput("sos_witness_n2: point must have dimension 2");
    const auto y = [&](int j) {  // x1^(k-j) x2^j
        return std::pow(x[0], k - j) * std::pow(x[1], j);
    };
    double total = 0.0;
    for (int j = 0; j <= k - 2; ++j) {
        const double diff = y(j) - y(j + 2);
        total += diff * diff;
    }
    // At k = 2 the polynomial keeps an extra (x1 x2)^2 beyond the telescoped
    // squares; for k >= 3 the telescoping is exact.
    if (k == 2) total += y(1) * y(1);
    return total;
}

GeneratingVector sextic_family_n3(double alpha) {
    std::vector<double> v(13, 0.0);
    v[0] = v[12] = alpha;
    v[6] = 1.0;
    return GeneratingVector(6, 3, std::move(v));
}

double sextic_witness_n3(double alpha, std::span<const double> x) {
    if (x.size() != 3) throw InvalidInput("sextic_witness_n3: point must have dimension 3");
    const double x1 = x[0], x2 = x[1], x3 = x[2];
    const double cubes = x1 * x1 * x1 + x3 * x3 * x3;
    const double mixed = x2 * x2 + 30.0 * x1 * x3;
    const auto sixth = [](double t) { return t * t * t * t * t * t; };
    return 10.0 * cubes * cubes + 0.5 * x2 * x2 * mixed * mixed +
           (alpha - 10.0) * (sixth(x1) + sixth(x3)) + 0.5 * sixth(x2) -
           360.0 * x1 * x1 * x2 * x2 * x3 * x3;
}

}  // namespace hankel
