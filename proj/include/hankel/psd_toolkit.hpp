#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankel/hankel_core.hpp"

namespace hankel {

// Coefficients of phi(t) = f(1, t, t^2, ..., t^(n-1)): c_k = alpha(m,k) v_k.
// phi >= 0 on the real line is necessary for the Hankel tensor to be PSD.
struct PhiPolynomial {
    std::vector<double> coefficients;
};

enum class PsdStatus { pass, fail_necessary, fail_witness };

std::string to_string(PsdStatus status);

struct PsdVerdict {
    PsdStatus status;
    double margin;                                // smallest value encountered
    std::optional<double> witness_t;              // curve parameter, necessary check
    std::optional<std::vector<double>> witness_x; // direction with f(x) = margin
};

PhiPolynomial phi_coefficients(const GeneratingVector& gv);

// Decides phi(t) >= -tol for all real t via the critical points of phi.
// Default tol is 1e-9 * (1 + max |c_k|). Even order only.
PsdVerdict necessary_condition(const GeneratingVector& gv);
PsdVerdict necessary_condition(const GeneratingVector& gv, double tol);

// Numerical PSD falsifier: evaluates f on +-e_i, on normalized moment
// curve points x(t) for 101 values of t in [-5, 5], and on `samples`
// deterministic pseudorandom unit directions. FAIL_WITNESS reports the
// minimizing direction; PASS means no counterexample found, not a
// certificate. Default tol is 1e-9 * ||v||.
PsdVerdict falsify_psd(const GeneratingVector& gv, int samples, std::uint64_t seed);
PsdVerdict falsify_psd(const GeneratingVector& gv, int samples, std::uint64_t seed, double tol);

// Order-2k dimension-2 Hankel tensors that are sums of squares but neither
// strong nor completely decomposable; k >= 2.
GeneratingVector sos_family_n2(int k);

// Explicit sum-of-squares form of the same tensor, evaluated at x.
double sos_witness_n2(int k, std::span<const double> x);

// Order-6 dimension-3 Hankel family f = alpha x1^6 + x2^6 + 30 x1 x2^4 x3
// + 90 x1^2 x2^2 x3^2 + 20 x1^3 x3^3 + alpha x3^6; PSD for large alpha yet
// never strong.
GeneratingVector sextic_family_n3(double alpha);

// Square-plus-tail certificate for the sextic family, evaluated at x;
// agrees with the polynomial identically and is visibly nonnegative for
// alpha >= 480 sqrt(15) + 10.
double sextic_witness_n3(double alpha, std::span<const double> x);

}  // namespace hankel
