#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hankel/numeric.hpp"
#include "hankel/sym_tensor.hpp"

namespace hankel {

// Length-((n-1)m + 1) vector v defining a Hankel tensor: the entry at any
// multi-index equals v[index sum - m].
struct GeneratingVector {
    int order;
    int dim;
    std::vector<double> v;

    GeneratingVector(int order, int dim, std::vector<double> values);

    static int expected_length(int order, int dim) { return (dim - 1) * order + 1; }
    int max_index() const { return (dim - 1) * order; }  // highest v subscript
};

// l x l matrix with constant anti-diagonals a(i,j) = v[i+j] (0-based),
// l = ceil(((n-1)m + 2) / 2). When (n-1)m is odd the last anti-diagonal is
// not determined by v; `tail` records the extra value used there.
class HankelMatrix {
public:
    HankelMatrix(std::vector<double> anti_diagonals, std::optional<double> tail);

    int size() const { return static_cast<int>((anti_diagonals_.size() + 1) / 2); }
    double operator()(int i, int j) const { return anti_diagonals_[i + j]; }
    std::optional<double> tail() const { return tail_; }

    SymMatrix to_sym_matrix() const;

private:
    std::vector<double> anti_diagonals_;  // length 2l - 1
    std::optional<double> tail_;
};

// Coefficients alpha_i and pairwise-distinct nodes gamma_i representing
// sum_i alpha_i * u_i^(x)m with u_i = (1, gamma_i, ..., gamma_i^(n-1)).
struct VandermondeDecomposition {
    int order;
    int dim;
    std::vector<double> coefficients;
    std::vector<double> nodes;
    double residual = 0.0;             // max |reconstructed v - v| of the solve
    bool conditioning_warning = false; // residual exceeded tolerance
};

// Nonnegative samples h(t_j) on a uniform grid t_j = t0 + j*dt.
struct SampledGeneratingFunction {
    double t0;
    double dt;
    std::vector<double> values;

    SampledGeneratingFunction(double t0, double dt, std::vector<double> values);
};

struct StrongHankelReport {
    bool verdict;
    double min_eigenvalue;           // of the (best) associated matrix
    std::optional<double> tail_used; // only when (n-1)m is odd
};

SymmetricTensor hankel_from_gv(const GeneratingVector& gv);

// Inverse of hankel_from_gv; throws HankelViolation when two equal-sum
// entries disagree beyond 1e-12 * max |entry|.
GeneratingVector gv_from_tensor(const SymmetricTensor& t);

// Evaluates the Hankel polynomial without building the tensor:
// f(x) = sum_k v_k * [t^k] (x_1 + x_2 t + ... + x_n t^(n-1))^m.
double hankel_eval(const GeneratingVector& gv, std::span<const double> x);

// tail must be supplied exactly when (n-1)m is odd.
HankelMatrix associated_hankel_matrix(const GeneratingVector& gv,
                                      std::optional<double> tail = std::nullopt);

// Positive semidefiniteness of the associated Hankel matrix. For odd (n-1)m
// the free tail entry is chosen to maximize the smallest eigenvalue
// (golden-section search over [-B, B], B = 10 * max |v|).
StrongHankelReport is_strong_hankel(const GeneratingVector& gv, double tol);

// Number of ordered tuples in [n]^m with index sum m + k; exact integer DP.
std::uint64_t alpha_count(int m, int n, int k);

// r Chebyshev points of the second kind on [-1, 1], r = (n-1)m + 1.
std::vector<double> chebyshev_nodes(int r);

// Solves the r x r Vandermonde system v_k = sum_i alpha_i gamma_i^k.
// Default nodes are Chebyshev; supplying nodes lifts the r <= 30 limit.
VandermondeDecomposition vandermonde_decompose(
    const GeneratingVector& gv,
    const std::optional<std::vector<double>>& nodes = std::nullopt);

SymmetricTensor reconstruct(const VandermondeDecomposition& d);

// Midpoint-rule power moments v_k = sum_j t_j^k h(t_j) dt for k = 0..(n-1)m.
GeneratingVector moments_from_samples(const SampledGeneratingFunction& h, int order, int dim);

}  // namespace hankel
