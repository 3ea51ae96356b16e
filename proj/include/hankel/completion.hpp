#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/hankel_core.hpp"
#include "hankel/numeric.hpp"
#include "hankel/sym_tensor.hpp"

namespace hankel {

// Which least-squares data term the solver minimizes alongside mu * tr(A).
//   tensor:            (1/2) ||P(v) - X||^2 over the full ordered index space.
//   hankelized_matrix: (1/2) ||M(v) - M(vbar)||_F^2 where vbar holds the
//                      anti-diagonal orbit means of X. This fits the
//                      associated matrix to the Hankelized data instead of
//                      the tensor itself (the classical matrix-side
//                      weighting); the bundled demo outputs use it.
enum class FitObjective { tensor, hankelized_matrix };

struct CompletionConfig {
    double mu = 0.1;            // trace-norm weight, >= 0
    double rho = 10.0;          // augmented-Lagrangian penalty, > 0
    double tol_primal = 1e-8;   // relative, on ||A - Mv||_F
    double tol_dual = 1e-8;     // relative, on rho ||M(v - v_prev)||_F
    int max_iter = 50000;
    double rank_threshold = 1e-2;  // relative eigenvalue cutoff, in (0,1)
    FitObjective fit = FitObjective::tensor;
    // When set, run exactly this many iterations with no residual stop and
    // report convergence honestly; reproduces fixed-budget runs.
    std::optional<int> fixed_iterations;

    void validate() const;
};

struct AdmmState {
    std::vector<double> v;
    SymMatrix a;
    SymMatrix z;
    int iter = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
};

struct CompletionResult {
    GeneratingVector v;
    SymMatrix a;
    double objective = 0.0;
    int numerical_rank = 0;
    int iterations = 0;
    bool converged = false;
    std::vector<std::pair<double, double>> residual_history;  // (primal, dual)
};

// Hit max_iter with residuals above tolerance; carries the final state.
struct NonConvergence : Error {
    CompletionResult result;
    NonConvergence(const std::string& msg, CompletionResult r)
        : Error(msg), result(std::move(r)) {}
};

// P fills every tensor entry from v; P* sums entries over equal index sums.
SymmetricTensor apply_P(const GeneratingVector& gv);
std::vector<double> apply_P_adjoint(const SymmetricTensor& x);

// M is the associated-matrix map (even (n-1)m only); M* sums anti-diagonals.
SymMatrix apply_M(const GeneratingVector& gv);
SymMatrix apply_M(std::span<const double> v);
std::vector<double> apply_M_adjoint(const SymMatrix& z);

// Anti-diagonal pair count: diagonal of M*M.
int anti_diagonal_count(int matrix_size, int k);

double objective_value(const GeneratingVector& gv, const SymMatrix& a,
                       const SymmetricTensor& x, double mu);

double augmented_lagrangian(const GeneratingVector& gv, const SymMatrix& a, const SymMatrix& z,
                            const SymmetricTensor& x, double mu, double rho);

// One ADMM step each, for the tensor fit objective. P*P and M*M are
// diagonal, so the v step is a closed-form elementwise divide.
std::vector<double> v_update(const SymMatrix& a, const SymMatrix& z, const SymmetricTensor& x,
                             double rho);
SymMatrix a_update(std::span<const double> v, const SymMatrix& z, double mu, double rho);
SymMatrix z_update(const SymMatrix& z, const SymMatrix& a, std::span<const double> v, double rho);

// Full solve from (v, A, Z) = (0, 0, 0). Throws UnsupportedShape for odd
// order and NonConvergence when max_iter is exhausted (unless a fixed
// iteration budget was requested).
CompletionResult solve_tcp(const SymmetricTensor& x, const CompletionConfig& config);

// Count of eigenvalues above threshold * lambda_max; zero matrix has rank 0.
int numerical_rank(const SymMatrix& a, double threshold);

}  // namespace hankel
