#include "hankel/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hankel {

namespace {

int matrix_size_for(const SymmetricTensor& x) {
    const int span = (x.dim() - 1) * x.order();
    if (span % 2 != 0)
        throw UnsupportedShape("completion: (n-1)m must be even for the associated-matrix map");
    return span / 2 + 1;
}

SymMatrix hankel_matrix_from(std::span<const double> v) {
    if (v.size() % 2 == 0) throw UnsupportedShape("apply_M: vector length must be 2l - 1");
    const int l = static_cast<int>(v.size() + 1) / 2;
    SymMatrix a(l);
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) a.set(i, j, v[i + j]);
    return a;
}

std::vector<double> alpha_weights(int m, int n) {
    const int r = GeneratingVector::expected_length(m, n);
    std::vector<double> alpha(r);
    for (int k = 0; k < r; ++k) alpha[k] = static_cast<double>(alpha_count(m, n, k));
    return alpha;
}

}  // namespace

void CompletionConfig::validate() const {
    if (mu < 0.0) throw InvalidInput("config: mu must be >= 0");
    if (!(rho > 0.0)) throw InvalidInput("config: rho must be > 0");
    if (!(tol_primal > 0.0) || !(tol_dual > 0.0))
        throw InvalidInput("config: tolerances must be > 0");
    if (max_iter < 1) throw InvalidInput("config: max_iter must be positive");
    if (!(rank_threshold > 0.0 && rank_threshold < 1.0))
        throw InvalidInput("config: rank_threshold must lie in (0, 1)");
    if (fixed_iterations && *fixed_iterations < 1)
        throw InvalidInput("config: fixed_iterations must be positive");
}

SymmetricTensor apply_P(const GeneratingVector& gv) { return hankel_from_gv(gv); }

std::vector<double> apply_P_adjoint(const SymmetricTensor& x) {
    std::vector<double> out(GeneratingVector::expected_length(x.order(), x.dim()), 0.0);
    for (size_t s = 0; s < x.value_count(); ++s) {
        const MultiIndex& idx = x.index_at(s);
        const int k = std::accumulate(idx.begin(), idx.end(), 0) - x.order();
        out[k] += static_cast<double>(x.orbit_weight(s)) * x.value_at(s);
    }
    return out;
}

SymMatrix apply_M(const GeneratingVector& gv) {
    if (gv.max_index() % 2 != 0)
        throw UnsupportedShape("apply_M: (n-1)m must be even");
    return hankel_matrix_from(gv.v);
}

SymMatrix apply_M(std::span<const double> v) { return hankel_matrix_from(v); }

std::vector<double> apply_M_adjoint(const SymMatrix& z) {
    const int l = z.dim();
    std::vector<double> out(2 * l - 1, 0.0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) out[i + j] += z(i, j);
    return out;
}

int anti_diagonal_count(int matrix_size, int k) {
    return std::min(k + 1, 2 * matrix_size - 1 - k);
}

double objective_value(const GeneratingVector& gv, const SymMatrix& a,
                       const SymmetricTensor& x, double mu) {
    const double misfit = frobenius_distance(apply_P(gv), x);
    double trace = 0.0;
    for (int i = 0; i < a.dim(); ++i) trace += a(i, i);
    return 0.5 * misfit * misfit + mu * trace;
}

double augmented_lagrangian(const GeneratingVector& gv, const SymMatrix& a, const SymMatrix& z,
                            const SymmetricTensor& x, double mu, double rho) {
    const SymMatrix gap = a - apply_M(gv);
    const double gap_norm = gap.frobenius_norm();
    return objective_value(gv, a, x, mu) + frobenius_dot(z, gap) +
           0.5 * rho * gap_norm * gap_norm;
}

std::vector<double> v_update(const SymMatrix& a, const SymMatrix& z, const SymmetricTensor& x,
                             double rho) {
    const int m = x.order();
    const int n = x.dim();
    const int l = matrix_size_for(x);
    if (a.dim() != l || z.dim() != l) throw InvalidInput("v_update: matrix size mismatch");

    const std::vector<double> px = apply_P_adjoint(x);
    const std::vector<double> madj = apply_M_adjoint(rho * a + z);
    const std::vector<double> alpha = alpha_weights(m, n);

    std::vector<double> v(px.size());
    for (size_t k = 0; k < v.size(); ++k) {
        const double weight = alpha[k] + rho * anti_diagonal_count(l, static_cast<int>(k));
        v[k] = (px[k] + madj[k]) / weight;
    }
    return v;
}

SymMatrix a_update(std::span<const double> v, const SymMatrix& z, double mu, double rho) {
    SymMatrix target = apply_M(v);
    target -= (1.0 / rho) * (mu * SymMatrix::identity(z.dim()) + z);
    return psd_project(target);
}

SymMatrix z_update(const SymMatrix& z, const SymMatrix& a, std::span<const double> v,
                   double rho) {
    return z + rho * (a - apply_M(v));
}

CompletionResult solve_tcp(const SymmetricTensor& x, const CompletionConfig& config) {
    config.validate();
    const int m = x.order();
    const int n = x.dim();
    if (m % 2 != 0) throw UnsupportedShape("solve_tcp: order must be even");
    const int l = matrix_size_for(x);
    const int r = GeneratingVector::expected_length(m, n);

    const std::vector<double> px = apply_P_adjoint(x);
    const std::vector<double> alpha = alpha_weights(m, n);
    std::vector<double> pair_count(r);
    for (int k = 0; k < r; ++k) pair_count[k] = anti_diagonal_count(l, k);

    // Diagonal weights and data of the least-squares term.
    std::vector<double> fit_weight(r), fit_data(r);
    for (int k = 0; k < r; ++k) {
        if (config.fit == FitObjective::tensor) {
            fit_weight[k] = alpha[k];
            fit_data[k] = px[k];
        } else {
            fit_weight[k] = pair_count[k];
            fit_data[k] = pair_count[k] * (px[k] / alpha[k]);
        }
    }

    AdmmState state{std::vector<double>(r, 0.0), SymMatrix(l), SymMatrix(l), 0, 0.0, 0.0};

    CompletionResult result{GeneratingVector(m, n, state.v), state.a, 0.0, 0, 0, false, {}};
    const int budget = config.fixed_iterations ? *config.fixed_iterations : config.max_iter;
    result.residual_history.reserve(std::min(budget, 4096));

    while (state.iter < budget) {
        ++state.iter;
        const std::vector<double> v_prev = state.v;

        const std::vector<double> madj = apply_M_adjoint(config.rho * state.a + state.z);
        for (int k = 0; k < r; ++k)
            state.v[k] = (fit_data[k] + madj[k]) / (fit_weight[k] + config.rho * pair_count[k]);

        state.a = a_update(state.v, state.z, config.mu, config.rho);
        const SymMatrix mv = apply_M(state.v);
        state.z += config.rho * (state.a - mv);

        std::vector<double> dv(r);
        for (int k = 0; k < r; ++k) dv[k] = state.v[k] - v_prev[k];
        state.primal_residual = (state.a - mv).frobenius_norm();
        state.dual_residual = config.rho * apply_M(dv).frobenius_norm();
        result.residual_history.emplace_back(state.primal_residual, state.dual_residual);

        const bool met =
            state.primal_residual <= config.tol_primal * (1.0 + mv.frobenius_norm()) &&
            state.dual_residual <= config.tol_dual * (1.0 + state.z.frobenius_norm());
        if (config.fixed_iterations) {
            result.converged = met;  // report the final residual state honestly
        } else if (met) {
            result.converged = true;
            break;
        }
    }

    result.iterations = state.iter;
    result.v = GeneratingVector(m, n, state.v);
    result.a = state.a;
    result.objective = objective_value(result.v, state.a, x, config.mu);
    result.numerical_rank = numerical_rank(state.a, config.rank_threshold);

    if (!result.converged && !config.fixed_iterations)
        throw NonConvergence("solve_tcp: residual tolerances not met within max_iter", result);
    return result;
}

int numerical_rank(const SymMatrix& a, double threshold) {
    const std::vector<double> eig = sym_eig(a).eigenvalues;
    const double lam_max = eig.back();
    if (!(lam_max > 0.0)) return 0;
    int rank = 0;
    for (double lam : eig)
        if (lam > threshold * lam_max) ++rank;
    return rank;
}

}  // namespace hankel
