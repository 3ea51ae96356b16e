#include "hankel/hankel_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

bool needs_tail(const GeneratingVector& gv) { return gv.max_index() % 2 == 1; }

double max_abs(std::span<const double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::fabs(x));
    return m;
}

// Coefficients of (x_1 + x_2 t + ... + x_n t^(n-1))^m.
std::vector<double> power_of_linear_form(std::span<const double> x, int m) {
    std::vector<double> acc{1.0};
    std::vector<double> base(x.begin(), x.end());
    for (int step = 0; step < m; ++step) {
        std::vector<double> next(acc.size() + base.size() - 1, 0.0);
        for (size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0.0) continue;
            for (size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i] * base[j];
        }
        acc = std::move(next);
    }
    return acc;
}

double min_eigenvalue(const SymMatrix& a) { return sym_eig(a).eigenvalues.front(); }

}  // namespace

GeneratingVector::GeneratingVector(int order_in, int dim_in, std::vector<double> values)
    : order(order_in), dim(dim_in), v(std::move(values)) {
    if (order < 2 || dim < 2) throw InvalidInput("GeneratingVector: order and dim must be >= 2");
    if (static_cast<int>(v.size()) != expected_length(order, dim))
        throw InvalidInput("GeneratingVector: length must be (dim-1)*order + 1");
    for (double x : v)
        if (!std::isfinite(x)) throw InvalidInput("GeneratingVector: non-finite entry");
}

HankelMatrix::HankelMatrix(std::vector<double> anti_diagonals, std::optional<double> tail)
    : anti_diagonals_(std::move(anti_diagonals)), tail_(tail) {
    if (anti_diagonals_.size() % 2 == 0)
        throw InvalidInput("HankelMatrix: anti-diagonal count must be 2l - 1");
}

SymMatrix HankelMatrix::to_sym_matrix() const {
    const int l = size();
    SymMatrix a(l);
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) a.set(i, j, (*this)(i, j));
    return a;
}

SampledGeneratingFunction::SampledGeneratingFunction(double t0_in, double dt_in,
                                                     std::vector<double> values_in)
    : t0(t0_in), dt(dt_in), values(std::move(values_in)) {
    if (!(dt > 0.0) || !std::isfinite(t0)) throw InvalidInput("sampled function: bad grid");
    for (double h : values)
        if (!(h >= 0.0) || !std::isfinite(h))
            throw InvalidInput("sampled function: values must be nonnegative");
}

SymmetricTensor hankel_from_gv(const GeneratingVector& gv) {
    return make_tensor(gv.order, gv.dim, [&](const MultiIndex& idx) {
        const int sum = std::accumulate(idx.begin(), idx.end(), 0);
        return gv.v[sum - gv.order];
    });
}

GeneratingVector gv_from_tensor(const SymmetricTensor& t) {
    const int length = GeneratingVector::expected_length(t.order(), t.dim());
    std::vector<double> v(length, 0.0);
    std::vector<size_t> seen_slot(length, 0);
    std::vector<bool> seen(length, false);

    double scale = 0.0;
    for (size_t s = 0; s < t.value_count(); ++s) scale = std::max(scale, std::fabs(t.value_at(s)));
    const double tol = 1e-12 * scale;

    for (size_t s = 0; s < t.value_count(); ++s) {
        const MultiIndex& idx = t.index_at(s);
        const int k = std::accumulate(idx.begin(), idx.end(), 0) - t.order();
        const double value = t.value_at(s);
        if (!seen[k]) {
            seen[k] = true;
            seen_slot[k] = s;
            v[k] = value;
        } else if (std::fabs(value - v[k]) > tol) {
            throw HankelViolation("tensor is not Hankel: equal-sum entries disagree",
                                  t.index_at(seen_slot[k]), idx);
        }
    }
    return GeneratingVector(t.order(), t.dim(), std::move(v));
}

double hankel_eval(const GeneratingVector& gv, std::span<const double> x) {
    if (static_cast<int>(x.size()) != gv.dim)
        throw InvalidInput("hankel_eval: point dimension does not match");
    const std::vector<double> powers = power_of_linear_form(x, gv.order);
    double total = 0.0;
    for (size_t k = 0; k < gv.v.size(); ++k) total += gv.v[k] * powers[k];
    return total;
}

HankelMatrix associated_hankel_matrix(const GeneratingVector& gv, std::optional<double> tail) {
    if (needs_tail(gv) && !tail)
        throw MissingTail("associated matrix needs a tail entry when (n-1)m is odd");
    if (!needs_tail(gv) && tail)
        throw InvalidInput("tail entry supplied but (n-1)m is even");

    const int l = (gv.max_index() + 2 + 1) / 2;  // ceil(((n-1)m + 2) / 2)
    std::vector<double> diags(2 * l - 1);
    for (int k = 0; k <= gv.max_index(); ++k) diags[k] = gv.v[k];
    if (tail) diags[2 * l - 2] = *tail;
    return HankelMatrix(std::move(diags), tail);
}

StrongHankelReport is_strong_hankel(const GeneratingVector& gv, double tol) {
    if (!needs_tail(gv)) {
        const double lam = min_eigenvalue(associated_hankel_matrix(gv).to_sym_matrix());
        return {lam >= -tol, lam, std::nullopt};
    }

    // The last anti-diagonal entry is free; lambda_min is concave in it, so
    // golden-section search finds the maximizer.
    const auto lam_min_at = [&](double tail) {
        return min_eigenvalue(associated_hankel_matrix(gv, tail).to_sym_matrix());
    };
    const double bound = 10.0 * max_abs(gv.v);
    if (bound == 0.0) return {true, 0.0, 0.0};

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = -bound, hi = bound;
    double m1 = hi - inv_phi * (hi - lo);
    double m2 = lo + inv_phi * (hi - lo);
    double f1 = lam_min_at(m1);
    double f2 = lam_min_at(m2);
    while (hi - lo > 1e-10 * (1.0 + bound)) {
        if (f1 < f2) {
            lo = m1;
            m1 = m2;
            f1 = f2;
            m2 = lo + inv_phi * (hi - lo);
            f2 = lam_min_at(m2);
        } else {
            hi = m2;
            m2 = m1;
            f2 = f1;
            m1 = hi - inv_phi * (hi - lo);
            f1 = lam_min_at(m1);
        }
    }
    const double tail = f1 >= f2 ? m1 : m2;
    const double lam = std::max(f1, f2);
    return {lam >= -tol, lam, tail};
}

std::uint64_t alpha_count(int m, int n, int k) {
    if (k < 0 || k > (n - 1) * m) throw InvalidInput("alpha_count: k out of range");
    // ways[s] = tuples from [1..n] with shifted sum s, where each term
    // contributes its value minus 1 (so s runs 0..(n-1)*length).
    std::vector<std::uint64_t> ways{1};
    for (int step = 0; step < m; ++step) {
        std::vector<std::uint64_t> next(ways.size() + n - 1, 0);
        for (size_t s = 0; s < ways.size(); ++s) {
            if (ways[s] == 0) continue;
            for (int d = 0; d < n; ++d) next[s + d] += ways[s];
        }
        ways = std::move(next);
    }
    return ways[k];
}

std::vector<double> chebyshev_nodes(int r) {
    std::vector<double> nodes(r);
    if (r == 1) {
        nodes[0] = 0.0;
        return nodes;
    }
    const double pi = std::acos(-1.0);
    for (int j = 0; j < r; ++j) nodes[j] = std::cos(pi * j / (r - 1));
    return nodes;
}

VandermondeDecomposition vandermonde_decompose(
    const GeneratingVector& gv, const std::optional<std::vector<double>>& nodes_in) {
    const int r = static_cast<int>(gv.v.size());

    std::vector<double> nodes;
    if (nodes_in) {
        nodes = *nodes_in;
        if (static_cast<int>(nodes.size()) != r)
            throw InvalidInput("vandermonde_decompose: need exactly (n-1)m + 1 nodes");
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (nodes[i] == nodes[j])
                    throw SingularSystem("vandermonde_decompose: repeated node");
    } else {
        if (r > 30)
            throw ConditioningError(
                "vandermonde_decompose: r > 30 cannot be certified in double precision; "
                "supply nodes explicitly");
        nodes = chebyshev_nodes(r);
    }

    Matrix vand(r, r);
    for (int i = 0; i < r; ++i) {
        double power = 1.0;
        for (int k = 0; k < r; ++k) {
            vand(k, i) = power;
            power *= nodes[i];
        }
    }
    std::vector<double> coeff = solve_linear(vand, gv.v);

    // Residual of the moment equations, relative to max |v|.
    double residual = 0.0;
    for (int k = 0; k < r; ++k) {
        double recon = 0.0;
        for (int i = 0; i < r; ++i) recon += vand(k, i) * coeff[i];
        residual = std::max(residual, std::fabs(recon - gv.v[k]));
    }
    const double tol = 1e-8 * std::max(1e-30, max_abs(gv.v));

    VandermondeDecomposition d;
    d.order = gv.order;
    d.dim = gv.dim;
    d.coefficients = std::move(coeff);
    d.nodes = std::move(nodes);
    d.residual = residual;
    d.conditioning_warning = residual > tol;
    return d;
}

SymmetricTensor reconstruct(const VandermondeDecomposition& d) {
    SymmetricTensor out(d.order, d.dim);
    for (size_t i = 0; i < d.coefficients.size(); ++i) {
        std::vector<double> u(d.dim);
        double power = 1.0;
        for (int j = 0; j < d.dim; ++j) {
            u[j] = power;
            power *= d.nodes[i];
        }
        out = add(out, scale(rank_one_power(u, d.order), d.coefficients[i]));
    }
    return out;
}

GeneratingVector moments_from_samples(const SampledGeneratingFunction& h, int order, int dim) {
    const int length = GeneratingVector::expected_length(order, dim);
    std::vector<double> v(length, 0.0);
    for (size_t j = 0; j < h.values.size(); ++j) {
        if (h.values[j] == 0.0) continue;
        const double t = h.t0 + static_cast<double>(j) * h.dt;
        double mass = h.values[j] * h.dt;
        for (int k = 0; k < length; ++k) {
            v[k] += mass;
            mass *= t;
        }
    }
    return GeneratingVector(order, dim, std::move(v));
}

}  // namespace hankel
