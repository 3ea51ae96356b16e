#include "hankel/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

bool all_finite(std::span<const double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

double sign_of(double value, double sign_source) {
    return sign_source >= 0.0 ? std::fabs(value) : -std::fabs(value);
}

}  // namespace

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

SymMatrix SymMatrix::from_dense(const Matrix& a) {
    SymMatrix s(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j)
            s.set(i, j, 0.5 * (a(i, j) + a(j, i)));
    return s;
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix s(n);
    for (int i = 0; i < n; ++i) s.set(i, i, 1.0);
    return s;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
}

double SymMatrix::quadratic_form(std::span<const double> y) const {
    double total = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (int j = 0; j < dim_; ++j) row += (*this)(i, j) * y[j];
        total += y[i] * row;
    }
    return total;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double c) {
    for (double& x : data_) x *= c;
    return *this;
}

double frobenius_dot(const SymMatrix& a, const SymMatrix& b) {
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) sum += a(i, j) * b(i, j);
    return sum;
}

// ---------------------------------------------------------------------------
// Symmetric eigendecomposition: cyclic Jacobi with threshold sweeps.
// ---------------------------------------------------------------------------

SpectralDecomposition sym_eig(const SymMatrix& s) {
    const int n = s.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(s(i, j))) throw InvalidInput("sym_eig: non-finite entry");

    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = s(i, j);
    Matrix vec = Matrix::identity(n);

    double norm = s.frobenius_norm();
    const double off_target = 1e-12 * norm;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
        double off2 = 0.0;
        double abs_sum = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                off2 += 2.0 * a(p, q) * a(p, q);
                abs_sum += std::fabs(a(p, q));
            }
        if (std::sqrt(off2) <= off_target) break;

        // Early sweeps skip rotations on entries that are small relative to
        // the remaining off-diagonal mass; later sweeps rotate everything.
        const double thresh = sweep < 3 ? 0.2 * abs_sum / (n * n) : 0.0;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= thresh) continue;

                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = sign_of(1.0, theta) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                const double tau = sn / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p);
                        const double arq = a(r, q);
                        a(r, p) = a(p, r) = arp - sn * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + sn * (arp - tau * arq);
                    }
                    const double vrp = vec(r, p);
                    const double vrq = vec(r, q);
                    vec(r, p) = vrp - sn * (vrq + tau * vrp);
                    vec(r, q) = vrq + sn * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = vec(i, order[j]);
    }
    return out;
}

SymMatrix psd_project(const SymMatrix& s) {
    const SpectralDecomposition eig = sym_eig(s);
    const int n = s.dim();
    SymMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lambda = std::max(eig.eigenvalues[k], 0.0);
        if (lambda == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                out.set(i, j, out(i, j) + lambda * eig.eigenvectors(i, k) * eig.eigenvectors(j, k));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Real polynomial roots: balanced companion matrix + Hessenberg QR.
// ---------------------------------------------------------------------------

namespace {

// Parlett-Reinsch style balancing by powers of two; preserves eigenvalues
// and the Hessenberg zero pattern (diagonal similarity).
void balance_matrix(Matrix& a) {
    const int n = a.rows();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            double row_norm = 0.0;
            double col_norm = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                row_norm += std::fabs(a(i, j));
                col_norm += std::fabs(a(j, i));
            }
            if (row_norm == 0.0 || col_norm == 0.0) continue;

            int exponent = 0;
            std::frexp(row_norm / col_norm, &exponent);
            exponent /= 2;
            if (exponent == 0) continue;

            const double scaled_col = std::ldexp(col_norm, exponent);
            const double scaled_row = std::ldexp(row_norm, -exponent);
            if (scaled_col + scaled_row < 0.9 * (col_norm + row_norm)) {
                changed = true;
                const double up = std::ldexp(1.0, exponent);
                const double down = std::ldexp(1.0, -exponent);
                for (int j = 0; j < n; ++j) {
                    a(i, j) *= down;
                    a(j, i) *= up;
                }
            }
        }
    }
}

// Eigenvalues of an upper Hessenberg matrix by the Francis double-shift QR
// iteration (classic hqr). Destroys a.
void hessenberg_eigenvalues(Matrix& a, std::vector<double>& wr, std::vector<double>& wi) {
    const int n = a.rows();
    wr.assign(n, 0.0);
    wi.assign(n, 0.0);
    const double eps = std::numeric_limits<double>::epsilon();

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::fabs(a(i, j));

    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::fabs(a(l - 1, l - 1)) + std::fabs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::fabs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) {  // one real eigenvalue isolated
                wr[nn] = x + t;
                wi[nn] = 0.0;
                --nn;
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {  // 2x2 block isolated
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::fabs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn] = z;
                        wi[nn - 1] = -z;
                    }
                    nn -= 2;
                } else {
                    if (its == 120) throw Error("real_roots: QR iteration failed to converge");
                    if (its % 10 == 0 && its > 0) {  // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        double s = std::fabs(a(nn, nn - 1)) + std::fabs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    int m;
                    for (m = nn - 2; m >= l; --m) {
                        z = a(m, m);
                        double rr = x - z;
                        double ss = y - z;
                        p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - rr - ss;
                        r = a(m + 2, m + 1);
                        double scale = std::fabs(p) + std::fabs(q) + std::fabs(r);
                        p /= scale;
                        q /= scale;
                        r /= scale;
                        if (m == l) break;
                        const double u = std::fabs(a(m, m - 1)) * (std::fabs(q) + std::fabs(r));
                        const double v = std::fabs(p) * (std::fabs(a(m - 1, m - 1)) +
                                                         std::fabs(z) + std::fabs(a(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = k != nn - 1 ? a(k + 2, k - 1) : 0.0;
                            x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {  // row modification
                            double pp = a(k, j) + q * a(k + 1, j);
                            if (k != nn - 1) {
                                pp += r * a(k + 2, j);
                                a(k + 2, j) -= pp * z;
                            }
                            a(k + 1, j) -= pp * y;
                            a(k, j) -= pp * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {  // column modification
                            double pp = x * a(i, k) + y * a(i, k + 1);
                            if (k != nn - 1) {
                                pp += z * a(i, k + 2);
                                a(i, k + 2) -= pp * r;
                            }
                            a(i, k + 1) -= pp * q;
                            a(i, k) -= pp;
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
}

}  // namespace

double polynomial_eval(std::span<const double> coeffs, double t) {
    double value = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) value = value * t + coeffs[i];
    return value;
}

std::vector<double> real_roots(std::span<const double> coeffs) {
    if (!all_finite(coeffs)) throw InvalidInput("real_roots: non-finite coefficient");

    // Strip the leading (highest-degree) zero coefficients.
    size_t top = coeffs.size();
    while (top > 0 && coeffs[top - 1] == 0.0) --top;
    if (top == 0) throw InvalidInput("real_roots: zero polynomial");

    const int degree = static_cast<int>(top) - 1;
    if (degree == 0) return {};
    if (degree == 1) return {-coeffs[0] / coeffs[1]};

    Matrix companion(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[i] / coeffs[degree];

    balance_matrix(companion);

    std::vector<double> wr, wi;
    hessenberg_eigenvalues(companion, wr, wi);

    std::vector<double> roots;
    for (int i = 0; i < degree; ++i)
        if (std::fabs(wi[i]) <= 1e-8 * (1.0 + std::fabs(wr[i]))) roots.push_back(wr[i]);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> solve_linear(const Matrix& a, std::span<const double> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw InvalidInput("solve_linear: shape mismatch");

    double norm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm += a(i, j) * a(i, j);
    norm = std::sqrt(norm);
    const double pivot_floor = 1e-12 * norm;

    Matrix lu = a;
    std::vector<double> x(b.begin(), b.end());

    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(lu(i, col)) > std::fabs(lu(pivot_row, col))) pivot_row = i;
        if (std::fabs(lu(pivot_row, col)) <= pivot_floor)
            throw SingularSystem("solve_linear: pivot below 1e-12 * ||A||");
        if (pivot_row != col) {
            for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot_row, j));
            std::swap(x[col], x[pivot_row]);
        }
        for (int i = col + 1; i < n; ++i) {
            const double factor = lu(i, col) / lu(col, col);
            if (factor == 0.0) continue;
            for (int j = col; j < n; ++j) lu(i, j) -= factor * lu(col, j);
            x[i] -= factor * x[col];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double sum = x[i];
        for (int j = i + 1; j < n; ++j) sum -= lu(i, j) * x[j];
        x[i] = sum / lu(i, i);
    }
    return x;
}

}  // namespace hankel
