#pragma once

#include <span>
#include <vector>

namespace hankel {

// Dense row-major matrix. Only the operations the rest of the library
// needs; not a general linear-algebra type.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const double> data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Symmetric matrix with exact entry symmetry: every write stores both
// triangles, and from_dense() symmetrizes, so (i,j) == (j,i) always holds.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim, double fill = 0.0)
        : dim_(dim), data_(static_cast<size_t>(dim) * dim, fill) {}

    // Averages a with its transpose.
    static SymMatrix from_dense(const Matrix& a);
    static SymMatrix identity(int n);

    int dim() const { return dim_; }

    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
    void set(int i, int j, double value) {
        data_[static_cast<size_t>(i) * dim_ + j] = value;
        data_[static_cast<size_t>(j) * dim_ + i] = value;
    }

    double frobenius_norm() const;
    double quadratic_form(std::span<const double> y) const;  // y^T A y

    SymMatrix& operator+=(const SymMatrix& other);
    SymMatrix& operator-=(const SymMatrix& other);
    SymMatrix& operator*=(double c);

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(double c, SymMatrix a) { return a *= c; }

private:
    int dim_ = 0;
    std::vector<double> data_;
};

double frobenius_dot(const SymMatrix& a, const SymMatrix& b);

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column i pairs with eigenvalues[i]
};

// Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
// Stops once the off-diagonal Frobenius mass drops below 1e-12 * ||S||_F.
SpectralDecomposition sym_eig(const SymMatrix& s);

// Frobenius-nearest positive semidefinite matrix: eigenvalues clipped at zero.
SymMatrix psd_project(const SymMatrix& s);

// All real roots of a polynomial given by degree-ascending coefficients,
// sorted ascending. Roots come from the eigenvalues of the balanced
// companion matrix; eigenvalues with |imag| > 1e-8 * (1 + |real|) are
// discarded as genuinely complex.
std::vector<double> real_roots(std::span<const double> coeffs);

// Horner evaluation, degree-ascending coefficients.
double polynomial_eval(std::span<const double> coeffs, double t);

// Gaussian elimination with partial pivoting. Throws SingularSystem when a
// pivot falls below 1e-12 * ||A||_F.
std::vector<double> solve_linear(const Matrix& a, std::span<const double> b);

}  // namespace hankel
