#pragma once

#include "ncg/scalar.hpp"

#include <span>
#include <vector>

namespace ncg {

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ScalarMatrix identity(std::size_t n, const Scalar& diag = Scalar(1));
    static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_constant() const;
    ScalarMatrix transpose() const;
    ScalarMatrix adjoint() const;
    Scalar trace() const;
    Scalar determinant() const;

    ScalarMatrix& operator+=(const ScalarMatrix& o);
    ScalarMatrix& operator-=(const ScalarMatrix& o);
    ScalarMatrix& operator*=(const Scalar& s);
    friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
    friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const Scalar& s, ScalarMatrix a) { return a *= s; }
    ScalarMatrix operator-() const;
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    template <class F>
    ScalarMatrix map(F&& f) const {
        ScalarMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = f(data_[k]);
        return r;
    }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b);

struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    ScalarMatrix particular;              // cols(mat) x cols(rhs)
    std::vector<std::vector<Scalar>> kernel;  // basis vectors of length cols(mat)
    ScalarMatrix reduced;                 // reduced echelon form of [mat | rhs]
};

// Exact Gauss-Jordan elimination. Pivots must be units (nonzero constants or
// single Laurent monomials); anything else raises std::domain_error.
LinearSolution solve_linear(const ScalarMatrix& mat, const ScalarMatrix& rhs);
ScalarMatrix inverse(const ScalarMatrix& mat);

// Eigenvalues of a real symmetric matrix, ascending.
std::vector<double> eigen_numeric(const ScalarMatrix& mat);
std::vector<double> eigen_numeric(const std::vector<std::vector<double>>& mat);
// Eigenvalues of K^{-1} M for symmetric M and symmetric positive definite K.
std::vector<double> eigen_generalized(const ScalarMatrix& m, const ScalarMatrix& k);

// Sign of the permutation, 0 on repeated entries.
GaussRat levi_civita(std::span<const int> indices);
int permutation_sign(std::span<const int> indices);

}  // namespace ncg
