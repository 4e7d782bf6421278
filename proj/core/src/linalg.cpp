#include "ncg/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncg {

ScalarMatrix ScalarMatrix::identity(std::size_t n, const Scalar& diag) {
    ScalarMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = diag;
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    ScalarMatrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m(r, k) = rows[r][k];
    }
    return m;
}

bool ScalarMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ScalarMatrix::is_constant() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_constant(); });
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ScalarMatrix ScalarMatrix::adjoint() const {
    ScalarMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

Scalar ScalarMatrix::trace() const {
    Scalar s;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) s += (*this)(k, k);
    return s;
}

Scalar ScalarMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return Scalar(1);
    if (n > 24) throw std::invalid_argument("determinant: matrix too large for expansion");
    // Expansion along successive rows, memoized over the set of used columns.
    std::vector<Scalar> dp(std::size_t(1) << n);
    dp[0] = Scalar(1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int r = __builtin_popcount(mask) - 1;
        Scalar acc;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const Scalar& e = (*this)(r, c);
            if (e.is_zero()) continue;
            const Scalar& sub = dp[mask & ~(1u << c)];
            if (sub.is_zero()) continue;
            int above = __builtin_popcount(mask >> (c + 1));
            Scalar t = e * sub;
            if (above & 1)
                acc -= t;
            else
                acc += t;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(1u << n) - 1];
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ScalarMatrix& ScalarMatrix::operator*=(const Scalar& s) {
    for (auto& e : data_) e *= s;
    return *this;
}

ScalarMatrix ScalarMatrix::operator-() const {
    ScalarMatrix r = *this;
    for (auto& e : r.data_) e = -e;
    return r;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ScalarMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& e = a(i, k);
            if (e.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& f = b(k, j);
                if (!f.is_zero()) r(i, j) += e * f;
            }
        }
    return r;
}

std::string ScalarMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
    }
    os << "]";
    return os.str();
}

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; }

LinearSolution solve_linear(const ScalarMatrix& mat, const ScalarMatrix& rhs) {
    if (mat.rows() != rhs.rows()) throw std::invalid_argument("solve_linear: row count mismatch");
    const std::size_t m = mat.rows(), n = mat.cols(), k = rhs.cols();
    ScalarMatrix a(m, n + k);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = mat(r, c);
        for (std::size_t c = 0; c < k; ++c) a(r, n + c) = rhs(r, c);
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = m;
        bool nonunit = false;
        for (std::size_t r = row; r < m; ++r) {
            if (a(r, col).is_zero()) continue;
            if (a(r, col).is_unit()) {
                piv = r;
                break;
            }
            nonunit = true;
        }
        if (piv == m) {
            if (nonunit) throw std::domain_error("solve_linear: no unit pivot in column " + std::to_string(col));
            continue;
        }
        if (piv != row)
            for (std::size_t c = 0; c < n + k; ++c) std::swap(a(piv, c), a(row, c));
        Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < n + k; ++c) a(row, c) = a(row, c) * inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Scalar f = a(r, col);
            for (std::size_t c = col; c < n + k; ++c)
                if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    LinearSolution sol;
    sol.rank = pivot_cols.size();
    sol.consistent = true;
    for (std::size_t r = sol.rank; r < m; ++r)
        for (std::size_t c = n; c < n + k; ++c)
            if (!a(r, c).is_zero()) sol.consistent = false;
    sol.particular = ScalarMatrix(n, k);
    for (std::size_t p = 0; p < pivot_cols.size(); ++p)
        for (std::size_t c = 0; c < k; ++c) sol.particular(pivot_cols[p], c) = a(p, n + c);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n);
        v[f] = Scalar(1);
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) v[pivot_cols[p]] = -a(p, f);
        sol.kernel.push_back(std::move(v));
    }
    sol.reduced = std::move(a);
    return sol;
}

ScalarMatrix inverse(const ScalarMatrix& mat) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto sol = solve_linear(mat, ScalarMatrix::identity(mat.rows()));
    if (sol.rank != mat.rows()) throw std::domain_error("matrix is singular");
    return sol.particular;
}

namespace {

Eigen::MatrixXd to_real(const ScalarMatrix& mat) {
    Eigen::MatrixXd m(mat.rows(), mat.cols());
    for (std::size_t r = 0; r < mat.rows(); ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            const Scalar& s = mat(r, c);
            if (!s.is_constant()) throw std::invalid_argument("eigen_numeric: entry is not a number");
            GaussRat v = s.constant_term();
            if (!v.is_real()) throw std::invalid_argument("eigen_numeric: entry is not real");
            m(r, c) = v.re().get_d();
        }
    return m;
}

void require_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigen_numeric: matrix not square");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eigen_numeric: matrix not symmetric");
}

std::vector<double> symmetric_eigen(const Eigen::MatrixXd& m) {
    require_symmetric(m);
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

std::vector<double> eigen_numeric(const ScalarMatrix& mat) { return symmetric_eigen(to_real(mat)); }

std::vector<double> eigen_numeric(const std::vector<std::vector<double>>& mat) {
    Eigen::MatrixXd m(mat.size(), mat.empty() ? 0 : mat[0].size());
    for (std::size_t r = 0; r < mat.size(); ++r)
        for (std::size_t c = 0; c < mat[r].size(); ++c) m(r, c) = mat[r][c];
    return symmetric_eigen(m);
}

std::vector<double> eigen_generalized(const ScalarMatrix& m, const ScalarMatrix& k) {
    Eigen::MatrixXd a = to_real(m), b = to_real(k);
    require_symmetric(a);
    require_symmetric(b);
    if (a.rows() == 0) return {};
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, b, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::domain_error("eigen_generalized: metric not positive definite");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
    std::sort(ev.begin(), ev.end());
    return ev;
}

int permutation_sign(std::span<const int> idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    return sign;
}

GaussRat levi_civita(std::span<const int> indices) {
    for (int v : indices)
        if (v < 0 || v >= int(indices.size())) throw std::invalid_argument("levi_civita: index out of range");
    return GaussRat(long(permutation_sign(indices)));
}

}  // namespace ncg
