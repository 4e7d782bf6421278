#pragma once

#include "ncg/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncg {

// Differential calculus on M_n(C) generated by the inner derivations
// d_k = ad(i E_k), with dual 1-forms theta^k (generator k is stored at bit k).
class MatrixAlgebra : public Calculus {
public:
    static MatrixAlgebra build(std::size_t n);
    static MatrixAlgebra from_basis(std::vector<Mat> basis);
    // {"n": 2, "basis": [[[["1","0"],["0","0"]], ...], ...]} with entries [re, im].
    static MatrixAlgebra from_json(const std::string& text);
    static std::vector<Mat> gell_mann_basis(std::size_t n);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Mat>& basis() const { return basis_; }
    const Mat& E(std::size_t k) const { return basis_.at(k); }
    Mat unit() const { return Mat::identity(n_); }

    // i[E_k, E_m] = C(k,m,l) E_l
    const GaussRat& C(std::size_t k, std::size_t m, std::size_t l) const { return c_[(k * dim() + m) * dim() + l]; }
    // (E_k E_m + E_m E_k)/2 = t(k,m)/n + S(k,m,j) E_j
    const GaussRat& S(std::size_t k, std::size_t m, std::size_t j) const { return s_[(k * dim() + m) * dim() + j]; }
    const GaussRat& t(std::size_t k, std::size_t m) const { return t_[k * dim() + m]; }
    const GaussRat& t_inv(std::size_t k, std::size_t m) const { return t_inv_[k * dim() + m]; }
    const GaussRat& g(std::size_t k, std::size_t m) const { return g_[k * dim() + m]; }
    // Coefficients of [d_a, d_b] measured as an operator on the algebra.
    const GaussRat& bracket(std::size_t a, std::size_t b, std::size_t l) const {
        return bracket_[(a * dim() + b) * dim() + l];
    }
    // g = ratio * t when the two are proportional.
    std::optional<GaussRat> killing_trace_ratio() const;
    bool metric_diagonal() const;

    // x = c[0] * 1 + sum_l c[l+1] E_l
    std::vector<Scalar> decompose(const Mat& x) const;
    Mat compose(const std::vector<Scalar>& coeffs) const;

    Mat partial(std::size_t leg, const Mat& f) const override;

    Form theta(std::size_t k) const;
    // -i sum_k E_k theta^k, the multiple of sum E_k theta^k with d(theta) + theta^theta = 0.
    Form canonical_theta() const;
    Form scaled_theta(const GaussRat& c) const;
    // i d(canonical_theta) = d(sum_k E_k theta^k)
    Form symplectic_form() const;
    std::size_t symplectic_rank() const;
    Derivation hamiltonian(const Mat& f) const;
    Mat poisson(const Mat& f, const Mat& g) const;

    Form hodge(const Form& w) const;
    // Factor c_p with hodge(hodge(w)) = c_p w on p-forms.
    GaussRat hodge_square_factor(int p) const;
    Scalar integrate(const Form& w) const;
    Scalar inner(const Form& a, const Form& b) const;
    Mask top_mask() const { return dim() >= 32 ? ~Mask(0) : (Mask(1) << dim()) - 1; }

private:
    MatrixAlgebra(std::size_t n, std::vector<Mat> basis);
    void compute_structure();

    std::vector<Mat> basis_;
    std::vector<GaussRat> c_, s_, t_, t_inv_, g_, bracket_;
};

}  // namespace ncg
