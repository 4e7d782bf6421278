#pragma once

#include "ncg/matrix_geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ncg {

// Parameters of the Kaluza-Klein model: spacetime coordinates x0..x3 and the
// inverse mass scale minv.
const ParamList& kk_params();
Scalar kk_coordinate(std::size_t mu);
Scalar kk_minv(int power = 1);

constexpr std::size_t kSpacetimeDim = 4;

using Tensor2 = std::vector<std::vector<Scalar>>;
using Tensor3 = std::vector<Tensor2>;
using RatTensor2 = std::vector<std::vector<GaussRat>>;

// Components of a connection 1-form. With lambda_k = i E_k the form is
//   a_mu = A0[mu] + A[k][mu] lambda_k          on dx^mu
//   b_l  = -lambda_l + B0[l] + B[m][l] lambda_m on theta^l
// so that B = 0 is the zero connection shifted by the canonical 1-form.
struct GaugeFields {
    std::vector<Scalar> A0;  // A0[mu]
    Tensor2 A;               // A[k][mu]
    std::vector<Scalar> B0;  // B0[l]
    Tensor2 B;               // B[m][l]

    static GaugeFields zero(std::size_t dim);
    friend bool operator==(const GaugeFields&, const GaugeFields&) = default;
};

// Coefficients of F = dA + A^A on increasing monomials, split into the
// singlet and lambda_k parts. Mixed and internal parts carry minv and minv^2.
struct FieldStrength {
    Tensor2 F0;     // F0[mu][nu]
    Tensor3 G;      // G[k][mu][nu]
    Tensor2 DB0;    // DB0[mu][l]
    Tensor3 DB;     // DB[m][mu][l]
    Tensor2 Gpot0;  // Gpot0[k][l]
    Tensor3 Gpot;   // Gpot[m][k][l]

    friend bool operator==(const FieldStrength&, const FieldStrength&) = default;
};

// Hybrid forms on C(V_4) (x) M_n: legs 0..3 are dx^mu, legs 4.. are theta^k.
class KaluzaKlein : public Calculus {
public:
    explicit KaluzaKlein(MatrixAlgebra internal);

    const MatrixAlgebra& internal() const { return alg_; }
    std::size_t internal_dim() const { return alg_.dim(); }
    static Mask dx(std::size_t mu) { return Mask(1) << mu; }
    static Mask theta(std::size_t k) { return Mask(1) << (kSpacetimeDim + k); }
    // (spacetime degree, internal degree)
    static std::pair<int, int> bidegree(Mask m);
    Mat lambda(std::size_t k) const;

    Mat partial(std::size_t leg, const Mat& f) const override;
    // (spacetime part, internal part) of a vector field; both have full length.
    std::pair<Derivation, Derivation> split(const Derivation& x) const;

    Form connection(const GaugeFields& f) const;
    GaugeFields fields_of(const Form& a) const;
    Form curvature(const Form& a) const;
    FieldStrength field_strength(const Form& a) const;
    FieldStrength field_strength_closed(const GaugeFields& f) const;
    Form reassemble(const FieldStrength& fs) const;
    // U^-1 A U + U^-1 dU for an invertible constant matrix U.
    Form gauge_transform(const Form& a, const Mat& u) const;

private:
    // singlet and lambda components of a matrix
    std::vector<Scalar> lambda_components(const Mat& x) const;
    Mat from_lambda(const Scalar& singlet, const std::vector<Scalar>& comps) const;

    MatrixAlgebra alg_;
};

struct VacuumResult {
    bool vacuum = false;
    // C^m_sr B^s_k B^r_l - C^p_kl B^m_p at [m][k][l], in units of m^2
    std::vector<RatTensor2> residual;
};
VacuumResult vacuum_check(const MatrixAlgebra& a, const RatTensor2& b);
RatTensor2 identity_vacuum(std::size_t dim);

// B[m][l] of the transported multiplet phi_l -> U^-1 phi_l U.
RatTensor2 transport(const MatrixAlgebra& a, const RatTensor2& b, const Mat& u);
// Permutation matrices times phases {1, i, -1, -i}, plus rational plane rotations.
std::vector<Mat> finite_unitary_set(std::size_t n);
bool gauge_related(const MatrixAlgebra& a, const RatTensor2& from, const RatTensor2& to,
                   const std::vector<Mat>& unitaries);
// Small-integer random tensors that pass vacuum_check.
std::vector<RatTensor2> random_vacuum_search(const MatrixAlgebra& a, std::uint64_t seed, int trials, int range);

enum class InternalMetric { Trace, Killing };

struct MassSpectrum {
    InternalMetric metric = InternalMetric::Trace;
    // mass^2 in units of m^2, ascending
    std::vector<double> gauge_singlet, gauge_adjoint, scalar_singlet, higgs;
    std::vector<std::string> massless;  // families with every mass^2 zero
};

// Quadratic expansion of the action around a vacuum B (with B0 = 0).
MassSpectrum mass_spectrum(const MatrixAlgebra& a, const RatTensor2& b, InternalMetric metric);
// Distinct values of a sorted spectrum, grouped within a relative tolerance.
std::vector<std::pair<double, std::size_t>> spectrum_levels(const std::vector<double>& ev, double tol = 1e-9);

// The canonical torsion-free connection omega^r_s = -1/2 C^r_st theta^t.
class LinearConnection {
public:
    explicit LinearConnection(const MatrixAlgebra& a);

    std::size_t dim() const { return dim_; }
    const GaussRat& omega(std::size_t r, std::size_t s, std::size_t t) const { return omega_[(r * dim_ + s) * dim_ + t]; }
    Form omega_form(std::size_t r, std::size_t s) const;
    // d theta^k + omega^k_s ^ theta^s
    Form torsion(std::size_t k) const;
    // h_kr omega^r_lm + h_lr omega^r_km, zero for a metric connection
    bool metric_compatible(InternalMetric metric) const;
    // every omega coefficient commutes with every basis matrix
    bool central() const;

    // R^k_lmn with Omega^k_l = R^k_lmn theta^m theta^n summed over all m, n.
    // From the curvature 2-form d omega + omega ^ omega.
    std::vector<GaussRat> curvature_forms() const;
    // From D^2 theta^k on the tensor algebra, with the wedge as 1/2 (1 - sigma).
    std::vector<GaussRat> curvature_tensor() const;
    // 1/8 C^k_lr C^r_mn
    std::vector<GaussRat> curvature_closed() const;
    std::size_t index(std::size_t k, std::size_t l, std::size_t m, std::size_t n) const {
        return ((k * dim_ + l) * dim_ + m) * dim_ + n;
    }

private:
    MatrixAlgebra alg_;
    std::size_t dim_;
    std::vector<GaussRat> omega_;
};

}  // namespace ncg
