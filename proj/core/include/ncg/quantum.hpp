#pragma once

#include "ncg/linalg.hpp"
#include "ncg/report.hpp"
#include "ncg/rewrite.hpp"

#include <array>
#include <map>

namespace ncg {

// Parameters shared by every quantum presentation: p, q and lam (= l^-4).
const ParamList& quantum_params();
Scalar qpow(int e);
Scalar ppow(int e);

Presentation manin_plane();
// x < y < xi < eta with the twisted relations of the differential calculus
Presentation quantum_plane_forms();
// xi, eta with xi^2 = eta^2 = 0 and eta xi = -p xi eta
Presentation exterior_pair(const Scalar& p);
// Generators of A followed by those of B, with every B generator commuting past every A generator.
Presentation combine(const Presentation& a, const Presentation& b);
// Substitute parameter values into every rule.
Presentation specialize(const Presentation& pres, const std::map<std::string, GaussRat>& point);
// Image of e under the algebra map sending generator k to images[k], normal ordered in target.
NCPoly substitute(const NCPoly& e, const std::vector<NCPoly>& images, const Presentation& target);

// Sum of P_k D^{-k} with every power of D^-1 pushed to the right.
struct Localized {
    std::map<int, NCPoly> parts;
};

// Element of A (x) A as a map (left word, right word) -> coefficient, both words normal.
struct PairPoly {
    std::map<std::pair<Word, Word>, Scalar> terms;
    void add(const Word& l, const Word& r, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const PairPoly& a, const PairPoly& b) { return a.terms == b.terms; }
};

// GL_{p,q}(2) with p given as a unit Scalar (the symbol p, q, q^-1, ...).
class QuantumGroup {
public:
    explicit QuantumGroup(const Scalar& p);
    static QuantumGroup generic();  // p symbolic
    static QuantumGroup sl_q();     // p = q^-1
    static QuantumGroup equal_pq(); // p = q

    const Presentation& algebra() const { return alg_; }
    const Scalar& p() const { return p_; }
    NCPoly entry(int i, int j) const;  // i, j in {0, 1}: a b / c d
    NCPoly det() const;                // ad - p bc
    NCPoly det_alt() const;            // da - q^-1 bc
    // the six defining relations written as polynomials that must vanish
    std::vector<std::pair<std::string, NCPoly>> relations() const;

    // localization by D
    Localized local(const NCPoly& p, int dinv_power = 0) const;
    Localized mul(const Localized& a, const Localized& b) const;
    Localized add(const Localized& a, const Localized& b, const Scalar& cb = Scalar(1)) const;
    bool equal(const Localized& a, const Localized& b) const;
    // D^-k P D^k
    NCPoly twist(const NCPoly& p, int k) const;
    NCPoly det_power(int k) const;
    std::string str(const Localized& l) const;

    // Hopf structure
    PairPoly coproduct(const NCPoly& e) const;
    PairPoly pair_mul(const PairPoly& a, const PairPoly& b) const;
    PairPoly tensor(const NCPoly& l, const NCPoly& r) const;
    Scalar counit(const NCPoly& e) const;
    Localized antipode(const NCPoly& e) const;
    Localized antipode(const Localized& e) const;
    // the printed candidate D (a, pq b; c/(pq), d) for the inverse antipode
    NCPoly antipode_inverse_candidate(std::size_t generator) const;
    // S^-1 derived from S^2: S^-1(M) = D^-1 (d, -p b; -c/p, a)
    Localized antipode_inverse(const NCPoly& e) const;
    Localized antipode_inverse(const Localized& e) const;

private:
    Localized antihom(const NCPoly& e, const std::array<Localized, 4>& images, const Localized& det_image) const;

    Scalar p_;
    Presentation alg_;
};

// Braid matrix on pairs (11, 12, 21, 22).
ScalarMatrix r_hat();
// sigma on the basis xi(x)xi, xi(x)eta, eta(x)xi, eta(x)eta; column j is the image of basis j
ScalarMatrix sigma_matrix();

// 16 components of R a a - a a R, indexed (i, j, m, n) -> 8i + 4j + 2m + n
std::vector<NCPoly> rtt_components(const QuantumGroup& g);
// three relation families built from the braid matrix, as polynomials in quantum_plane_forms()
std::vector<NCPoly> braid_relation_families();

// Tensor powers of one-forms on the quantum plane with x, y coefficients on the left.
class QuantumPlane {
public:
    using Index = std::vector<int>;  // 0 = xi, 1 = eta
    struct Tensor {
        std::map<Index, NCPoly> terms;
        bool is_zero() const { return terms.empty(); }
        friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms == b.terms; }
    };

    QuantumPlane();
    const Presentation& forms() const { return forms_; }
    NCPoly coord(int k) const;  // x, y
    NCPoly diff(int k) const;   // xi, eta
    NCPoly theta() const;       // x eta - q y xi
    // exterior derivative of a polynomial in x, y
    NCPoly d(const NCPoly& f) const;

    Tensor one_form(const NCPoly& alpha) const;
    Tensor basis(const Index& idx) const;
    Tensor add(const Tensor& a, const Tensor& b, const Scalar& cb = Scalar(1)) const;
    Tensor left_mul(const NCPoly& f, const Tensor& t) const;
    Tensor right_mul(const Tensor& t, const NCPoly& g) const;
    Tensor tensor(const Tensor& a, const Tensor& b) const;
    Tensor sigma(const Tensor& t, std::size_t pos = 0) const;
    // D xi^k = lam x^k theta (x) theta, extended by the left Leibniz rule
    Tensor connection(const Tensor& one_form) const;
    // D(alpha (x) beta) = D alpha (x) beta + (sigma (x) id)(alpha (x) D beta)
    Tensor prolonged_connection(const Tensor& two_tensor) const;
    // image of the first two slots in the exterior algebra; result keys (0, 1, ...)
    Tensor wedge_first_two(const Tensor& t) const;
    std::string str(const Tensor& t) const;

    // curvature two-form coefficients (of xi eta) as displayed, lam * prefactor * matrix
    std::array<std::array<NCPoly, 2>, 2> curvature_data() const;
    static Scalar curvature_prefactor();

private:
    std::map<int, NCPoly> move_left(int form, const NCPoly& g) const;

    Presentation forms_;
};

// Whether q is a root of unity of order at most 24.
bool is_root_of_unity(const GaussRat& q);

// Checks, grouped by topic. Every report carries a stable id.
std::vector<CheckReport> quantum_rewrite_checks();
std::vector<CheckReport> covariance_checks();
std::vector<CheckReport> qdet_checks(const QuantumGroup& g);
std::vector<CheckReport> hopf_checks(const QuantumGroup& g);
std::vector<CheckReport> rtt_checks();
std::vector<CheckReport> sigma_checks(const QuantumPlane& qp);
std::vector<CheckReport> connection_checks(const QuantumPlane& qp);
std::vector<CheckReport> specialization_checks();
// evaluation at a user supplied q (and optionally p)
std::vector<CheckReport> quantum_evaluation_checks(const GaussRat& q);

}  // namespace ncg
