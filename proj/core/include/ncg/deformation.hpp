#pragma once

#include "ncg/linalg.hpp"
#include "ncg/report.hpp"
#include "ncg/rewrite.hpp"

#include <array>
#include <functional>

namespace ncg {

// Lie algebra on x^mu, L^mu, M^{mu nu} (mu < nu) deformed by kappa, with
// metric g = diag(-1, 1, 1, 1). Generator order x0..x3, L0..L3, M01, M02,
// M03, M12, M13, M23 is also the PBW order of the enveloping algebra.
class KappaAlgebra {
public:
    static constexpr std::size_t kSize = 14;
    using Vec = std::vector<Scalar>;  // coefficients on the 14 generators

    explicit KappaAlgebra(const Scalar& kappa, ParamList params = {});
    // kappa as the formal parameter "kappa"
    static KappaAlgebra symbolic();

    static std::size_t x(int mu) { return std::size_t(mu); }
    static std::size_t L(int mu) { return std::size_t(4 + mu); }
    // M^{mu nu} as (sign, index); sign 0 when mu == nu.
    static std::pair<int, std::size_t> M(int mu, int nu);
    static int metric(int mu) { return mu == 0 ? -1 : 1; }

    const Scalar& kappa() const { return kappa_; }
    const ParamList& params() const { return params_; }
    const std::vector<std::string>& names() const { return uea_.names(); }

    Vec zero() const { return Vec(kSize); }
    Vec unit(std::size_t k) const;
    Vec m_vec(int mu, int nu) const;  // M^{mu nu} with antisymmetry
    const Vec& bracket(std::size_t a, std::size_t b) const { return table_[a * kSize + b]; }
    Vec bracket(const Vec& u, const Vec& v) const;

    const Presentation& uea() const { return uea_; }
    NCPoly element(const Vec& v) const;
    NCPoly gen(std::size_t k) const { return uea_.gen(k); }
    NCPoly m_poly(int mu, int nu) const { return element(m_vec(mu, nu)); }

    // kappa g g M M + 2 g L L
    NCPoly casimir2() const;
    // g^{rho rho} W_rho W_rho with W_rho = eps_{rho lambda mu nu} L^lambda M^{mu nu}
    NCPoly casimir4() const;
    // eps_{mu nu rho sigma} M^{mu nu} M^{rho sigma}
    NCPoly pseudoscalar_mm() const;
    // casimir4 + kappa/16 (eps M M)^2, central for every kappa
    NCPoly casimir4_corrected() const;

    std::string str(const Vec& v) const;

private:
    void set(std::size_t a, std::size_t b, const Vec& v);

    ParamList params_;
    Scalar kappa_;
    std::vector<Vec> table_;
    Presentation uea_;
};

CheckReport jacobi_check(const KappaAlgebra& alg);
CheckReport bracket_antisymmetry_check(const KappaAlgebra& alg);
CheckReport uea_confluence_check(const KappaAlgebra& alg);

enum class CasimirKind { C2, C4 };
// [C, X] for every generator; the residuals are returned alongside.
struct CentralityResult {
    CheckReport report;
    std::vector<NCPoly> residuals;  // one per generator
};
CentralityResult casimir_centrality(const KappaAlgebra& alg, CasimirKind which);
CentralityResult element_centrality(const KappaAlgebra& alg, const NCPoly& c, const std::string& id);
CheckReport center_diff_check(const KappaAlgebra& alg);

// Lorentz action on constant antisymmetric tensors.
using Mat4 = std::array<std::array<GaussRat, 4>, 4>;
Mat4 rotation_generator(int i, int j);
Mat4 boost_generator(int i);
enum class SymmetryGroup { Trivial, Rotations, Lorentz };
std::vector<Mat4> symmetry_generators(SymmetryGroup g);

struct InvariantTensors {
    ScalarMatrix system;  // rows: (generator, mu < nu), cols: Omega^{mu nu}, mu < nu
    std::size_t dimension = 0;
    std::vector<Mat4> basis;
};
InvariantTensors invariant_antisym_solver(const std::vector<Mat4>& generators);
InvariantTensors invariant_antisym_solver(SymmetryGroup g);

// First-order deformation data on M_k(C): the product is matrix
// multiplication and c is an arbitrary bilinear map.
struct BilinearCocycle {
    std::size_t n = 2;
    std::function<ScalarMatrix(const ScalarMatrix&, const ScalarMatrix&)> c;
    std::string name;
};
BilinearCocycle product_cocycle(std::size_t n);
BilinearCocycle zero_cocycle(std::size_t n);
BilinearCocycle half_commutator_cocycle(std::size_t n);
ScalarMatrix cocycle_bracket(const BilinearCocycle& b, const ScalarMatrix& f, const ScalarMatrix& g);
// first-order identity on all basis triples, derivation property for central h,
// reality condition under the adjoint involution (a warn when it fails)
std::vector<CheckReport> cocycle_first_order_check(const BilinearCocycle& b);

struct OrbitInvariants {
    GaussRat alpha, beta;
};
OrbitInvariants orbit_invariants(const Mat4& omega);

// alpha_{(Lambda, a)}: x -> Lambda^-1 (x - a), L -> Lambda^-1 L, M -> Lambda^-1 Lambda^-1 M,
// extended multiplicatively and normal ordered.
class PoincareAction {
public:
    PoincareAction(const KappaAlgebra& alg, const Mat4& lambda, const std::array<GaussRat, 4>& a);
    static bool is_lorentz(const Mat4& lambda);
    const Mat4& inverse() const { return inv_; }
    NCPoly image(std::size_t generator) const { return images_.at(generator); }
    NCPoly apply(const NCPoly& e) const;

private:
    const KappaAlgebra* alg_;
    Mat4 inv_;
    std::vector<NCPoly> images_;
};

Mat4 identity4();
// boost along x^1 with rapidity data (cosh, sinh) rational
Mat4 boost_x1(const GaussRat& ch, const GaussRat& sh);

}  // namespace ncg
