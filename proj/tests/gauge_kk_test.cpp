#include "generators.hpp"
#include "ncg/gauge_kk.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ncg;

namespace {

const Scalar kI(GaussRat::i());

// polynomial of degree <= 2 in x0..x3
Scalar random_poly(prop::Gen& gen, int max_terms = 3) {
    Scalar s;
    int terms = int(gen.integer(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        int deg = int(gen.integer(0, 2));
        for (int j = 0; j < deg; ++j) e[std::size_t(gen.integer(0, 3))] += 1;
        s += Scalar::monomial(kk_params(), e, gen.gauss());
    }
    return s;
}

Mat random_poly_matrix(prop::Gen& gen, std::size_t n) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (gen.coin()) m(r, c) = random_poly(gen, 2);
    return m;
}

Form random_hybrid(prop::Gen& gen, const KaluzaKlein& kk, int degree, int terms = 3) {
    Form w(kk.n());
    for (int t = 0; t < terms; ++t) {
        Mask m = 0;
        while (degree_of(m) < degree) m |= Mask(1) << gen.integer(0, long(kk.legs()) - 1);
        w.add(m, random_poly_matrix(gen, kk.n()));
    }
    return w;
}

GaugeFields random_fields(prop::Gen& gen, std::size_t dim) {
    GaugeFields f = GaugeFields::zero(dim);
    for (auto& s : f.A0) s = random_poly(gen, 2);
    for (auto& row : f.A)
        for (auto& s : row) s = random_poly(gen, 2);
    for (auto& s : f.B0) s = random_poly(gen, 2);
    for (auto& row : f.B)
        for (auto& s : row) s = random_poly(gen, 2);
    return f;
}

GaugeFields constant_fields(const RatTensor2& b) {
    GaugeFields f = GaugeFields::zero(b.size());
    for (std::size_t m = 0; m < b.size(); ++m)
        for (std::size_t l = 0; l < b.size(); ++l) f.B[m][l] = Scalar(b[m][l]);
    return f;
}

bool all_zero(const Tensor2& t) {
    for (const auto& r : t)
        for (const auto& s : r)
            if (!s.is_zero()) return false;
    return true;
}

bool all_zero(const Tensor3& t) {
    for (const auto& r : t)
        if (!all_zero(r)) return false;
    return true;
}

}  // namespace

TEST(GaugeKK, SplitDerivation) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    auto d0 = kk.basis_field(0);
    auto [s0, i0] = kk.split(d0);
    EXPECT_EQ(s0.components, d0.components);
    for (const auto& c : i0.components) EXPECT_TRUE(c.is_zero());

    Derivation x = kk.basis_field(kSpacetimeDim);
    x.components[kSpacetimeDim] = kk_coordinate(0) * kk.internal().unit();
    auto [s1, i1] = kk.split(x);
    for (const auto& c : s1.components) EXPECT_TRUE(c.is_zero());
    EXPECT_EQ(i1.components, x.components);
}

TEST(GaugeKK, MixedBracketVanishes) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    prop::Gen gen(31);
    for (int t = 0; t < 20; ++t) {
        Mat f = random_poly_matrix(gen, 2);
        for (std::size_t mu = 0; mu < kSpacetimeDim; ++mu)
            for (std::size_t k = 0; k < kk.internal_dim(); ++k) {
                std::size_t leg = kSpacetimeDim + k;
                EXPECT_TRUE((kk.partial(mu, kk.partial(leg, f)) - kk.partial(leg, kk.partial(mu, f))).is_zero());
            }
    }
}

TEST(GaugeKK, HybridDifferentialExamples) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    const auto& a = kk.internal();
    EXPECT_TRUE(kk.d(Form::zero_form(Scalar(GaussRat::frac(3, 7)) * a.unit())).is_zero());

    // constant Phi^m E_m: only the internal term Phi^m C_km^l E_l theta^k
    std::vector<GaussRat> phi{GaussRat(2), GaussRat::frac(-1, 3), GaussRat(5)};
    Mat f(2, 2);
    for (std::size_t m = 0; m < 3; ++m) f += Scalar(phi[m]) * a.E(m);
    Form expect(2);
    for (std::size_t k = 0; k < 3; ++k) {
        Mat c(2, 2);
        for (std::size_t m = 0; m < 3; ++m)
            for (std::size_t l = 0; l < 3; ++l) c += Scalar(phi[m] * a.C(k, m, l)) * a.E(l);
        expect.add(KaluzaKlein::theta(k), c);
    }
    EXPECT_EQ(kk.d(Form::zero_form(f)), expect);

    Form x0e1 = Form::zero_form(kk_coordinate(0) * a.E(0));
    Form once = kk.d(x0e1);
    EXPECT_EQ(once.coefficient(KaluzaKlein::dx(0)), a.E(0));
    EXPECT_TRUE(kk.d(once).is_zero());
}

TEST(GaugeKK, HybridDSquaredRandomized) {
    for (std::size_t n : {2u, 3u}) {
        KaluzaKlein kk(MatrixAlgebra::build(n));
        prop::Gen gen(40 + n);
        for (int t = 0; t < 25; ++t) {
            Form w = random_hybrid(gen, kk, int(gen.integer(0, 2)));
            EXPECT_TRUE(kk.d(kk.d(w)).is_zero());
        }
    }
}

TEST(GaugeKK, HybridLegsAnticommute) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    Form dx1 = Form::generator(2, 1, kk.internal().unit());
    Form th = Form::generator(2, kSpacetimeDim + 2, kk.internal().unit());
    EXPECT_EQ(wedge(dx1, th), -wedge(th, dx1));
    EXPECT_EQ(KaluzaKlein::bidegree(KaluzaKlein::dx(1) | KaluzaKlein::theta(2) | KaluzaKlein::theta(0)),
              std::make_pair(1, 2));
}

TEST(GaugeKK, ConnectionRoundTrip) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    prop::Gen gen(5);
    for (int t = 0; t < 10; ++t) {
        GaugeFields f = random_fields(gen, 3);
        EXPECT_EQ(kk.fields_of(kk.connection(f)), f);
    }
    EXPECT_THROW(kk.fields_of(Form::zero_form(kk.internal().unit())), std::invalid_argument);
    Form two = Form::monomial(KaluzaKlein::dx(0) | KaluzaKlein::dx(1), kk.internal().unit());
    EXPECT_THROW(kk.field_strength(two), std::invalid_argument);
}

TEST(GaugeKK, FieldStrengthExamples) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    // the zero form is the connection with B = delta and everything else 0
    FieldStrength zero = kk.field_strength(Form(2));
    EXPECT_TRUE(all_zero(zero.F0) && all_zero(zero.G) && all_zero(zero.DB0) && all_zero(zero.DB) &&
                all_zero(zero.Gpot0) && all_zero(zero.Gpot));

    FieldStrength at_b0 = kk.field_strength(kk.connection(GaugeFields::zero(3)));
    EXPECT_TRUE(all_zero(at_b0.Gpot) && all_zero(at_b0.Gpot0));

    FieldStrength at_delta = kk.field_strength(kk.connection(constant_fields(identity_vacuum(3))));
    EXPECT_TRUE(all_zero(at_delta.Gpot));

    GaugeFields ab = GaugeFields::zero(3);
    ab.A0[0] = kk_coordinate(1);
    FieldStrength fs = kk.field_strength(kk.connection(ab));
    EXPECT_EQ(fs.F0[0][1], Scalar(-1));
    EXPECT_EQ(fs.F0[1][0], Scalar(1));
    EXPECT_TRUE(all_zero(fs.G) && all_zero(fs.DB) && all_zero(fs.Gpot));
}

TEST(GaugeKK, FieldStrengthMatchesClosedFormsRandomized) {
    for (std::size_t n : {2u, 3u}) {
        KaluzaKlein kk(MatrixAlgebra::build(n));
        prop::Gen gen(60 + n);
        int trials = n == 2 ? 15 : 4;
        for (int t = 0; t < trials; ++t) {
            GaugeFields f = random_fields(gen, kk.internal_dim());
            Form a = kk.connection(f);
            FieldStrength fs = kk.field_strength(a);
            EXPECT_EQ(fs, kk.field_strength_closed(f));
            EXPECT_EQ(kk.reassemble(fs), kk.curvature(a));
        }
    }
}

TEST(GaugeKK, ScaleFactors) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    RatTensor2 b = identity_vacuum(3);
    b[0][0] = GaussRat(2);
    FieldStrength fs = kk.field_strength(kk.connection(constant_fields(b)));
    bool some = false;
    for (const auto& m : fs.Gpot)
        for (const auto& r : m)
            for (const auto& s : r)
                if (!s.is_zero()) {
                    some = true;
                    // every term carries exactly minv^2
                    EXPECT_EQ(s.derivative("minv").derivative("minv"), Scalar(2) * s * kk_minv(-2));
                }
    EXPECT_TRUE(some);
}

TEST(GaugeKK, AbelianGaugeInvariance) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    prop::Gen gen(8);
    for (int t = 0; t < 10; ++t) {
        GaugeFields f = random_fields(gen, 3);
        Scalar lam = random_poly(gen, 3) + Scalar::monomial(kk_params(), Exponents{1, 1, 1, 0}, GaussRat(1));
        GaugeFields g = f;
        for (std::size_t mu = 0; mu < kSpacetimeDim; ++mu) g.A0[mu] += lam.derivative(std::string("x") + char('0' + mu));
        EXPECT_EQ(kk.field_strength(kk.connection(f)).F0, kk.field_strength(kk.connection(g)).F0);
    }
}

TEST(GaugeKK, ConstantUnitaryGaugeCovariance) {
    KaluzaKlein kk(MatrixAlgebra::build(2));
    const auto& a = kk.internal();
    prop::Gen gen(9);
    auto unitaries = finite_unitary_set(2);
    for (int t = 0; t < 6; ++t) {
        const Mat& u = unitaries[std::size_t(gen.integer(0, long(unitaries.size()) - 1))];
        ASSERT_EQ(u.adjoint() * u, a.unit());
        GaugeFields f = random_fields(gen, 3);
        Form A = kk.connection(f);
        Form A2 = kk.gauge_transform(A, u);
        Mat uinv = u.adjoint();
        EXPECT_EQ(kk.curvature(A2), uinv * kk.curvature(A) * u);

        // internal part transports as phi -> U^-1 phi U
        RatTensor2 b(3, std::vector<GaussRat>(3));
        for (auto& r : b)
            for (auto& v : r) v = GaussRat(gen.integer(-2, 2));
        GaugeFields c = constant_fields(b);
        GaugeFields c2 = kk.fields_of(kk.gauge_transform(kk.connection(c), u));
        RatTensor2 moved = transport(a, b, u);
        for (std::size_t m = 0; m < 3; ++m)
            for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(c2.B[m][l], Scalar(moved[m][l]));
        EXPECT_EQ(vacuum_check(a, b).vacuum, vacuum_check(a, moved).vacuum);
    }
}

TEST(GaugeKK, VacuumCheck) {
    auto a = MatrixAlgebra::build(2);
    KaluzaKlein kk(a);
    RatTensor2 zero(3, std::vector<GaussRat>(3));
    EXPECT_TRUE(vacuum_check(a, zero).vacuum);
    EXPECT_TRUE(vacuum_check(a, identity_vacuum(3)).vacuum);

    RatTensor2 two = identity_vacuum(3);
    for (std::size_t k = 0; k < 3; ++k) two[k][k] = GaussRat(2);
    auto res = vacuum_check(a, two);
    EXPECT_FALSE(res.vacuum);
    // independent route: the theta-theta part of dA + A^A
    FieldStrength fs = kk.field_strength(kk.connection(constant_fields(two)));
    bool nonzero = false;
    for (std::size_t m = 0; m < 3; ++m)
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l) {
                EXPECT_EQ(fs.Gpot[m][k][l], Scalar(res.residual[m][k][l]) * kk_minv(2));
                nonzero = nonzero || !res.residual[m][k][l].is_zero();
            }
    EXPECT_TRUE(nonzero);
    // 2 delta: 4 C - 2 C = 2 C
    EXPECT_EQ(res.residual[2][0][1], GaussRat(2) * a.C(0, 1, 2));
}

TEST(GaugeKK, VacuaNotGaugeRelated) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        RatTensor2 zero(a.dim(), std::vector<GaussRat>(a.dim()));
        auto us = finite_unitary_set(n);
        EXPECT_FALSE(gauge_related(a, zero, identity_vacuum(a.dim()), us));
        EXPECT_FALSE(gauge_related(a, identity_vacuum(a.dim()), zero, us));
        EXPECT_TRUE(gauge_related(a, identity_vacuum(a.dim()), identity_vacuum(a.dim()), us));
    }
}

TEST(GaugeKK, RandomVacuumSearch) {
    auto a = MatrixAlgebra::build(2);
    auto found = random_vacuum_search(a, 2024, 4000, 1);
    EXPECT_FALSE(found.empty());
    for (const auto& b : found) EXPECT_TRUE(vacuum_check(a, b).vacuum);
}

namespace {

// Numeric oracle for the Higgs block: finite-difference Hessian of
// V = 1/4 sum_{k,l} h^kk' h^ll' G(F_kl, F_k'l') with the trace metric, diagonal h.
std::vector<double> higgs_oracle(const MatrixAlgebra& a, const RatTensor2& vac) {
    const std::size_t N = a.dim();
    auto potential = [&](const std::vector<double>& x) {
        // x[m * N + l] shifts B^m_l
        double v = 0;
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l)
                for (std::size_t m = 0; m < N; ++m) {
                    double g = 0;
                    for (std::size_t s = 0; s < N; ++s)
                        for (std::size_t r = 0; r < N; ++r) {
                            double c = a.C(s, r, m).to_complex().real();
                            if (c == 0) continue;
                            double bs = vac[s][k].to_complex().real() + x[s * N + k];
                            double br = vac[r][l].to_complex().real() + x[r * N + l];
                            g += c * bs * br;
                        }
                    for (std::size_t p = 0; p < N; ++p)
                        g -= a.C(k, l, p).to_complex().real() * (vac[m][p].to_complex().real() + x[m * N + p]);
                    double w = a.t_inv(k, k).to_complex().real() * a.t_inv(l, l).to_complex().real() *
                               a.t(m, m).to_complex().real();
                    v += 0.25 * w * g * g;
                }
        return v;
    };
    const std::size_t dim = N * N;
    const double h = 1e-3;
    std::vector<std::vector<double>> H(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<double> x(dim, 0.0);
            auto at = [&](double si, double sj) {
                std::vector<double> y = x;
                y[i] += si * h;
                y[j] += sj * h;
                return potential(y);
            };
            H[i][j] = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * h * h);
        }
    // kinetic t_mm' t^ll' is diagonal here; rescale to an ordinary eigenproblem
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            double ki = a.t(i / N, i / N).to_complex().real() * a.t_inv(i % N, i % N).to_complex().real();
            double kj = a.t(j / N, j / N).to_complex().real() * a.t_inv(j % N, j % N).to_complex().real();
            H[i][j] /= std::sqrt(ki * kj);
        }
    return eigen_numeric(H);
}

std::vector<std::size_t> multiplicities(const std::vector<std::pair<double, std::size_t>>& levels) {
    std::vector<std::size_t> out;
    for (const auto& l : levels) out.push_back(l.second);
    return out;
}

}  // namespace

TEST(GaugeKK, MassSpectrumAtIdentityVacuum) {
    auto a = MatrixAlgebra::build(2);
    auto s = mass_spectrum(a, identity_vacuum(3), InternalMetric::Trace);
    ASSERT_EQ(s.gauge_singlet.size(), 1u);
    EXPECT_LT(std::abs(s.gauge_singlet[0]), 1e-12 * 8);
    for (double e : s.gauge_adjoint) EXPECT_NEAR(e, 4.0, 1e-9);
    for (double e : s.scalar_singlet) EXPECT_NEAR(e, 2.0, 1e-9);

    auto levels = spectrum_levels(s.higgs);
    ASSERT_EQ(levels.size(), 3u);
    EXPECT_EQ(multiplicities(levels), (std::vector<std::size_t>{3, 1, 5}));
    EXPECT_LT(std::abs(levels[0].first), 1e-12 * 8);
    EXPECT_NEAR(levels[2].first / levels[1].first, 4.0, 1e-9);
    // B0 and the lowest massive Higgs level agree
    EXPECT_NEAR(s.scalar_singlet[0] / levels[1].first, 1.0, 1e-9);
    EXPECT_EQ(s.massless, std::vector<std::string>{"A0"});

    auto oracle = higgs_oracle(a, identity_vacuum(3));
    ASSERT_EQ(oracle.size(), s.higgs.size());
    for (std::size_t k = 0; k < oracle.size(); ++k) EXPECT_NEAR(oracle[k], s.higgs[k], 1e-4);
}

TEST(GaugeKK, MassSpectrumAtZeroVacuum) {
    auto a = MatrixAlgebra::build(2);
    RatTensor2 zero(3, std::vector<GaussRat>(3));
    auto s = mass_spectrum(a, zero, InternalMetric::Trace);
    for (double e : s.gauge_singlet) EXPECT_LT(std::abs(e), 1e-12);
    for (double e : s.gauge_adjoint) EXPECT_LT(std::abs(e), 1e-12);
    double common = s.scalar_singlet.at(0);
    EXPECT_GT(common, 0.0);
    for (double e : s.scalar_singlet) EXPECT_NEAR(e / common, 1.0, 1e-9);
    for (double e : s.higgs) EXPECT_NEAR(e / common, 1.0, 1e-9);
    EXPECT_NEAR(common, 2.0, 1e-9);
    EXPECT_EQ(s.massless, (std::vector<std::string>{"A0", "A"}));

    auto oracle = higgs_oracle(a, zero);
    for (std::size_t k = 0; k < oracle.size(); ++k) EXPECT_NEAR(oracle[k], s.higgs[k], 1e-4);
}

TEST(GaugeKK, MassRatiosStableUnderMetricChoice) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        for (const auto& vac : {RatTensor2(a.dim(), std::vector<GaussRat>(a.dim())), identity_vacuum(a.dim())}) {
            auto tr = mass_spectrum(a, vac, InternalMetric::Trace);
            auto kl = mass_spectrum(a, vac, InternalMetric::Killing);
            // g = 2n t, so every mass^2 shrinks by 2n
            double f = 2.0 * double(n);
            auto same = [&](const std::vector<double>& x, const std::vector<double>& y) {
                ASSERT_EQ(x.size(), y.size());
                for (std::size_t k = 0; k < x.size(); ++k) EXPECT_NEAR(x[k], f * y[k], 1e-9 * std::max(1.0, x[k]));
            };
            same(tr.gauge_singlet, kl.gauge_singlet);
            same(tr.gauge_adjoint, kl.gauge_adjoint);
            same(tr.scalar_singlet, kl.scalar_singlet);
            same(tr.higgs, kl.higgs);
            EXPECT_EQ(tr.massless, kl.massless);
            EXPECT_EQ(tr.massless.front(), "A0");
        }
    }
}

TEST(GaugeKK, MassSpectrumRejectsNonVacuum) {
    auto a = MatrixAlgebra::build(2);
    RatTensor2 two = identity_vacuum(3);
    two[1][1] = GaussRat(2);
    EXPECT_THROW(mass_spectrum(a, two, InternalMetric::Trace), std::invalid_argument);
}

TEST(GaugeKK, LinearConnectionTorsionMetricityCentrality) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        LinearConnection conn(a);
        for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_TRUE(conn.torsion(k).is_zero());
        EXPECT_TRUE(conn.metric_compatible(InternalMetric::Trace));
        EXPECT_TRUE(conn.metric_compatible(InternalMetric::Killing));
        EXPECT_TRUE(conn.central());
        // omega^k_(lm) = 0
        for (std::size_t k = 0; k < a.dim(); ++k)
            for (std::size_t l = 0; l < a.dim(); ++l)
                for (std::size_t m = 0; m < a.dim(); ++m) EXPECT_TRUE((conn.omega(k, l, m) + conn.omega(k, m, l)).is_zero());
    }
}

TEST(GaugeKK, CurvatureTwoRoutesAgree) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        LinearConnection conn(a);
        auto closed = conn.curvature_closed();
        EXPECT_EQ(conn.curvature_forms(), closed);
        EXPECT_EQ(conn.curvature_tensor(), closed);
    }
}

TEST(GaugeKK, CurvaturePauliValue) {
    auto a = MatrixAlgebra::build(2);
    LinearConnection conn(a);
    // 1/8 C^1_{2r} C^r_{12}: only r = 3 contributes, C_{23}^1 = C_{12}^3 = -2
    EXPECT_EQ(a.C(1, 2, 0), GaussRat(-2));
    EXPECT_EQ(conn.curvature_forms()[conn.index(0, 1, 0, 1)], GaussRat::frac(1, 2));
}
